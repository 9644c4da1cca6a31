#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/freeword.hpp"
#include "dessins/perm.hpp"

namespace dessins {

// The right action of Gamma(2) on the edges (tiles) of a dessin.
// rho_a = faces(d) steps counterclockwise around a face center;
// rho_b = sigma^-1 steps clockwise around a black vertex.
struct EdgeAction {
  Permutation rho_a;
  Permutation rho_b;
  Label base;
};

EdgeAction edge_action(const Dessin& d);

// A transitive right action of the free group <A, B> on {1..N}, with a BFS
// spanning tree rooted at `base`. Generators are tried in the order
// A, B, A^-1, B^-1 from each point in discovery order.
class CosetTable {
 public:
  // Throws InvariantError if the action is not transitive.
  CosetTable(Permutation a, Permutation b, Label base);

  std::size_t size() const noexcept { return a_.size(); }
  Label base() const noexcept { return base_; }
  const Permutation& arrow(Letter l) const noexcept {
    return l == Letter::A ? a_ : b_;
  }

  // Word along the tree path from base to i; transversal(base) is empty.
  const Word& transversal(Label i) const { return transversal_[i - 1]; }

  // Points in BFS discovery order (base first).
  const std::vector<Label>& discovery_order() const noexcept { return order_; }

  // Tree edge into i: the point it was discovered from and the signed step
  // (+1 = A, +2 = B, -1 = A^-1, -2 = B^-1). Zero for the base.
  Label parent(Label i) const { return parent_[i - 1]; }
  int parent_step(Label i) const { return parent_step_[i - 1]; }

  // x acted on by l^k.
  Label act(Label x, Letter l, std::int64_t k) const;

  // Fold the word left to right starting at x.
  Label endpoint(Label x, const Word& w) const;

  // Every point visited letter by letter; length is w.length() + 1.
  std::vector<Label> path(Label x, const Word& w) const;

  // True iff w fixes the base.
  bool contains(const Word& w) const { return endpoint(base_, w) == base_; }

 private:
  struct CycleIndex {
    std::vector<Cycle> cycles;
    std::vector<std::uint32_t> cycle_of;
    std::vector<std::uint32_t> position;
  };
  static CycleIndex index_cycles(const Permutation& p);

  Permutation a_, b_;
  Permutation a_inv_, b_inv_;
  CycleIndex a_cycles_, b_cycles_;
  Label base_;
  std::vector<Label> order_;
  std::vector<Label> parent_;
  std::vector<int> parent_step_;
  std::vector<Word> transversal_;
};

CosetTable coset_table(const EdgeAction& action);

// Edges visited while folding w from the marked edge.
std::vector<Label> trace(const Dessin& d, const Word& w);

// Membership of w in the subgroup of Gamma(2) represented by d.
bool is_member(const Dessin& d, const Word& w);

// Schreier generators of the point stabilizer of the base: one freely
// reduced word t_i g t_{g(i)}^-1 per non-tree arrow (i, g), g in {A, B},
// points taken in discovery order. There are exactly size() + 1.
std::vector<Word> schreier_generators(const CosetTable& t);

// Free generators of the subgroup represented by d (d.edges() + 1 words).
std::vector<Word> group_generators(const Dessin& d);

}  // namespace dessins
