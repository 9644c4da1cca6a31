#include "dessins/action.hpp"

#include <array>
#include <cstdlib>

#include "dessins/errors.hpp"

namespace dessins {

EdgeAction edge_action(const Dessin& d) {
  return EdgeAction{faces(d), inverse(d.sigma()), d.marked()};
}

CosetTable::CycleIndex CosetTable::index_cycles(const Permutation& p) {
  CycleIndex idx;
  idx.cycles = cycles(p);
  idx.cycle_of.resize(p.size());
  idx.position.resize(p.size());
  for (std::uint32_t c = 0; c < idx.cycles.size(); ++c) {
    for (std::uint32_t i = 0; i < idx.cycles[c].size(); ++i) {
      idx.cycle_of[idx.cycles[c][i] - 1] = c;
      idx.position[idx.cycles[c][i] - 1] = i;
    }
  }
  return idx;
}

CosetTable::CosetTable(Permutation a, Permutation b, Label base)
    : a_(std::move(a)), b_(std::move(b)), base_(base) {
  const std::size_t n = a_.size();
  if (b_.size() != n || n == 0) {
    throw InvariantError("coset table: generator actions of different size");
  }
  if (base_ < 1 || base_ > n) {
    throw InvariantError("coset table: base point out of range");
  }
  a_inv_ = inverse(a_);
  b_inv_ = inverse(b_);
  a_cycles_ = index_cycles(a_);
  b_cycles_ = index_cycles(b_);

  parent_.assign(n, 0);
  parent_step_.assign(n, 0);
  transversal_.assign(n, Word{});
  std::vector<bool> seen(n, false);
  seen[base_ - 1] = true;
  order_.reserve(n);
  order_.push_back(base_);

  const std::array<std::pair<const Permutation*, int>, 4> steps{{
      {&a_, +1}, {&b_, +2}, {&a_inv_, -1}, {&b_inv_, -2}}};
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Label x = order_[head];
    for (const auto& [perm, step] : steps) {
      const Label y = (*perm)(x);
      if (seen[y - 1]) continue;
      seen[y - 1] = true;
      parent_[y - 1] = x;
      parent_step_[y - 1] = step;
      Word w = transversal_[x - 1];
      w.append(std::abs(step) == 1 ? Letter::A : Letter::B, step > 0 ? 1 : -1);
      transversal_[y - 1] = std::move(w);
      order_.push_back(y);
    }
  }
  if (order_.size() != n) {
    throw InvariantError("coset table: action is not transitive");
  }
}

Label CosetTable::act(Label x, Letter l, std::int64_t k) const {
  const CycleIndex& idx = l == Letter::A ? a_cycles_ : b_cycles_;
  const Cycle& c = idx.cycles[idx.cycle_of[x - 1]];
  const auto len = static_cast<std::int64_t>(c.size());
  const std::int64_t pos = idx.position[x - 1];
  return c[static_cast<std::size_t>((((pos + k) % len) + len) % len)];
}

Label CosetTable::endpoint(Label x, const Word& w) const {
  for (const Syllable& s : w.syllables()) x = act(x, s.letter, s.exponent);
  return x;
}

std::vector<Label> CosetTable::path(Label x, const Word& w) const {
  std::vector<Label> visited{x};
  for (const Syllable& s : w.syllables()) {
    const Permutation& step = s.letter == Letter::A
                                  ? (s.exponent > 0 ? a_ : a_inv_)
                                  : (s.exponent > 0 ? b_ : b_inv_);
    for (std::int64_t i = 0; i < std::llabs(s.exponent); ++i) {
      x = step(x);
      visited.push_back(x);
    }
  }
  return visited;
}

CosetTable coset_table(const EdgeAction& action) {
  return CosetTable(action.rho_a, action.rho_b, action.base);
}

std::vector<Label> trace(const Dessin& d, const Word& w) {
  return coset_table(edge_action(d)).path(d.marked(), w);
}

bool is_member(const Dessin& d, const Word& w) {
  return coset_table(edge_action(d)).contains(w);
}

std::vector<Word> schreier_generators(const CosetTable& t) {
  std::vector<Word> gens;
  gens.reserve(t.size() + 1);
  for (const Label i : t.discovery_order()) {
    for (const Letter g : {Letter::A, Letter::B}) {
      const int step = g == Letter::A ? 1 : 2;
      const Label j = t.arrow(g)(i);
      const bool tree = (t.parent(j) == i && t.parent_step(j) == step) ||
                        (t.parent(i) == j && t.parent_step(i) == -step);
      if (tree) continue;
      Word w = t.transversal(i);
      w.append(g, 1);
      w = concat(w, invert(t.transversal(j)));
      if (!w.empty()) gens.push_back(std::move(w));
    }
  }
  return gens;
}

std::vector<Word> group_generators(const Dessin& d) {
  return schreier_generators(coset_table(edge_action(d)));
}

}  // namespace dessins
