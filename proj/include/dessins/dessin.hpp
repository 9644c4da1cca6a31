#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

// A bipartite graph on an oriented surface, given by the counterclockwise
// edge orders at black vertices (sigma) and white vertices (alpha), with
// one marked edge. The marked edge is the tile carrying the base point, so
// a Dessin pins down exactly one finite-index subgroup of Gamma(2).
class Dessin {
 public:
  // Throws InvariantError if sigma and alpha differ in degree, generate an
  // intransitive group, or marked is outside 1..n.
  Dessin(Permutation sigma, Permutation alpha, Label marked = 1);

  std::size_t edges() const noexcept { return sigma_.size(); }
  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& alpha() const noexcept { return alpha_; }
  Label marked() const noexcept { return marked_; }

  friend bool operator==(const Dessin&, const Dessin&) = default;

 private:
  Permutation sigma_;
  Permutation alpha_;
  Label marked_;
};

// Counterclockwise rotation inside faces: the inverse of sigma*alpha. With
// left-to-right products this is also the beta satisfying
// beta * sigma * alpha = id.
Permutation faces(const Dessin& d);

struct DegreeReport {
  std::vector<std::size_t> black_degrees;
  std::vector<std::size_t> white_degrees;
  std::vector<std::size_t> face_degrees;
  std::uint64_t level = 0;
  std::uint64_t genus = 0;
};

// Degrees are listed in canonical cycle order (including fixed points).
// level = 2 * lcm(all degrees); genus from V - E + F = 2 - 2g.
DegreeReport report(const Dessin& d);

enum class VertexColor { Black, White };

struct VertexRef {
  VertexColor color;
  std::size_t index;   // position in cycles(sigma) or cycles(alpha)
  std::size_t degree;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

struct FaceIncidence {
  Cycle face;                      // a cycle of faces(d)
  std::vector<VertexRef> vertices; // black vertices first, then white
};

// For each face, every vertex sharing at least one edge label with it.
std::vector<FaceIncidence> face_vertex_incidence(const Dessin& d);

// Line-oriented text format:
//   edges = <n>
//   sigma = <cycles>
//   alpha = <cycles>
//   marked = <label>      (optional, default 1)
// '#' starts a comment. Throws ParseError on syntax problems and
// InvariantError when the permutations do not form a valid dessin.
Dessin parse_dessin(std::string_view text);
std::string format_dessin(const Dessin& d);

// Same graph, different marked edge.
Dessin remark(const Dessin& d, Label e);

// Graphviz rendering for display. The embedding is only recorded in
// comments and in the order of the emitted edges.
std::string to_dot(const Dessin& d);

}  // namespace dessins
