#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "dessins/dessin.hpp"
#include "dessins/freeword.hpp"

namespace dessins {

// T = (1 1; 0 1), S = (0 -1; 1 0), U = T S (order 3 in PSL2(Z)).
ProjMatrix matrix_t();
ProjMatrix matrix_s();
ProjMatrix matrix_u();

// One representative per coset of Gamma(2) in PSL2(Z), found by BFS over
// words in T then S; the identity comes first.
std::array<ProjMatrix, 6> gamma2_transversal();

// The dessin of the same subgroup viewed inside PSL2(Z): 6n edges, black
// vertices are U-orbits (all of size 3), white vertices are S-orbits (all of
// size 2), faces are T-orbits (cusps). Edge (e, j) has label 6(e-1) + j,
// where j indexes gamma2_transversal().
struct Gamma1Dessin {
  std::size_t source_edges = 0;
  Dessin dessin;

  static Label label(Label edge, std::size_t rep) {
    return static_cast<Label>(6 * (edge - 1) + rep);
  }
};

Gamma1Dessin to_gamma1(const Dessin& d);

// Dessin file text preceded by a comment block describing the labels.
std::string format_gamma1(const Gamma1Dessin& g);

}  // namespace dessins
