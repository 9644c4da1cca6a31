#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

// Necessary conditions for a dessin of level 2n to be congruence, read off
// the degree data alone:
//   * every face of degree d and every vertex of degree e on it satisfy
//     2de == 0 (mod n);
//   * some vertex or face has degree exactly n.
// A violation certifies noncongruence; passing both says nothing.

enum class FilterOutcome { CertifiedNoncongruence, Inconclusive };

struct Violation {
  // Pair condition: face degree, vertex degree, and 2de mod n.
  std::uint64_t face_degree = 0;
  std::uint64_t vertex_degree = 0;
  std::uint64_t residue = 0;
  // Set instead when no feature has degree n.
  bool missing_width = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FilterVerdict {
  FilterOutcome outcome = FilterOutcome::Inconclusive;
  std::uint64_t half_level = 0;  // n, where the level is 2n
  std::vector<Violation> violations;
};

// Distinct (d, e) pairs that fail, in face order.
FilterVerdict pair_filter(const Dessin& d);
FilterVerdict width_filter(const Dessin& d);
// Violations of both filters.
FilterVerdict filters(const Dessin& d);

std::string format_violation(const Violation& v, std::uint64_t half_level);
const char* to_string(FilterOutcome outcome);

}  // namespace dessins
