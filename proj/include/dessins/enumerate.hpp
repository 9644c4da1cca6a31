#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "dessins/congruence.hpp"
#include "dessins/dessin.hpp"

namespace dessins {

inline constexpr std::size_t kMaxEnumerationEdges = 7;

// Visits every transitive pair (sigma, alpha) on {1..n}, sigma and alpha
// each in lexicographic order of their images.
void for_each_transitive_pair(
    std::size_t n,
    const std::function<void(const Permutation&, const Permutation&)>& visit);

// True iff the BFS relabelling from edge 1 (following sigma, then alpha) is
// the identity. Exactly one pair per relabelling class of {2..n} passes.
bool is_canonical_rooting(const Permutation& sigma, const Permutation& alpha);

// One dessin (marked edge 1) per subgroup of index n in Gamma(2).
void for_each_rooted_dessin(std::size_t n,
                            const std::function<void(const Dessin&)>& visit);

struct EnumerateOptions {
  bool classify = false;
  std::size_t max_cosets = kDefaultMaxCosets;
};

struct EnumerationReport {
  std::size_t n = 0;
  std::uint64_t transitive_pairs = 0;
  std::uint64_t rooted_count = 0;    // canonical rooted representatives
  std::uint64_t subgroup_count = 0;  // transitive_pairs / (n-1)!
  bool classified = false;
  std::uint64_t congruence = 0;
  std::uint64_t noncongruence = 0;
  std::uint64_t budget_exceeded = 0;
  std::uint64_t filter_certified = 0;
  std::uint64_t filter_inconclusive = 0;
};

// Throws InvariantError for n outside 1..kMaxEnumerationEdges or if the two
// counts disagree.
EnumerationReport enumerate(std::size_t n, const EnumerateOptions& options = {});

}  // namespace dessins
