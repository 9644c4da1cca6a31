#include "dessins/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "dessins/errors.hpp"
#include "dessins/larcher.hpp"

namespace dessins {

void for_each_transitive_pair(
    std::size_t n,
    const std::function<void(const Permutation&, const Permutation&)>& visit) {
  std::vector<Permutation> all;
  std::vector<Label> images(n);
  std::iota(images.begin(), images.end(), Label{1});
  do {
    all.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));

  for (const Permutation& sigma : all) {
    for (const Permutation& alpha : all) {
      const std::array<Permutation, 2> gens{sigma, alpha};
      if (is_transitive(gens, n)) visit(sigma, alpha);
    }
  }
}

bool is_canonical_rooting(const Permutation& sigma, const Permutation& alpha) {
  const std::size_t n = sigma.size();
  std::vector<Label> relabel(n + 1, 0);
  std::vector<Label> queue{1};
  relabel[1] = 1;
  Label next = 2;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Label x = queue[head];
    for (const Permutation* p : {&sigma, &alpha}) {
      const Label y = (*p)(x);
      if (relabel[y] != 0) continue;
      if (y != next) return false;
      relabel[y] = next++;
      queue.push_back(y);
    }
  }
  return queue.size() == n;
}

void for_each_rooted_dessin(std::size_t n,
                            const std::function<void(const Dessin&)>& visit) {
  for_each_transitive_pair(n, [&](const Permutation& s, const Permutation& a) {
    if (is_canonical_rooting(s, a)) visit(Dessin(s, a, 1));
  });
}

EnumerationReport enumerate(std::size_t n, const EnumerateOptions& options) {
  if (n < 1 || n > kMaxEnumerationEdges) {
    throw InvariantError("enumeration supports 1.." +
                         std::to_string(kMaxEnumerationEdges) + " edges");
  }
  EnumerationReport r;
  r.n = n;
  r.classified = options.classify;
  CongruenceDecider decider(options.max_cosets);

  for_each_transitive_pair(n, [&](const Permutation& s, const Permutation& a) {
    ++r.transitive_pairs;
    if (!is_canonical_rooting(s, a)) return;
    ++r.rooted_count;
    if (!options.classify) return;

    const Dessin d(s, a, 1);
    if (filters(d).outcome == FilterOutcome::CertifiedNoncongruence) {
      ++r.filter_certified;
    } else {
      ++r.filter_inconclusive;
    }
    switch (decider.decide(d).outcome) {
      case CongruenceOutcome::Congruence: ++r.congruence; break;
      case CongruenceOutcome::Noncongruence: ++r.noncongruence; break;
      case CongruenceOutcome::BudgetExceeded: ++r.budget_exceeded; break;
    }
  });

  std::uint64_t relabellings = 1;
  for (std::uint64_t k = 2; k < n; ++k) relabellings *= k;
  if (r.transitive_pairs % relabellings != 0) {
    throw InvariantError("transitive pair count is not divisible by (n-1)!");
  }
  r.subgroup_count = r.transitive_pairs / relabellings;
  if (r.subgroup_count != r.rooted_count) {
    throw InvariantError("rooted and relabelling counts disagree");
  }
  return r;
}

}  // namespace dessins
