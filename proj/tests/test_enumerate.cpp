#include "doctest.h"

#include "dessins/enumerate.hpp"
#include "dessins/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dessins;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("Hall recursion oracle") {
  const auto a = oracles::hall_subgroup_counts(5);
  CHECK(a[1] == 1);
  CHECK(a[2] == 3);
  CHECK(a[3] == 13);
  CHECK(a[4] == 71);
  CHECK(a[5] == 461);
}

TEST_CASE("subgroup counts match the oracle") {
  const auto expected = oracles::hall_subgroup_counts(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    const EnumerationReport r = enumerate(n);
    CHECK(r.subgroup_count == expected[n]);
    CHECK(r.rooted_count == expected[n]);
  }
}

TEST_CASE("canonical rooting picks one pair per relabelling class") {
  std::size_t count = 0;
  for_each_rooted_dessin(4, [&](const Dessin& d) {
    CHECK(d.marked() == 1);
    CHECK(is_canonical_rooting(d.sigma(), d.alpha()));
    ++count;
  });
  CHECK(count == 71);
  CHECK(is_canonical_rooting(parse_cycles("(1 2 3)", 3), Permutation::identity(3)));
  CHECK_FALSE(is_canonical_rooting(parse_cycles("(1 3 2)", 3), Permutation::identity(3)));
}

TEST_CASE("classification tallies") {
  const EnumerationReport r = enumerate(3, {.classify = true});
  CHECK(r.classified);
  CHECK(r.congruence + r.noncongruence + r.budget_exceeded == 13);
  CHECK(r.filter_certified + r.filter_inconclusive == 13);
  CHECK(r.budget_exceeded == 0);
  CHECK(r.noncongruence >= r.filter_certified);
}

TEST_CASE("classification does not depend on the root") {
  // Re-rooting each canonical dessin at every edge keeps the tallies.
  CongruenceDecider decider;
  for_each_rooted_dessin(4, [&](const Dessin& d) {
    const auto base = decider.decide(d).outcome;
    for (Label e = 2; e <= d.edges(); ++e) {
      REQUIRE(decider.decide(remark(d, e)).outcome == base);
    }
  });
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(enumerate(0), InvariantError);
  CHECK_THROWS_AS(enumerate(kMaxEnumerationEdges + 1), InvariantError);
}

TEST_SUITE_END();
