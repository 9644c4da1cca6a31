#include "doctest.h"

#include <random>

#include "dessins/errors.hpp"
#include "dessins/perm.hpp"
#include "fixtures.hpp"

using namespace dessins;

TEST_SUITE_BEGIN("perm");

TEST_CASE("compose applies the left factor first") {
  const auto p123 = parse_cycles("(1,2,3)", 3);
  CHECK(compose(p123, Permutation::identity(3)) == p123);
  CHECK(compose(parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3)) ==
        parse_cycles("(1 3 2)", 3));

  const auto sigma = parse_cycles("(1,2,3,4,5)", 5);
  const auto alpha = parse_cycles("(1,3)(2,4)", 5);
  const auto product = compose(sigma, alpha);
  CHECK(product == parse_cycles("(1,4,5,3,2)", 5));
  CHECK(inverse(product) == parse_cycles("(1,2,3,5,4)", 5));
}

TEST_CASE("compose rejects a size mismatch") {
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                  InvariantError);
}

TEST_CASE("parse, inverse, order") {
  const auto p = parse_cycles("(3 2 1)(4)", 4);
  CHECK(p(1) == 3);
  CHECK(p(3) == 2);
  CHECK(p(2) == 1);
  CHECK(p(4) == 4);

  CHECK(inverse(parse_cycles("(1,2,3)", 3)) == parse_cycles("(1,3,2)", 3));
  CHECK(order(parse_cycles("(1,2)(3,4,5)", 5)) == 6);
  CHECK(order(Permutation::identity(4)) == 1);
}

TEST_CASE("cycles are canonical and include fixed points") {
  const auto p = parse_cycles("(5 3)(4 2 1)", 6);
  const std::vector<Cycle> expected{{1, 4, 2}, {3, 5}, {6}};
  CHECK(cycles(p) == expected);
  CHECK(format_cycles(p) == "(1 4 2)(3 5)");
  CHECK(format_cycles(Permutation::identity(3)).empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 3), InvariantError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), InvariantError);
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), InvariantError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("()", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 3), ParseError);
  CHECK_NOTHROW(parse_cycles("  (1, 2) ( 3 ) ", 3));
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), InvariantError);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), InvariantError);
  CHECK_THROWS_AS(Permutation::from_images({1, 3}), InvariantError);
}

TEST_CASE("transitivity") {
  const std::vector<Permutation> one{parse_cycles("(1,2,3)", 3)};
  CHECK(is_transitive(one, 3));
  const std::vector<Permutation> split{parse_cycles("(1,2)", 4),
                                       parse_cycles("(3,4)", 4)};
  CHECK_FALSE(is_transitive(split, 4));
  const std::vector<Permutation> graph_b{parse_cycles("(1,2,3,4,5)", 5),
                                         parse_cycles("(1,3)(2,4)", 5)};
  CHECK(is_transitive(graph_b, 5));
  CHECK(is_transitive(std::vector<Permutation>{}, 1));
}

TEST_CASE("group laws and format/parse round trip, exhaustive to n = 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto perms = fixtures::all_permutations(n);
    const auto id = Permutation::identity(n);
    for (const auto& p : perms) {
      REQUIRE(compose(p, inverse(p)) == id);
      REQUIRE(compose(inverse(p), p) == id);
      REQUIRE(compose(p, id) == p);
      REQUIRE(compose(id, p) == p);
      REQUIRE(parse_cycles(format_cycles(p), n) == p);
      REQUIRE(power(p, static_cast<std::int64_t>(order(p))) == id);
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {7u, 8u}) {
    for (int i = 0; i < 2000; ++i) {
      const auto p = fixtures::random_permutation(rng, n);
      const auto q = fixtures::random_permutation(rng, n);
      const auto r = fixtures::random_permutation(rng, n);
      REQUIRE(parse_cycles(format_cycles(p), n) == p);
      REQUIRE(compose(compose(p, q), r) == compose(p, compose(q, r)));
    }
  }
}

TEST_CASE("power agrees with repeated composition") {
  const auto p = parse_cycles("(1 2 3)(4 5)", 6);
  auto acc = Permutation::identity(6);
  for (int k = 0; k < 8; ++k) {
    CHECK(power(p, k) == acc);
    CHECK(power(p, -k) == inverse(acc));
    acc = compose(acc, p);
  }
}

TEST_SUITE_END();
