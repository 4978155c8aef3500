#include <random>
#include <stdexcept>

#include "doctest.h"

#include "cwc/errors.hpp"
#include "cwc/permutation.hpp"
#include "helpers.hpp"

using namespace cwc;

TEST_CASE("permutation construction and lookup are 1-based") {
  const Permutation id = Permutation::identity(4);
  for (std::uint32_t j = 1; j <= 4; ++j) CHECK(id(j) == j);

  const Permutation p = Permutation::from_images({2, 1, 4, 5, 3});
  CHECK(p.degree() == 5);
  CHECK(p(1) == 2);
  CHECK(p(4) == 5);
  CHECK(p == Permutation::from_disjoint_cycles(5, {{1, 2}, {3, 4, 5}}));

  CHECK_THROWS_AS(Permutation::from_images({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_disjoint_cycles(3, {{1, 2}, {2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_disjoint_cycles(3, {{4}}), std::invalid_argument);
}

TEST_CASE("composition applies the left factor first") {
  const Permutation a = parse_cycles("(1 2)", 3);
  const Permutation b = parse_cycles("(2 3)", 3);
  const Permutation ab = compose(a, b);
  CHECK(ab(1) == 3);  // b(a(1)) = b(2) = 3
  CHECK(ab == parse_cycles("(1 3 2)", 3));
  CHECK(compose(b, a) == parse_cycles("(1 2 3)", 3));

  CHECK(inverse(parse_cycles("(1 2 3)", 3)) == parse_cycles("(1 3 2)", 3));
  CHECK_THROWS_AS(compose(a, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("composition and inverse properties on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Permutation p = cwc_test::random_permutation(n, rng);
    const Permutation q = cwc_test::random_permutation(n, rng);
    CHECK(compose(p, inverse(p)) == Permutation::identity(n));
    CHECK(compose(inverse(p), p) == Permutation::identity(n));
    for (std::uint32_t j = 1; j <= n; ++j) CHECK(compose(p, q)(j) == q(p(j)));
  }
}

TEST_CASE("coordinate action moves bit j to position sigma(j)") {
  const Permutation sigma = parse_cycles("(1 2 3)", 3);
  CHECK(apply(sigma, Codeword::from_string("100")).to_string() == "010");
  CHECK(apply(sigma, Codeword::from_string("110")).to_string() == "011");

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 12;
    const Permutation p = cwc_test::random_permutation(n, rng);
    Codeword c(n);
    for (Coord j = 1; j <= static_cast<Coord>(n); ++j)
      if (rng() & 1) c.set(j);
    CoordSet expected;
    for (Coord j : support(c)) expected.push_back(p(j));
    std::sort(expected.begin(), expected.end());
    CHECK(support(apply(p, c)) == expected);
  }
  CHECK_THROWS_AS(apply(sigma, Codeword::from_string("1000")), std::invalid_argument);
}

TEST_CASE("transpositions") {
  CHECK(transposition(4, 2, 4) == Permutation::from_images({1, 4, 3, 2}));
  CHECK(transposition(4, 4, 2) == transposition(4, 2, 4));
  CHECK_THROWS_AS(transposition(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(transposition(4, 2, 5), std::invalid_argument);
}

TEST_CASE("cycle notation renders in normal form") {
  CHECK(render_cycles(Permutation::identity(5)) == "()");
  CHECK(render_cycles(Permutation::from_images({2, 1, 4, 5, 3})) == "(1 2)(3 4 5)");
  // cycles start at their smallest element and are listed by smallest element
  CHECK(render_cycles(Permutation::from_disjoint_cycles(6, {{5, 6}, {2, 4, 3}})) ==
        "(2 4 3)(5 6)");
  // fixed points are omitted
  CHECK(render_cycles(transposition(9, 3, 7)) == "(3 7)");
}

TEST_CASE("cycle notation parses and round-trips") {
  CHECK(parse_cycles("(1 2)(3 4 5)", 5) == Permutation::from_images({2, 1, 4, 5, 3}));
  CHECK(parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(parse_cycles("  (1 2)  (3 4 5) ", 5) == parse_cycles("(1 2)(3 4 5)", 5));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Permutation p = cwc_test::random_permutation(n, rng);
    CHECK(parse_cycles(render_cycles(p), n) == p);
  }

  CHECK_THROWS_AS(parse_cycles("", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 5), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 5), parse_error);
}

TEST_CASE("permutations order lexicographically by images") {
  CHECK(Permutation::identity(3) < parse_cycles("(2 3)", 3));
  CHECK(parse_cycles("(2 3)", 3) < parse_cycles("(1 2)", 3));
}
