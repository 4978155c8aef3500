#include <stdexcept>

#include "doctest.h"

#include "cwc/construct.hpp"
#include "cwc/errors.hpp"
#include "cwc/supports.hpp"

using namespace cwc;

TEST_CASE("canonical rows follow the alternating block pattern") {
  SUBCASE("k=3, m=1, n=7") {
    const std::vector<Codeword> rows = canonical_rows({3, 1, 7});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].to_string() == "1111000");
    CHECK(rows[1].to_string() == "1100110");
    CHECK(rows[2].to_string() == "1010101");
  }
  SUBCASE("k=2, m=2, n=6") {
    const std::vector<Codeword> rows = canonical_rows({2, 2, 6});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].to_string() == "111100");
    CHECK(rows[1].to_string() == "110011");
  }
  SUBCASE("padding columns stay zero") {
    const std::vector<Codeword> rows = canonical_rows({2, 1, 5});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].to_string() == "11000");
    CHECK(rows[1].to_string() == "10100");
  }
  SUBCASE("k=1 gives a single run of ones") {
    const std::vector<Codeword> rows = canonical_rows({1, 3, 5});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].to_string() == "11100");
  }
}

TEST_CASE("canonical code is the reduced span of the pattern rows") {
  const LinearCode c1 = canonical_code({3, 1, 7});
  CHECK(c1.basis_row(0).to_string() == "1001011");
  CHECK(c1.basis_row(1).to_string() == "0101101");
  CHECK(c1.basis_row(2).to_string() == "0011110");

  const LinearCode c2 = canonical_code({2, 2, 6});
  CHECK(c2.basis_row(0).to_string() == "110011");
  CHECK(c2.basis_row(1).to_string() == "001111");
}

TEST_CASE("canonical codes pass the characterization with cell size m") {
  for (unsigned k = 2; k <= 5; ++k)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t pad : {std::size_t{0}, std::size_t{1}, std::size_t{5}}) {
        const std::size_t n = ((std::size_t{1} << k) - 1) * m + pad;
        const Characterization chk = check_characterization(canonical_code({k, m, n}));
        REQUIRE(chk.constant_weight);
        CHECK(chk.w == (std::size_t{1} << (k - 1)) * m);
        CHECK(chk.m == m);
        for (const CoordSet& cell : chk.cells.cells) CHECK(cell.size() == m);
      }
}

TEST_CASE("canonical_cell_of matches the membership pattern of the rows") {
  const CanonicalSpec spec{3, 2, 17};
  const std::vector<Codeword> rows = canonical_rows(spec);
  const std::size_t body = 7 * 2;
  for (std::size_t p = 1; p <= spec.n; ++p) {
    const std::optional<IndexSubset> I = canonical_cell_of(spec, p);
    if (p > body) {
      CHECK_FALSE(I.has_value());
      continue;
    }
    REQUIRE(I.has_value());
    for (unsigned i = 1; i <= spec.k; ++i)
      CHECK(I->contains(i) == rows[i - 1].test(static_cast<Coord>(p)));
  }

  CHECK(canonical_cell_of({3, 1, 7}, 1) == IndexSubset::from_members(3, {1, 2, 3}));
  CHECK(canonical_cell_of({3, 1, 7}, 2) == IndexSubset::from_members(3, {1, 2}));
  CHECK(canonical_cell_of({3, 1, 7}, 7) == IndexSubset::from_members(3, {3}));
  CHECK_THROWS_AS(canonical_cell_of({3, 1, 7}, 0), std::invalid_argument);
  CHECK_THROWS_AS(canonical_cell_of({3, 1, 7}, 8), std::invalid_argument);
}

TEST_CASE("extending with zero columns commutes with construction") {
  CHECK(extend_with_zeros(canonical_code({2, 1, 3}), 5) == canonical_code({2, 1, 5}));
  const LinearCode c = canonical_code({2, 2, 6});
  CHECK(extend_with_zeros(c, 6) == c);
  CHECK_THROWS_AS(extend_with_zeros(c, 5), std::invalid_argument);
}

TEST_CASE("canonical spec validation") {
  CHECK_THROWS_AS(canonical_rows({0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_rows({2, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_rows({2, 1, 2}), std::invalid_argument);  // n below (2^k-1)m
  CHECK_THROWS_AS(canonical_rows({21, 1, 1 << 21}), cap_exceeded);
}
