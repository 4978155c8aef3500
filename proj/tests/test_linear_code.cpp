#include <stdexcept>

#include "doctest.h"

#include "cwc/errors.hpp"
#include "cwc/linear_code.hpp"

using namespace cwc;

namespace {
std::vector<Codeword> words(std::initializer_list<const char*> rows) {
  std::vector<Codeword> out;
  for (const char* r : rows) out.push_back(Codeword::from_string(r));
  return out;
}
}  // namespace

TEST_CASE("span_basis reduces to a canonical basis") {
  const LinearCode code = span_basis(words({"1100", "1010"}));
  REQUIRE(code.dimension() == 2);
  CHECK(code.length() == 4);
  CHECK(code.basis_row(0).to_string() == "1010");
  CHECK(code.basis_row(1).to_string() == "0110");
  CHECK(code.pivots() == std::vector<Coord>{1, 2});

  // same subspace from different generators gives the identical object
  const LinearCode again = span_basis(words({"0110", "1010", "1100"}));
  CHECK(again == code);
}

TEST_CASE("membership testing") {
  const LinearCode code = span_basis(words({"1100", "1010"}));
  CHECK(code.contains(Codeword::from_string("0000")));
  CHECK(code.contains(Codeword::from_string("1100")));
  CHECK(code.contains(Codeword::from_string("1010")));
  CHECK(code.contains(Codeword::from_string("0110")));
  CHECK_FALSE(code.contains(Codeword::from_string("0001")));
  CHECK_FALSE(code.contains(Codeword::from_string("1111")));
  CHECK_THROWS_AS(code.contains(Codeword::from_string("11000")), std::invalid_argument);
}

TEST_CASE("enumerate_codewords indexes words by basis mask") {
  const LinearCode code = span_basis(words({"1010", "0110"}));
  const std::vector<Codeword> all = enumerate_codewords(code);
  REQUIRE(all.size() == 4);
  CHECK(all[0].is_zero());
  CHECK(all[1] == code.basis_row(0));
  CHECK(all[2] == code.basis_row(1));
  CHECK(all[3] == add(code.basis_row(0), code.basis_row(1)));
}

TEST_CASE("constant_weight scans the whole code") {
  CHECK(constant_weight(span_basis(words({"1010", "0110"}))) == 2);
  CHECK(constant_weight(span_basis(words({"110011", "001111"}))) == 4);
  CHECK(constant_weight(span_basis(words({"10", "01"}))) == std::nullopt);
  CHECK(constant_weight(span_basis(words({"111", "011"}))) == std::nullopt);
  // one-dimensional codes are trivially constant weight
  CHECK(constant_weight(span_basis(words({"1101"}))) == 3);
}

TEST_CASE("enumeration-based operations respect the dimension cap") {
  std::vector<Codeword> rows;
  const std::size_t n = kEnumerationCap + 1;
  for (Coord i = 1; i <= static_cast<Coord>(n); ++i)
    rows.push_back(Codeword::from_support(n, {i}));
  const LinearCode big = span_basis(rows);
  REQUIRE(big.dimension() == n);
  CHECK_THROWS_AS(enumerate_codewords(big), cap_exceeded);
  CHECK_THROWS_AS(constant_weight(big), cap_exceeded);
}

TEST_CASE("make_params derives the cell size when it is exact") {
  const CodeParams p = make_params(3, 4, 7);
  CHECK(p.k == 3);
  CHECK(p.w == 4);
  CHECK(p.n == 7);
  CHECK(p.cell_size == 1);

  CHECK(make_params(2, 4, 9).cell_size == 2);
  CHECK(make_params(3, 6, 9).cell_size == std::nullopt);  // 4 does not divide 6
  CHECK_THROWS_AS(make_params(0, 4, 7), std::invalid_argument);
}

TEST_CASE("code files parse and render") {
  const std::string text = "4 2\n1010\n0110\n";
  const LinearCode code = parse_code(text);
  CHECK(render_code(code) == text);

  // rows are canonicalized on load
  CHECK(render_code(parse_code("4 2\n1100\n1010\n")) == text);

  // whitespace variations are tolerated between tokens
  CHECK(parse_code("4 2\r\n1010\r\n0110\r\n") == code);
}

TEST_CASE("code files reject malformed input") {
  CHECK_THROWS_AS(parse_code(""), parse_error);
  CHECK_THROWS_AS(parse_code("4\n1010\n"), parse_error);
  CHECK_THROWS_AS(parse_code("4 2 9\n1010\n0110\n"), parse_error);
  CHECK_THROWS_AS(parse_code("x 2\n1010\n0110\n"), parse_error);
  CHECK_THROWS_AS(parse_code("2 4\n10\n01\n11\n00\n"), parse_error);  // k > n
  CHECK_THROWS_AS(parse_code("4 2\n1010\n"), parse_error);            // missing row
  CHECK_THROWS_AS(parse_code("4 2\n1010\n0110\n1100\n"), parse_error);
  CHECK_THROWS_AS(parse_code("4 2\n101\n0110\n"), parse_error);
  CHECK_THROWS_AS(parse_code("4 2\n1019\n0110\n"), parse_error);
  CHECK_THROWS_WITH_AS(parse_code("4 2\n1010\n1010\n"),
                       "code file: basis rows are linearly dependent", parse_error);
  CHECK_THROWS_AS(parse_code("4 1\n0000\n"), std::exception);  // zero row spans nothing
}

TEST_CASE("span_basis rejects degenerate generator lists") {
  CHECK_THROWS_AS(span_basis({}), std::invalid_argument);
  CHECK_THROWS_AS(span_basis(words({"10", "010"})), std::invalid_argument);
  CHECK_THROWS_AS(span_basis(words({"000", "000"})), std::invalid_argument);
}
