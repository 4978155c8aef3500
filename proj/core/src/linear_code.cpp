#include "cwc/linear_code.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "cwc/errors.hpp"

namespace cwc {

LinearCode::LinearCode(std::size_t n, std::vector<Codeword> rows, std::vector<Coord> pivots)
    : n_(n), basis_(std::move(rows)), pivots_(std::move(pivots)) {}

bool LinearCode::contains(const Codeword& w) const {
  if (w.length() != n_)
    throw std::invalid_argument("contains: word length " + std::to_string(w.length()) +
                                " differs from code length " + std::to_string(n_));
  Codeword rem = w;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (rem.test(pivots_[i])) rem.xor_with(basis_[i]);
  return rem.is_zero();
}

LinearCode span_basis(const std::vector<Codeword>& generators) {
  if (generators.empty()) throw std::invalid_argument("span_basis: no generators");
  const std::size_t n = generators.front().length();
  for (const Codeword& g : generators)
    if (g.length() != n) throw std::invalid_argument("span_basis: generators have mixed lengths");

  // Gauss-Jordan sweep, left to right; surviving rows come out ordered by
  // pivot with every pivot column cleared elsewhere.
  std::vector<Codeword> rows = generators;
  std::size_t r = 0;
  for (Coord col = 1; col <= n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].test(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != r && rows[j].test(col)) rows[j].xor_with(rows[r]);
    ++r;
  }
  if (r == 0) throw std::invalid_argument("span_basis: generators span only the zero code");
  rows.resize(r, Codeword(n));

  std::vector<Coord> pivots;
  pivots.reserve(r);
  for (const Codeword& row : rows) pivots.push_back(row.first_set());
  return LinearCode(n, std::move(rows), std::move(pivots));
}

std::vector<Codeword> enumerate_codewords(const LinearCode& code) {
  const unsigned k = code.dimension();
  if (k > kEnumerationCap)
    throw cap_exceeded("enumerate_codewords: dimension " + std::to_string(k) + " exceeds cap " +
                       std::to_string(kEnumerationCap));
  std::vector<Codeword> words;
  words.reserve(std::size_t{1} << k);
  words.emplace_back(code.length());  // mask 0: the zero word
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    Codeword w = words[mask & (mask - 1)];
    w.xor_with(code.basis_row(static_cast<unsigned>(std::countr_zero(mask))));
    words.push_back(std::move(w));
  }
  return words;
}

std::optional<std::size_t> constant_weight(const LinearCode& code) {
  const unsigned k = code.dimension();
  if (k > kEnumerationCap)
    throw cap_exceeded("constant_weight: dimension " + std::to_string(k) + " exceeds cap " +
                       std::to_string(kEnumerationCap));
  // Gray-code walk: step i flips basis row ctz(i), visiting every nonzero
  // codeword once without storing the code.
  Codeword w(code.length());
  std::optional<std::size_t> common;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    w.xor_with(code.basis_row(static_cast<unsigned>(std::countr_zero(i))));
    const std::size_t wt = w.popcount();
    if (!common)
      common = wt;
    else if (*common != wt)
      return std::nullopt;
  }
  return common;
}

CodeParams make_params(unsigned k, std::size_t w, std::size_t n) {
  if (k == 0 || w == 0 || n == 0)
    throw std::invalid_argument("make_params: k, w, n must be positive");
  CodeParams p;
  p.k = k;
  p.w = w;
  p.n = n;
  if (k - 1 < 64 && (w & ((std::size_t{1} << (k - 1)) - 1)) == 0) p.cell_size = w >> (k - 1);
  return p;
}

namespace {

std::size_t parse_uint_field(std::string_view token, const char* what) {
  std::size_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || token.empty())
    throw parse_error(std::string("code file: bad ") + what + " field");
  return value;
}

}  // namespace

LinearCode parse_code(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.empty()) throw parse_error("code file: empty input");

  const std::string_view header = lines.front();
  const std::size_t space = header.find(' ');
  if (space == std::string_view::npos || header.find(' ', space + 1) != std::string_view::npos)
    throw parse_error("code file: header must be two fields 'n k'");
  const std::size_t n = parse_uint_field(header.substr(0, space), "length");
  const std::size_t k = parse_uint_field(header.substr(space + 1), "dimension");
  if (n == 0 || k == 0) throw parse_error("code file: n and k must be positive");
  if (k > n)
    throw parse_error("code file: dimension " + std::to_string(k) + " exceeds length " +
                      std::to_string(n));
  if (lines.size() != k + 1)
    throw parse_error("code file: expected " + std::to_string(k) + " rows, found " +
                      std::to_string(lines.size() - 1));

  std::vector<Codeword> rows;
  rows.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::string_view line = lines[r + 1];
    if (line.size() != n)
      throw parse_error("code file: row " + std::to_string(r + 1) + " has length " +
                        std::to_string(line.size()) + ", expected " + std::to_string(n));
    for (char c : line)
      if (c != '0' && c != '1')
        throw parse_error("code file: row " + std::to_string(r + 1) +
                          " contains invalid character '" + std::string(1, c) + "'");
    rows.push_back(Codeword::from_string(line));
  }

  LinearCode code = [&] {
    try {
      return span_basis(rows);
    } catch (const std::invalid_argument&) {
      // only reachable when every row is zero
      throw parse_error("code file: basis rows are linearly dependent");
    }
  }();
  if (code.dimension() != k) throw parse_error("code file: basis rows are linearly dependent");
  return code;
}

std::string render_code(const LinearCode& code) {
  std::string out =
      std::to_string(code.length()) + " " + std::to_string(code.dimension()) + "\n";
  for (const Codeword& row : code.basis()) {
    out += row.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace cwc
