#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwc/codeword.hpp"

namespace cwc {

// Enumeration walks all 2^k codewords; refuse beyond this dimension.
inline constexpr unsigned kEnumerationCap = 20;

// Binary linear code of dimension k >= 1, stored by its reduced row echelon
// basis: pivot columns strictly increasing, every pivot column zero in all
// other rows, rows ordered by pivot. Equal subspaces therefore have identical
// stored bases and compare equal member-wise. Construct via span_basis().
class LinearCode {
 public:
  std::size_t length() const { return n_; }
  unsigned dimension() const { return static_cast<unsigned>(basis_.size()); }
  const std::vector<Codeword>& basis() const { return basis_; }
  const Codeword& basis_row(unsigned i) const { return basis_.at(i); }  // 0-based row index
  const std::vector<Coord>& pivots() const { return pivots_; }

  bool contains(const Codeword& w) const;  // membership by reduction against the basis

  friend bool operator==(const LinearCode&, const LinearCode&) = default;
  friend LinearCode span_basis(const std::vector<Codeword>& generators);

 private:
  LinearCode(std::size_t n, std::vector<Codeword> rows, std::vector<Coord> pivots);

  std::size_t n_ = 0;
  std::vector<Codeword> basis_;
  std::vector<Coord> pivots_;
};

// Canonical code spanned by the given words. Throws std::invalid_argument if
// the list is empty, mixes lengths, or spans only the zero code.
LinearCode span_basis(const std::vector<Codeword>& generators);

// All 2^k codewords; index mask holds the sum of the basis rows named by mask.
std::vector<Codeword> enumerate_codewords(const LinearCode& code);

// The weight shared by every nonzero codeword, or nullopt if weights differ.
// Enumerates the whole code, hence the dimension cap.
std::optional<std::size_t> constant_weight(const LinearCode& code);

struct CodeParams {
  unsigned k = 0;
  std::size_t w = 0;
  std::size_t n = 0;
  std::optional<std::size_t> cell_size;  // w / 2^(k-1) when that quotient is exact
};
CodeParams make_params(unsigned k, std::size_t w, std::size_t n);

// Code file format: first line "n k", then k rows of n characters '0'/'1'.
// Parsing rejects malformed headers, wrong row counts or lengths, characters
// outside {0,1}, and linearly dependent rows; the loaded basis is canonical.
LinearCode parse_code(std::string_view text);
std::string render_code(const LinearCode& code);

}  // namespace cwc
