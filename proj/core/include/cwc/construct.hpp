#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cwc/linear_code.hpp"
#include "cwc/supports.hpp"

namespace cwc {

// Parameters of the canonical constant weight code: dimension k >= 1, cell
// size m >= 1, length n >= (2^k - 1) * m. The weight is 2^(k-1) * m.
struct CanonicalSpec {
  unsigned k = 0;
  std::size_t m = 0;
  std::size_t n = 0;
};

// The defining rows: row i alternates 1-blocks and 0-blocks of size
// 2^(k-i) * m, starting with ones, truncated at (2^k - 1) * m; the remaining
// coordinates are zero padding. E.g. (k=3, m=1, n=7) gives 1111000,
// 1100110, 1010101.
std::vector<Codeword> canonical_rows(const CanonicalSpec& spec);

// The code spanned by canonical_rows (stored, as always, by its canonical
// reduced basis).
LinearCode canonical_code(const CanonicalSpec& spec);

// Which cell of the defining rows' support partition coordinate p falls in,
// in closed form; nullopt for padding coordinates beyond (2^k - 1) * m.
// For body coordinates, with b = (p-1) / m, the cell is
// { i in [k] : bit (k-i) of b is 0 }.
std::optional<IndexSubset> canonical_cell_of(const CanonicalSpec& spec, std::size_t p);

// Same code with zero columns appended up to length new_length.
LinearCode extend_with_zeros(const LinearCode& code, std::size_t new_length);

}  // namespace cwc
