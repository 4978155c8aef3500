#include "cwc/construct.hpp"

#include <climits>
#include <stdexcept>

#include "cwc/errors.hpp"

namespace cwc {

namespace {

// Shared validation: k, m positive, k within the partition cap, n at least
// (2^k - 1) * m. Reuses the parameter law so the obstruction text matches.
void validate(const CanonicalSpec& spec) {
  if (spec.k == 0 || spec.m == 0)
    throw std::invalid_argument("canonical spec: k and m must be positive");
  if (spec.k > kMaxPartitionIndices)
    throw cap_exceeded("canonical spec: dimension " + std::to_string(spec.k) + " exceeds cap " +
                       std::to_string(kMaxPartitionIndices));
  if (spec.m > (SIZE_MAX >> spec.k))
    throw std::invalid_argument("canonical spec: (2^k - 1)*m overflows");
  const ParamsVerdict verdict =
      admissible_params(spec.k, (std::size_t{1} << (spec.k - 1)) * spec.m, spec.n);
  if (!verdict.admissible) throw std::invalid_argument("canonical spec: " + verdict.obstruction);
}

std::size_t body_length(const CanonicalSpec& spec) {
  return ((std::size_t{1} << spec.k) - 1) * spec.m;
}

}  // namespace

std::vector<Codeword> canonical_rows(const CanonicalSpec& spec) {
  validate(spec);
  const std::size_t body = body_length(spec);
  std::vector<Codeword> rows;
  rows.reserve(spec.k);
  for (unsigned i = 1; i <= spec.k; ++i) {
    Codeword row(spec.n);
    const std::size_t block = (std::size_t{1} << (spec.k - i)) * spec.m;
    for (std::size_t p = 1; p <= body; ++p)
      if ((((p - 1) / block) & 1) == 0) row.set(static_cast<Coord>(p));
    rows.push_back(std::move(row));
  }
  return rows;
}

LinearCode canonical_code(const CanonicalSpec& spec) { return span_basis(canonical_rows(spec)); }

std::optional<IndexSubset> canonical_cell_of(const CanonicalSpec& spec, std::size_t p) {
  validate(spec);
  if (p == 0 || p > spec.n)
    throw std::invalid_argument("canonical_cell_of: coordinate " + std::to_string(p) +
                                " out of range 1.." + std::to_string(spec.n));
  if (p > body_length(spec)) return std::nullopt;
  const std::size_t b = (p - 1) / spec.m;  // 0 .. 2^k - 2
  std::uint32_t mask = 0;
  for (unsigned i = 1; i <= spec.k; ++i)
    if (((b >> (spec.k - i)) & 1) == 0) mask |= std::uint32_t{1} << (i - 1);
  return IndexSubset::of(spec.k, mask);
}

LinearCode extend_with_zeros(const LinearCode& code, std::size_t new_length) {
  if (new_length < code.length())
    throw std::invalid_argument("extend_with_zeros: new length " + std::to_string(new_length) +
                                " is below current length " + std::to_string(code.length()));
  if (new_length == code.length()) return code;
  std::vector<Codeword> rows;
  rows.reserve(code.dimension());
  for (const Codeword& row : code.basis()) {
    Codeword wide(new_length);
    for (Coord c : support(row)) wide.set(c);
    rows.push_back(std::move(wide));
  }
  // zero padding keeps the reduced form intact, so this re-span is a no-op
  // beyond rebuilding the object
  return span_basis(rows);
}

}  // namespace cwc
