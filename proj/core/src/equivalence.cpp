#include "cwc/equivalence.hpp"

#include <stdexcept>
#include <string>

#include "cwc/supports.hpp"

namespace cwc {

LinearCode permute_code(const Permutation& sigma, const LinearCode& code) {
  if (sigma.degree() != code.length())
    throw std::invalid_argument("permute_code: permutation degree " +
                                std::to_string(sigma.degree()) + " differs from code length " +
                                std::to_string(code.length()));
  std::vector<Codeword> rows;
  rows.reserve(code.dimension());
  for (const Codeword& row : code.basis()) rows.push_back(apply(sigma, row));
  return span_basis(rows);
}

namespace {

CoordSet complement(const CoordSet& s, std::size_t n) {
  CoordSet out;
  out.reserve(n - s.size());
  std::size_t idx = 0;
  for (Coord c = 1; c <= n; ++c) {
    if (idx < s.size() && s[idx] == c)
      ++idx;
    else
      out.push_back(c);
  }
  return out;
}

void pair_sorted(const CoordSet& from, const CoordSet& to, std::vector<std::uint32_t>& images) {
  for (std::size_t t = 0; t < from.size(); ++t) images[from[t] - 1] = to[t];
}

std::string describe(std::size_t n, unsigned k, std::size_t w) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " w=" + std::to_string(w);
}

}  // namespace

Permutation equivalence_permutation(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension())
    throw std::invalid_argument(
        "equivalence: parameter mismatch (left n=" + std::to_string(a.length()) +
        " k=" + std::to_string(a.dimension()) + "; right n=" + std::to_string(b.length()) +
        " k=" + std::to_string(b.dimension()) + ")");
  const std::size_t n = a.length();
  std::vector<std::uint32_t> images(n, 0);

  if (a.dimension() == 1) {
    // one nonzero word each: equivalent iff the weights agree
    const std::size_t wa = weight(a.basis_row(0));
    const std::size_t wb = weight(b.basis_row(0));
    if (wa != wb)
      throw std::invalid_argument("equivalence: parameter mismatch (left " +
                                  describe(n, 1, wa) + "; right " + describe(n, 1, wb) + ")");
    const CoordSet sa = support(a.basis_row(0));
    const CoordSet sb = support(b.basis_row(0));
    pair_sorted(sa, sb, images);
    pair_sorted(complement(sa, n), complement(sb, n), images);
  } else {
    const Characterization ca = check_characterization(a);
    if (!ca.constant_weight)
      throw std::invalid_argument("equivalence: left code is not constant weight (" +
                                  ca.violation + ")");
    const Characterization cb = check_characterization(b);
    if (!cb.constant_weight)
      throw std::invalid_argument("equivalence: right code is not constant weight (" +
                                  cb.violation + ")");
    if (ca.w != cb.w)
      throw std::invalid_argument("equivalence: parameter mismatch (left " +
                                  describe(n, a.dimension(), ca.w) + "; right " +
                                  describe(n, b.dimension(), cb.w) + ")");
    // cells of equal label have equal size m on both sides; pair them in
    // sorted order, then pair the zero coordinates in sorted order
    for (std::size_t c = 0; c < ca.cells.cells.size(); ++c)
      pair_sorted(ca.cells.cells[c], cb.cells.cells[c], images);
    pair_sorted(complement(ca.cells.ground, n), complement(cb.cells.ground, n), images);
  }

  const Permutation sigma = Permutation::from_images(std::move(images));
  if (permute_code(sigma, a) != b)
    throw std::logic_error("equivalence: certificate failed verification");
  return sigma;
}

}  // namespace cwc
