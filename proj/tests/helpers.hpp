#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cwc/cwc.hpp"

namespace cwc_test {

inline cwc::Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return cwc::Permutation::from_images(std::move(images));
}

// Random code of exact dimension k (rows redrawn until independent).
inline cwc::LinearCode random_code(unsigned k, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  for (;;) {
    std::vector<cwc::Codeword> rows;
    for (unsigned i = 0; i < k; ++i) {
      cwc::Codeword row(n);
      do {
        for (cwc::Coord c = 1; c <= static_cast<cwc::Coord>(n); ++c)
          row.set(c, bit(rng) != 0);
      } while (row.is_zero());
      rows.push_back(std::move(row));
    }
    const cwc::LinearCode code = cwc::span_basis(rows);
    if (code.dimension() == k) return code;
  }
}

// Random constant weight code: a canonical code pushed through a random
// coordinate permutation.
inline cwc::LinearCode random_cw_code(unsigned k, std::size_t m, std::size_t n,
                                      std::mt19937& rng) {
  const cwc::LinearCode canon = cwc::canonical_code(cwc::CanonicalSpec{k, m, n});
  return cwc::permute_code(random_permutation(n, rng), canon);
}

}  // namespace cwc_test
