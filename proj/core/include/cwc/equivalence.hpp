#pragma once

#include "cwc/linear_code.hpp"
#include "cwc/permutation.hpp"

namespace cwc {

// Image code under the coordinate permutation (re-canonicalized).
LinearCode permute_code(const Permutation& sigma, const LinearCode& code);

// For two constant weight codes with equal (n, k, w): a coordinate permutation
// sigma with permute_code(sigma, a) == b, built by pairing the cells of the
// two support partitions in sorted order (zero coordinates likewise paired in
// sorted order). Two such codes are always equivalent, so this only throws
// std::invalid_argument on parameter mismatch / non constant weight input;
// the certificate is verified before returning and a verification failure is
// a std::logic_error (internal bug).
Permutation equivalence_permutation(const LinearCode& a, const LinearCode& b);

}  // namespace cwc
