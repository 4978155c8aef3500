#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwc/construct.hpp"
#include "cwc/linear_code.hpp"
#include "cwc/permutation.hpp"
#include "cwc/supports.hpp"

namespace cwc {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kBruteForceDefaultCap = 8;
inline constexpr std::size_t kBruteForceHardCap = 10;
inline constexpr std::size_t kClosureCap = 1'000'000;

enum class PAutMethod { formula, brute_force, generated };
std::string_view to_string(PAutMethod m);

// How a permutation-automorphism group was obtained plus what it looks like:
// exact order, a generating set (empty for the formula method), and the
// orbits of the group on {1..n}.
struct PAutReport {
  std::size_t n = 0;
  unsigned k = 0;
  BigInt order = 0;
  std::vector<Permutation> generators;
  std::vector<CoordSet> orbits;  // each ascending, listed by smallest element
  bool transitive = false;
  PAutMethod method = PAutMethod::formula;
};

struct CountReport {
  unsigned k = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  BigInt count = 0;
};

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t r);
BigInt gl2_order(unsigned k);  // prod_{i=0}^{k-1} (2^k - 2^i)

// Order of the automorphism group of a length-n constant weight code with
// cell size m: (n - (2^k - 1)m)! * (m!)^(2^k - 1) * |GL(k,2)|. Requires
// admissible parameters with k >= 2.
BigInt paut_order_formula(unsigned k, std::size_t m, std::size_t n);

// Number of distinct such codes. Two independent closed forms are evaluated
// and cross-checked, together with count * order == n!; any disagreement is a
// std::logic_error.
BigInt code_count_formula(unsigned k, std::size_t m, std::size_t n);

// Exact stabilizer search over S_n. Coordinates are first grouped by their
// column in the canonical basis matrix; an automorphism permutes these
// classes (zero columns among themselves), so only class-size-respecting
// candidates are tried. The report carries a reduced generating set, verified
// by closure to generate the whole stabilizer.
PAutReport brute_force_paut(const LinearCode& code, std::size_t cap = kBruteForceDefaultCap);

// Generators of the full automorphism group of a constant weight code without
// search: transpositions inside each cell, transpositions on the zero
// coordinates, and two cell transports induced by a generating pair of basis
// changes (a transvection and the cyclic row shift). Each generator is
// verified to stabilize the code; for n <= 8 the closure order is checked
// against the formula.
PAutReport structured_paut_generators(const LinearCode& code);

// Formula-order report for a constant weight code; carries no generators.
PAutReport formula_paut_report(const LinearCode& code);

// The literal index pattern for an order-6 subgroup failed to stabilize the
// canonical code at the requested parameters.
struct pattern_discrepancy : std::runtime_error {
  explicit pattern_discrepancy(const std::string& what) : std::runtime_error(what) {}
};

// Two permutations generating a non-abelian order-6 subgroup of the canonical
// code's automorphism group. m >= 3 uses (1 2) and (1 2 3); m = 1 and m = 2
// use the dedicated index patterns for small cells. Both outputs are verified
// to stabilize the code before returning; pattern_discrepancy is thrown if
// the literal pattern fails at these parameters.
std::pair<Permutation, Permutation> s3_subgroup_generators(const CanonicalSpec& spec);

// Orbits of the generated group on {1..n}; no generators means n singletons.
std::vector<CoordSet> orbits(const std::vector<Permutation>& generators, std::size_t n);

// Size of the generated group by breadth-first closure; throws cap_exceeded
// past `cap` elements.
std::size_t closure_order(const std::vector<Permutation>& generators,
                          std::size_t cap = kClosureCap);

// Necessary condition for realizing the code as a group code: its
// automorphism group must act transitively on the coordinates. "impossible"
// (possible == false) is a sound verdict; "possible" is not a construction.
struct GroupCodeVerdict {
  bool possible = false;
  std::vector<CoordSet> orbit_list;
};
GroupCodeVerdict group_code_necessary(const LinearCode& code,
                                      std::size_t cap = kBruteForceDefaultCap);

// The order formula is always divisible by 6.
bool multiple_of_six_check(unsigned k, std::size_t m, std::size_t n);

// {"n":..,"k":..,"order":"<decimal>","generators":[..],"orbits":[[..]],
//  "transitive":..,"method":".."}
std::string render_paut_report_json(const PAutReport& report);

}  // namespace cwc
