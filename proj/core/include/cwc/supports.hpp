#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwc/codeword.hpp"
#include "cwc/linear_code.hpp"

namespace cwc {

// A support partition stores all 2^k - 1 cells explicitly; cap k to keep that
// table (and the characterization sweep) bounded.
inline constexpr unsigned kMaxPartitionIndices = 20;

// Nonempty subset of the basis indices {1..k}, encoded as a bit mask with
// bit i-1 standing for index i. Masks order the cells everywhere.
struct IndexSubset {
  unsigned k = 0;
  std::uint32_t mask = 0;

  static IndexSubset of(unsigned k, std::uint32_t mask);
  static IndexSubset from_members(unsigned k, const std::vector<unsigned>& members);

  std::vector<unsigned> members() const;  // ascending 1-based indices
  bool contains(unsigned i) const;
  unsigned size() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
};

// The common refinement of k coordinate sets A_1..A_k: cell(I) holds the
// coordinates lying in A_i exactly for i in I. Every nonempty I has an entry
// (possibly empty) at cells[mask - 1]; ground is the union of the inputs.
struct SupportPartition {
  unsigned k = 0;
  CoordSet ground;
  std::vector<CoordSet> cells;

  const CoordSet& cell(IndexSubset I) const;
};

// Elements covered by an odd number of the given sets.
CoordSet symmetric_difference(const std::vector<CoordSet>& sets);

// Intersection of the sets named by I minus the union of the others.
CoordSet cell(const std::vector<CoordSet>& sets, IndexSubset I);

SupportPartition partition(const std::vector<CoordSet>& sets);

// Union of the cells meeting J in an odd number of indices; equals the
// symmetric difference of the sets named by J.
CoordSet relative_symmetric_difference(const SupportPartition& p, IndexSubset J);

// Union of the cells whose index set contains S; equals the intersection of
// the sets named by S.
CoordSet intersection_of(const SupportPartition& p, IndexSubset S);

// Partition-based constant-weight test, computed from the canonical basis
// supports alone (never by enumerating codewords): the code has constant
// weight w iff every cell has size exactly w / 2^(k-1).
struct Characterization {
  bool constant_weight = false;
  std::size_t w = 0;  // common row weight (0 if the rows disagree)
  std::size_t m = 0;  // target cell size w / 2^(k-1), 0 if undefined
  SupportPartition cells;
  std::string violation;  // empty iff constant_weight
  std::optional<IndexSubset> offending_cell;  // first bad cell in mask order
  std::size_t offending_size = 0;
};
Characterization check_characterization(const LinearCode& code);  // requires k >= 2

// Parameter laws for (dimension, weight, length) triples: k = 1 needs w <= n;
// k >= 2 needs 2^(k-1) | w and n >= (2^k - 1) * m with m = w / 2^(k-1).
struct ParamsVerdict {
  bool admissible = false;
  std::optional<std::size_t> m;
  std::string obstruction;  // empty iff admissible, else names the violated law
};
ParamsVerdict admissible_params(unsigned k, std::size_t w, std::size_t n);

std::string render_coords(const CoordSet& s);        // "{1,2,3}"
std::string render_index_subset(const IndexSubset&); // "{1,2}"

// One line per cell in mask order: "I={1,2} -> {3,4}".
std::string render_partition(const SupportPartition& p);
// JSON mirror: [{"I":[1,2],"coords":[3,4]}, ...]
std::string render_partition_json(const SupportPartition& p);

}  // namespace cwc
