#include "cwc/supports.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "cwc/errors.hpp"

namespace cwc {

IndexSubset IndexSubset::of(unsigned k, std::uint32_t mask) {
  if (k == 0 || k > 32) throw std::invalid_argument("index subset: k out of range");
  if (mask == 0) throw std::invalid_argument("index subset: must be nonempty");
  if (k < 32 && mask >= (std::uint32_t{1} << k))
    throw std::invalid_argument("index subset: mask has bits beyond index k");
  return IndexSubset{k, mask};
}

IndexSubset IndexSubset::from_members(unsigned k, const std::vector<unsigned>& members) {
  std::uint32_t mask = 0;
  for (unsigned i : members) {
    if (i == 0 || i > k)
      throw std::invalid_argument("index subset: member " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(k));
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    if (mask & bit) throw std::invalid_argument("index subset: repeated member " + std::to_string(i));
    mask |= bit;
  }
  return IndexSubset::of(k, mask);
}

std::vector<unsigned> IndexSubset::members() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (unsigned i = 1; i <= k; ++i)
    if (mask & (std::uint32_t{1} << (i - 1))) out.push_back(i);
  return out;
}

bool IndexSubset::contains(unsigned i) const {
  return i >= 1 && i <= k && (mask & (std::uint32_t{1} << (i - 1)));
}

unsigned IndexSubset::size() const { return static_cast<unsigned>(std::popcount(mask)); }

const CoordSet& SupportPartition::cell(IndexSubset I) const {
  if (I.k != k) throw std::invalid_argument("partition: index subset is over a different k");
  return cells.at(I.mask - 1);
}

namespace {

void require_coord_set(const CoordSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) throw std::invalid_argument("coordinate sets are 1-based and positive");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("coordinate set must be strictly increasing");
  }
}

// Every coordinate in the union of the sets, tagged with the mask of the sets
// containing it; sorted by coordinate.
std::vector<std::pair<Coord, std::uint32_t>> label_coords(const std::vector<CoordSet>& sets) {
  std::vector<std::pair<Coord, std::uint32_t>> tagged;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    require_coord_set(sets[i]);
    for (Coord c : sets[i]) tagged.emplace_back(c, std::uint32_t{1} << i);
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<std::pair<Coord, std::uint32_t>> merged;
  for (const auto& [c, bit] : tagged) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second |= bit;
    else
      merged.emplace_back(c, bit);
  }
  return merged;
}

void require_small_k(std::size_t k, const char* what) {
  if (k == 0) throw std::invalid_argument(std::string(what) + ": needs at least one set");
  if (k > kMaxPartitionIndices)
    throw cap_exceeded(std::string(what) + ": " + std::to_string(k) + " sets exceed cap " +
                       std::to_string(kMaxPartitionIndices));
}

}  // namespace

CoordSet symmetric_difference(const std::vector<CoordSet>& sets) {
  if (sets.empty()) return {};  // the empty symmetric difference
  require_small_k(sets.size(), "symmetric_difference");
  CoordSet out;
  for (const auto& [c, mask] : label_coords(sets))
    if (std::popcount(mask) % 2 == 1) out.push_back(c);
  return out;
}

CoordSet cell(const std::vector<CoordSet>& sets, IndexSubset I) {
  require_small_k(sets.size(), "cell");
  if (I.k != sets.size())
    throw std::invalid_argument("cell: index subset is over k=" + std::to_string(I.k) +
                                " but " + std::to_string(sets.size()) + " sets were given");
  CoordSet out;
  for (const auto& [c, mask] : label_coords(sets))
    if (mask == I.mask) out.push_back(c);
  return out;
}

SupportPartition partition(const std::vector<CoordSet>& sets) {
  require_small_k(sets.size(), "partition");
  const unsigned k = static_cast<unsigned>(sets.size());
  SupportPartition p;
  p.k = k;
  p.cells.assign((std::size_t{1} << k) - 1, {});
  for (const auto& [c, mask] : label_coords(sets)) {
    p.ground.push_back(c);
    p.cells[mask - 1].push_back(c);
  }
  return p;
}

CoordSet relative_symmetric_difference(const SupportPartition& p, IndexSubset J) {
  if (J.k != p.k)
    throw std::invalid_argument("relative_symmetric_difference: index subset is over a different k");
  CoordSet out;
  for (std::uint32_t mask = 1; mask <= p.cells.size(); ++mask)
    if (std::popcount(mask & J.mask) % 2 == 1)
      out.insert(out.end(), p.cells[mask - 1].begin(), p.cells[mask - 1].end());
  std::sort(out.begin(), out.end());
  return out;
}

CoordSet intersection_of(const SupportPartition& p, IndexSubset S) {
  if (S.k != p.k)
    throw std::invalid_argument("intersection_of: index subset is over a different k");
  CoordSet out;
  for (std::uint32_t mask = 1; mask <= p.cells.size(); ++mask)
    if ((mask & S.mask) == S.mask)
      out.insert(out.end(), p.cells[mask - 1].begin(), p.cells[mask - 1].end());
  std::sort(out.begin(), out.end());
  return out;
}

Characterization check_characterization(const LinearCode& code) {
  const unsigned k = code.dimension();
  if (k < 2)
    throw std::invalid_argument("check_characterization: dimension must be at least 2");
  if (k > kMaxPartitionIndices)
    throw cap_exceeded("check_characterization: dimension " + std::to_string(k) +
                       " exceeds cap " + std::to_string(kMaxPartitionIndices));

  std::vector<CoordSet> row_supports;
  row_supports.reserve(k);
  for (const Codeword& row : code.basis()) row_supports.push_back(support(row));

  Characterization out;
  out.cells = partition(row_supports);

  const std::size_t w = row_supports.front().size();
  for (unsigned i = 1; i < k; ++i) {
    if (row_supports[i].size() != w) {
      out.violation = "basis rows have unequal weights: row 1 has weight " + std::to_string(w) +
                      " but row " + std::to_string(i + 1) + " has weight " +
                      std::to_string(row_supports[i].size());
      return out;
    }
  }
  out.w = w;

  const std::size_t half = std::size_t{1} << (k - 1);
  if (w % half != 0) {
    out.violation = "row weight " + std::to_string(w) + " is not a multiple of 2^(k-1) = " +
                    std::to_string(half);
    return out;
  }
  out.m = w / half;

  for (std::uint32_t mask = 1; mask <= out.cells.cells.size(); ++mask) {
    const std::size_t size = out.cells.cells[mask - 1].size();
    if (size != out.m) {
      const IndexSubset I = IndexSubset::of(k, mask);
      out.offending_cell = I;
      out.offending_size = size;
      out.violation = "cell I=" + render_index_subset(I) + " has size " + std::to_string(size) +
                      ", expected cell size " + std::to_string(out.m);
      return out;
    }
  }
  out.constant_weight = true;
  return out;
}

ParamsVerdict admissible_params(unsigned k, std::size_t w, std::size_t n) {
  if (k == 0 || w == 0 || n == 0)
    throw std::invalid_argument("admissible_params: k, w, n must be positive");
  ParamsVerdict v;
  if (k == 1) {
    if (w > n) {
      v.obstruction =
          "weight " + std::to_string(w) + " exceeds length " + std::to_string(n);
      return v;
    }
    v.admissible = true;
    v.m = w;
    return v;
  }
  if (k - 1 >= 64 || (w & ((std::size_t{1} << (k - 1)) - 1)) != 0) {
    v.obstruction = "weight " + std::to_string(w) + " is not a multiple of 2^(k-1)";
    if (k - 1 < 64) v.obstruction += " = " + std::to_string(std::size_t{1} << (k - 1));
    return v;
  }
  const std::size_t m = w >> (k - 1);
  const unsigned __int128 body = (((unsigned __int128)1 << k) - 1) * m;
  if (static_cast<unsigned __int128>(n) < body) {
    v.obstruction = "length " + std::to_string(n) + " is below (2^k - 1)*m";
    if (body <= static_cast<unsigned __int128>(~std::uint64_t{0}))
      v.obstruction += " = " + std::to_string(static_cast<std::uint64_t>(body));
    return v;
  }
  v.admissible = true;
  v.m = m;
  return v;
}

std::string render_coords(const CoordSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

std::string render_index_subset(const IndexSubset& I) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : I.members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string render_partition(const SupportPartition& p) {
  std::string out;
  for (std::uint32_t mask = 1; mask <= p.cells.size(); ++mask) {
    out += "I=" + render_index_subset(IndexSubset::of(p.k, mask)) + " -> " +
           render_coords(p.cells[mask - 1]) + "\n";
  }
  return out;
}

std::string render_partition_json(const SupportPartition& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::uint32_t mask = 1; mask <= p.cells.size(); ++mask) {
    nlohmann::ordered_json entry;
    entry["I"] = IndexSubset::of(p.k, mask).members();
    entry["coords"] = p.cells[mask - 1];
    arr.push_back(std::move(entry));
  }
  return arr.dump();
}

}  // namespace cwc
