#pragma once

// Exhaustive census of constant weight codes with parameters (k, m, n),
// independent of any closed form: assign pairwise disjoint m-subsets of
// {1..n} to all 2^k - 1 cells, take row i as the union of the cells whose
// index set contains i, span, and count distinct canonical forms.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cwc/cwc.hpp"

namespace cwc_test {

inline std::size_t census_count(unsigned k, std::size_t m, std::size_t n) {
  const std::size_t cells = (std::size_t{1} << k) - 1;
  std::vector<cwc::CoordSet> assignment(cells);
  std::vector<bool> used(n + 1, false);
  std::set<std::string> seen;

  auto record = [&] {
    std::vector<cwc::Codeword> rows;
    for (unsigned i = 1; i <= k; ++i) {
      cwc::Codeword row(n);
      for (std::uint32_t mask = 1; mask <= cells; ++mask)
        if (mask & (std::uint32_t{1} << (i - 1)))
          for (cwc::Coord c : assignment[mask - 1]) row.set(c);
      rows.push_back(std::move(row));
    }
    seen.insert(cwc::render_code(cwc::span_basis(rows)));
  };

  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells) {
      record();
      return;
    }
    cwc::CoordSet cell;
    std::function<void(cwc::Coord)> pick = [&](cwc::Coord start) {
      if (cell.size() == m) {
        assignment[idx] = cell;
        place(idx + 1);
        return;
      }
      for (cwc::Coord c = start; c <= static_cast<cwc::Coord>(n); ++c) {
        if (used[c]) continue;
        used[c] = true;
        cell.push_back(c);
        pick(c + 1);
        cell.pop_back();
        used[c] = false;
      }
    };
    pick(1);
  };
  place(0);
  return seen.size();
}

}  // namespace cwc_test
