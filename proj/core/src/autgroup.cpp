#include "cwc/autgroup.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_set>
#include <utility>

#include "json.hpp"

#include "cwc/equivalence.hpp"
#include "cwc/errors.hpp"

namespace cwc {

std::string_view to_string(PAutMethod m) {
  switch (m) {
    case PAutMethod::formula: return "formula";
    case PAutMethod::brute_force: return "brute-force";
    case PAutMethod::generated: return "generated";
  }
  return "unknown";
}

BigInt factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;  // exact at every step: out is C(n-r+i, i) * something integral
  }
  return out;
}

BigInt gl2_order(unsigned k) {
  if (k == 0) throw std::invalid_argument("gl2_order: k must be positive");
  const BigInt total = BigInt(1) << k;
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) out *= total - (BigInt(1) << i);
  return out;
}

namespace {

// Validated (k, m, n) with k >= 2; returns the support size (2^k - 1) * m.
std::size_t require_admissible(unsigned k, std::size_t m, std::size_t n, const char* what) {
  if (k < 2) throw std::invalid_argument(std::string(what) + ": requires k >= 2");
  if (m == 0) throw std::invalid_argument(std::string(what) + ": m must be positive");
  if (k > kMaxPartitionIndices || m > (SIZE_MAX >> k))
    throw std::invalid_argument(std::string(what) + ": parameters out of range");
  const ParamsVerdict v = admissible_params(k, (std::size_t{1} << (k - 1)) * m, n);
  if (!v.admissible) throw std::invalid_argument(std::string(what) + ": " + v.obstruction);
  return ((std::size_t{1} << k) - 1) * m;
}

CoordSet complement(const CoordSet& s, std::size_t n) {
  CoordSet out;
  out.reserve(n - s.size());
  std::size_t idx = 0;
  for (Coord c = 1; c <= static_cast<Coord>(n); ++c) {
    if (idx < s.size() && s[idx] == c)
      ++idx;
    else
      out.push_back(c);
  }
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;  // FNV-1a over the image vector
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

using ImageSet = std::unordered_set<std::vector<std::uint32_t>, VecHash>;

// Breadth-first closure of the generated group, elements kept as image
// vectors. Throws once the element count passes `cap`.
ImageSet closure_set(std::size_t n, const std::vector<Permutation>& gens, std::size_t cap) {
  for (const Permutation& g : gens)
    if (g.degree() != n)
      throw std::invalid_argument("closure: generator degree differs from n");
  ImageSet set;
  std::vector<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> id(n);
  for (std::size_t j = 0; j < n; ++j) id[j] = static_cast<std::uint32_t>(j + 1);
  set.insert(id);
  queue.push_back(std::move(id));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::vector<std::uint32_t> cur = queue[qi];  // copy: queue may reallocate
    for (const Permutation& g : gens) {
      std::vector<std::uint32_t> next(n);
      for (std::size_t j = 0; j < n; ++j) next[j] = g(cur[j]);
      if (set.insert(next).second) {
        if (set.size() > cap)
          throw cap_exceeded("closure: generated group exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return set;
}

}  // namespace

BigInt paut_order_formula(unsigned k, std::size_t m, std::size_t n) {
  const std::size_t body = require_admissible(k, m, n, "paut_order_formula");
  const std::size_t cells = (std::size_t{1} << k) - 1;
  return factorial(n - body) *
         boost::multiprecision::pow(factorial(m), static_cast<unsigned>(cells)) * gl2_order(k);
}

BigInt code_count_formula(unsigned k, std::size_t m, std::size_t n) {
  const std::size_t body = require_admissible(k, m, n, "code_count_formula");
  const std::size_t cells = (std::size_t{1} << k) - 1;
  const BigInt gl = gl2_order(k);

  // first form: place the support, then fill cells one at a time
  BigInt f1 = binomial(n, body);
  for (std::size_t i = 1; i <= cells; ++i) f1 *= binomial((cells + 1 - i) * m, m);
  BigInt q1, r1;
  boost::multiprecision::divide_qr(f1, gl, q1, r1);
  if (r1 != 0) throw std::logic_error("code_count_formula: first form does not divide evenly");

  // second form: multinomial of the support into equal cells
  BigInt f2 = binomial(n, body) * factorial(body);
  const BigInt mf = boost::multiprecision::pow(factorial(m), static_cast<unsigned>(cells));
  BigInt q2, r2;
  boost::multiprecision::divide_qr(f2, mf * gl, q2, r2);
  if (r2 != 0) throw std::logic_error("code_count_formula: second form does not divide evenly");

  if (q1 != q2) throw std::logic_error("code_count_formula: the two closed forms disagree");
  if (q1 * paut_order_formula(k, m, n) != factorial(n))
    throw std::logic_error("code_count_formula: count * group order != n!");
  return q1;
}

std::vector<CoordSet> orbits(const std::vector<Permutation>& generators, std::size_t n) {
  if (n == 0) throw std::invalid_argument("orbits: n must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != n) throw std::invalid_argument("orbits: generator degree differs from n");

  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Permutation& g : generators)
    for (std::uint32_t j = 1; j <= n; ++j) {
      const std::size_t a = find(j - 1), b = find(g(j) - 1);
      if (a != b) parent[a] = b;
    }

  std::vector<CoordSet> out;
  std::map<std::size_t, std::size_t> slot;  // root -> index in out, by first appearance
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto [it, fresh] = slot.try_emplace(r, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(static_cast<Coord>(i + 1));
  }
  return out;
}

std::size_t closure_order(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure_order: no generators");
  return closure_set(generators.front().degree(), generators, cap).size();
}

PAutReport brute_force_paut(const LinearCode& code, std::size_t cap) {
  const std::size_t n = code.length();
  const std::size_t effective = std::min(cap, kBruteForceHardCap);
  if (n > effective)
    throw cap_exceeded("brute_force_paut: length " + std::to_string(n) + " exceeds cap " +
                       std::to_string(effective));
  const unsigned k = code.dimension();

  // Group coordinates by their column in the basis matrix. An automorphism
  // permutes the whole code, hence maps equal-column classes onto
  // equal-column classes (zero columns to zero columns), so only candidates
  // respecting class sizes need to be tried.
  std::vector<std::uint32_t> col(n, 0);
  for (unsigned i = 0; i < k; ++i)
    for (Coord c : support(code.basis_row(i))) col[c - 1] |= std::uint32_t{1} << i;
  std::map<std::uint32_t, CoordSet> by_col;
  for (Coord c = 1; c <= static_cast<Coord>(n); ++c) by_col[col[c - 1]].push_back(c);

  std::vector<CoordSet> classes;  // zero class (if any) first, then by smallest coordinate
  std::vector<std::vector<std::size_t>> allowed;  // candidate target classes per source
  const bool has_zero = by_col.count(0) != 0;
  if (has_zero) classes.push_back(by_col.at(0));
  {
    std::vector<CoordSet> nonzero;
    for (const auto& [c, coords] : by_col)
      if (c != 0) nonzero.push_back(coords);
    std::sort(nonzero.begin(), nonzero.end(),
              [](const CoordSet& a, const CoordSet& b) { return a.front() < b.front(); });
    classes.insert(classes.end(), nonzero.begin(), nonzero.end());
  }
  allowed.resize(classes.size());
  const std::size_t first_nonzero = has_zero ? 1 : 0;
  if (has_zero) allowed[0] = {0};
  for (std::size_t i = first_nonzero; i < classes.size(); ++i)
    for (std::size_t j = first_nonzero; j < classes.size(); ++j)
      if (classes[i].size() == classes[j].size()) allowed[i].push_back(j);

  std::vector<Permutation> found;
  std::vector<std::uint32_t> images(n, 0);
  std::vector<bool> used(classes.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == classes.size()) {
      Permutation sigma = Permutation::from_images(images);
      for (const Codeword& row : code.basis())
        if (!code.contains(apply(sigma, row))) return;
      found.push_back(std::move(sigma));
      return;
    }
    for (std::size_t t : allowed[idx]) {
      if (used[t]) continue;
      used[t] = true;
      CoordSet target = classes[t];  // ascending; next_permutation walks all bijections
      do {
        for (std::size_t x = 0; x < target.size(); ++x) images[classes[idx][x] - 1] = target[x];
        rec(idx + 1);
      } while (std::next_permutation(target.begin(), target.end()));
      used[t] = false;
    }
  };
  rec(0);

  std::sort(found.begin(), found.end());
  const std::size_t order = found.size();

  // reduce the element list to a generating set: sweep ascending, keep what
  // the current closure does not yet contain
  std::vector<Permutation> gens;
  ImageSet closed = closure_set(n, gens, order);
  for (const Permutation& s : found) {
    if (closed.size() == order) break;
    if (closed.count(s.images())) continue;
    gens.push_back(s);
    closed = closure_set(n, gens, order);
  }
  if (closed.size() != order)
    throw std::logic_error("brute_force_paut: generator reduction failed");

  PAutReport rep;
  rep.n = n;
  rep.k = k;
  rep.order = order;
  rep.generators = std::move(gens);
  rep.orbits = orbits(rep.generators, n);
  rep.transitive = rep.orbits.size() == 1;
  rep.method = PAutMethod::brute_force;
  return rep;
}

PAutReport structured_paut_generators(const LinearCode& code) {
  const Characterization chk = check_characterization(code);
  if (!chk.constant_weight)
    throw std::invalid_argument("structured_paut_generators: not a constant weight code (" +
                                chk.violation + ")");
  const std::size_t n = code.length();
  const unsigned k = code.dimension();
  const auto& cells = chk.cells.cells;

  std::vector<Permutation> gens;
  // symmetric group on each cell
  for (const CoordSet& cell : cells)
    for (std::size_t t = 0; t + 1 < cell.size(); ++t)
      gens.push_back(transposition(n, cell[t], cell[t + 1]));
  // symmetric group on the zero coordinates
  const CoordSet zeros = complement(chk.cells.ground, n);
  for (std::size_t t = 0; t + 1 < zeros.size(); ++t)
    gens.push_back(transposition(n, zeros[t], zeros[t + 1]));
  // Cell transports for a generating pair of basis changes. Relabeling cells
  // by any invertible map g and sending each cell onto its image in sorted
  // order maps every codeword support onto a codeword support, hence fixes
  // the code; g over a generating pair of GL(k,2) yields the whole
  // cell-relabeling factor of the group.
  auto transport = [&](const std::function<std::uint32_t(std::uint32_t)>& g_of) {
    std::vector<std::uint32_t> images(n);
    for (std::size_t j = 0; j < n; ++j) images[j] = static_cast<std::uint32_t>(j + 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      const CoordSet& src = cells[mask - 1];
      const CoordSet& dst = cells[g_of(mask) - 1];
      for (std::size_t t = 0; t < src.size(); ++t) images[src[t] - 1] = dst[t];
    }
    return Permutation::from_images(std::move(images));
  };
  // transvection: add component 1 to component 2
  gens.push_back(transport([](std::uint32_t v) { return (v & 1u) ? (v ^ 2u) : v; }));
  // cyclic shift of the k components
  gens.push_back(transport(
      [k](std::uint32_t v) { return ((v << 1) | (v >> (k - 1))) & ((std::uint32_t{1} << k) - 1); }));

  for (const Permutation& g : gens)
    if (permute_code(g, code) != code)
      throw std::logic_error("structured_paut_generators: generator fails to stabilize the code");

  PAutReport rep;
  rep.n = n;
  rep.k = k;
  rep.order = paut_order_formula(k, chk.m, n);
  rep.generators = std::move(gens);
  rep.orbits = orbits(rep.generators, n);
  rep.transitive = rep.orbits.size() == 1;
  rep.method = PAutMethod::generated;
  if (n <= kBruteForceDefaultCap &&
      BigInt(closure_order(rep.generators)) != rep.order)
    throw std::logic_error("structured_paut_generators: closure order disagrees with the formula");
  return rep;
}

PAutReport formula_paut_report(const LinearCode& code) {
  const Characterization chk = check_characterization(code);
  if (!chk.constant_weight)
    throw std::invalid_argument("formula_paut_report: not a constant weight code (" +
                                chk.violation + ")");
  const std::size_t n = code.length();
  PAutReport rep;
  rep.n = n;
  rep.k = code.dimension();
  rep.order = paut_order_formula(rep.k, chk.m, n);
  // The structured generators already attain this order, so they generate the
  // whole group; its orbits are the support and the zero coordinates.
  const CoordSet zeros = complement(chk.cells.ground, n);
  rep.orbits.push_back(chk.cells.ground);
  if (!zeros.empty()) rep.orbits.push_back(zeros);
  rep.transitive = zeros.empty();
  rep.method = PAutMethod::formula;
  return rep;
}

std::pair<Permutation, Permutation> s3_subgroup_generators(const CanonicalSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("s3_subgroup_generators: requires k >= 2");
  const LinearCode code = canonical_code(spec);  // also validates the spec
  const std::size_t n = spec.n;

  std::vector<std::vector<std::uint32_t>> c1, c2;
  if (spec.m >= 3) {
    // coordinates 1,2,3 share the first cell, so S_3 on them stabilizes
    c1 = {{1, 2}};
    c2 = {{1, 2, 3}};
  } else if (spec.m == 1) {
    // a pair and a triple inside every aligned 4-block of the body
    const std::size_t body = (std::size_t{1} << spec.k) - 1;
    for (std::size_t s = 0; s + 3 <= body; s += 4) {
      c1.push_back({static_cast<std::uint32_t>(s + 2), static_cast<std::uint32_t>(s + 3)});
      c2.push_back({static_cast<std::uint32_t>(s + 1), static_cast<std::uint32_t>(s + 2),
                    static_cast<std::uint32_t>(s + 3)});
    }
  } else {  // m == 2: the printed pattern with blocks indexed i = 2..k
    for (unsigned i = 2; i <= spec.k; ++i) {
      const std::uint32_t base = std::uint32_t{1} << (i + 1);
      c1.push_back({base - 5, base - 3});
      c1.push_back({base - 4, base - 2});
      c2.push_back({base - 7, base - 5, base - 3});
      c2.push_back({base - 6, base - 4, base - 2});
    }
  }
  const Permutation g1 = Permutation::from_disjoint_cycles(n, c1);
  const Permutation g2 = Permutation::from_disjoint_cycles(n, c2);
  for (const Permutation* g : {&g1, &g2})
    if (permute_code(*g, code) != code)
      throw pattern_discrepancy("s3_subgroup_generators: the printed pattern for k=" +
                                std::to_string(spec.k) + ", m=" + std::to_string(spec.m) +
                                " does not stabilize the canonical code");
  return {g1, g2};
}

GroupCodeVerdict group_code_necessary(const LinearCode& code, std::size_t cap) {
  const PAutReport rep = brute_force_paut(code, cap);
  return GroupCodeVerdict{rep.transitive, rep.orbits};
}

bool multiple_of_six_check(unsigned k, std::size_t m, std::size_t n) {
  return paut_order_formula(k, m, n) % 6 == 0;
}

std::string render_paut_report_json(const PAutReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["order"] = report.order.str();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const Permutation& g : report.generators) gens.push_back(render_cycles(g));
  j["generators"] = std::move(gens);
  nlohmann::ordered_json orbs = nlohmann::ordered_json::array();
  for (const CoordSet& o : report.orbits) orbs.push_back(o);
  j["orbits"] = std::move(orbs);
  j["transitive"] = report.transitive;
  j["method"] = std::string(to_string(report.method));
  return j.dump();
}

}  // namespace cwc
