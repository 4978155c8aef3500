// cwc — constant weight code toolkit.
//
// Exit codes: 0 success (or positive verdict), 1 negative verdict,
// 2 bad input, 3 internal inconsistency.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cwc/cwc.hpp"

namespace {

using nlohmann::ordered_json;

cwc::LinearCode read_code(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw cwc::parse_error("cannot open file: " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return cwc::parse_code(text);
}

void print_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::string orbit_line(const std::vector<cwc::CoordSet>& orbits) {
  std::string out = "orbits:";
  for (const cwc::CoordSet& o : orbits) out += " " + cwc::render_coords(o);
  return out;
}

int run_construct(unsigned k, std::size_t m, std::size_t n, bool json) {
  const cwc::CanonicalSpec spec{k, m, n};
  const cwc::LinearCode code = cwc::canonical_code(spec);
  if (json) {
    ordered_json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["w"] = (std::size_t{1} << (k - 1)) * m;
    j["m"] = m;
    ordered_json rows = ordered_json::array();
    for (const cwc::Codeword& r : code.basis()) rows.push_back(r.to_string());
    j["rows"] = std::move(rows);
    print_json(j);
  } else {
    std::cout << cwc::render_code(code);
  }
  return 0;
}

int run_verify(const std::string& file, bool json) {
  const cwc::LinearCode code = read_code(file);
  const std::size_t n = code.length();
  const unsigned k = code.dimension();
  if (k == 1) {
    // a one-dimensional code has a single nonzero word, so it is always
    // constant weight
    const std::size_t w = weight(code.basis_row(0));
    if (json) {
      ordered_json j;
      j["constant_weight"] = true;
      j["n"] = n;
      j["k"] = k;
      j["w"] = w;
      print_json(j);
    } else {
      std::cout << "constant weight: yes\n"
                << "n=" << n << " k=1 w=" << w << "\n";
    }
    return 0;
  }
  const cwc::Characterization chk = cwc::check_characterization(code);
  if (json) {
    ordered_json j;
    j["constant_weight"] = chk.constant_weight;
    j["n"] = n;
    j["k"] = k;
    if (chk.constant_weight) {
      j["w"] = chk.w;
      j["m"] = chk.m;
      j["partition"] = ordered_json::parse(cwc::render_partition_json(chk.cells));
    } else {
      j["violation"] = chk.violation;
    }
    print_json(j);
  } else if (chk.constant_weight) {
    std::cout << "constant weight: yes\n"
              << "n=" << n << " k=" << k << " w=" << chk.w << " m=" << chk.m << "\n"
              << cwc::render_partition(chk.cells);
  } else {
    std::cout << "constant weight: no\n"
              << "n=" << n << " k=" << k << "\n"
              << "violation: " << chk.violation << "\n";
  }
  return chk.constant_weight ? 0 : 1;
}

int run_partition(const std::string& file, bool json) {
  const cwc::LinearCode code = read_code(file);
  std::vector<cwc::CoordSet> sets;
  for (const cwc::Codeword& row : code.basis()) sets.push_back(support(row));
  const cwc::SupportPartition p = cwc::partition(sets);
  if (json) {
    ordered_json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["partition"] = ordered_json::parse(cwc::render_partition_json(p));
    print_json(j);
  } else {
    std::cout << cwc::render_partition(p);
  }
  return 0;
}

int run_equiv(const std::string& file_a, const std::string& file_b, bool json) {
  const cwc::LinearCode a = read_code(file_a);
  const cwc::LinearCode b = read_code(file_b);

  // equivalence is decided through the support partition, so at least one
  // side must pass the characterization for the question to be well posed
  std::string viol_a, viol_b;
  if (a.dimension() >= 2) {
    const cwc::Characterization c = cwc::check_characterization(a);
    if (!c.constant_weight) viol_a = c.violation;
  }
  if (b.dimension() >= 2) {
    const cwc::Characterization c = cwc::check_characterization(b);
    if (!c.constant_weight) viol_b = c.violation;
  }
  if (!viol_a.empty() && !viol_b.empty())
    throw std::invalid_argument("equivalence is decided for constant weight codes only (left: " +
                                viol_a + "; right: " + viol_b + ")");

  std::string reason;
  try {
    const cwc::Permutation sigma = cwc::equivalence_permutation(a, b);
    if (json) {
      ordered_json j;
      j["equivalent"] = true;
      j["permutation"] = cwc::render_cycles(sigma);
      print_json(j);
    } else {
      std::cout << cwc::render_cycles(sigma) << "\n";
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    reason = e.what();
    constexpr std::string_view prefix = "equivalence: ";
    if (reason.starts_with(prefix)) reason.erase(0, prefix.size());
  }
  if (json) {
    ordered_json j;
    j["equivalent"] = false;
    j["reason"] = reason;
    print_json(j);
  } else {
    std::cout << "not equivalent: " << reason << "\n";
  }
  return 1;
}

int run_paut(const std::string& file, bool brute, bool generators, std::size_t cap, bool json) {
  const cwc::LinearCode code = read_code(file);
  if (code.dimension() < 2)
    throw std::invalid_argument("paut: requires dimension k >= 2");
  const cwc::Characterization chk = cwc::check_characterization(code);
  if (!chk.constant_weight)
    throw std::invalid_argument("not a constant weight code: " + chk.violation);

  const cwc::PAutReport formula = cwc::formula_paut_report(code);
  std::optional<cwc::PAutReport> brute_rep, gen_rep;
  if (generators) gen_rep = cwc::structured_paut_generators(code);
  if (brute) {
    brute_rep = cwc::brute_force_paut(code, cap);
    if (brute_rep->order != formula.order)
      throw std::logic_error("brute-force group order disagrees with the formula");
  }
  const cwc::PAutReport& strongest = brute_rep ? *brute_rep : (gen_rep ? *gen_rep : formula);

  if (json) {
    std::cout << cwc::render_paut_report_json(strongest) << "\n";
  } else {
    std::cout << "n=" << code.length() << " k=" << code.dimension() << " w=" << chk.w
              << " m=" << chk.m << "\n"
              << "order (formula): " << formula.order << "\n";
    if (brute_rep) std::cout << "order (brute-force): " << brute_rep->order << "\n";
    if (!strongest.generators.empty()) {
      std::cout << "generators:";
      bool first = true;
      for (const cwc::Permutation& g : strongest.generators) {
        std::cout << (first ? " " : ", ") << cwc::render_cycles(g);
        first = false;
      }
      std::cout << "\n";
    }
    std::cout << orbit_line(strongest.orbits) << "\n"
              << "transitive: " << (strongest.transitive ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_count(unsigned k, std::size_t m, std::size_t n, bool json) {
  const cwc::BigInt count = cwc::code_count_formula(k, m, n);
  if (json) {
    ordered_json j;
    j["k"] = k;
    j["m"] = m;
    j["n"] = n;
    j["count"] = count.str();
    print_json(j);
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

int run_feasible(const std::string& file, std::size_t cap, bool json) {
  const cwc::LinearCode code = read_code(file);
  const cwc::GroupCodeVerdict verdict = cwc::group_code_necessary(code, cap);
  if (json) {
    ordered_json j;
    j["possible"] = verdict.possible;
    ordered_json orbs = ordered_json::array();
    for (const cwc::CoordSet& o : verdict.orbit_list) orbs.push_back(o);
    j["orbits"] = std::move(orbs);
    print_json(j);
  } else {
    std::cout << (verdict.possible ? "possible" : "impossible") << "\n"
              << orbit_line(verdict.orbit_list) << "\n";
  }
  return verdict.possible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary linear constant weight codes: construction, verification, equivalence,\n"
               "and permutation automorphism groups"};
  app.require_subcommand(1);

  unsigned k = 0;
  std::size_t m = 0, n = 0;
  std::string file = "-", file_b = "-";
  std::size_t cap = cwc::kBruteForceDefaultCap;
  bool json = false, brute = false, generators = false;
  int rc = 0;

  CLI::App* construct = app.add_subcommand(
      "construct", "print a canonical constant weight code with the given parameters");
  construct->add_option("k", k, "dimension")->required();
  construct->add_option("m", m, "cell size")->required();
  construct->add_option("n", n, "code length")->required();
  construct->add_flag("--json", json, "machine-readable output");
  construct->callback([&] { rc = run_construct(k, m, n, json); });

  CLI::App* verify = app.add_subcommand(
      "verify", "check whether a code is constant weight and print its support partition");
  verify->add_option("file", file, "code file (\"-\" for stdin)")->required();
  verify->add_flag("--json", json, "machine-readable output");
  verify->callback([&] { rc = run_verify(file, json); });

  CLI::App* part = app.add_subcommand(
      "partition", "print the support partition of a code's basis rows");
  part->add_option("file", file, "code file (\"-\" for stdin)")->required();
  part->add_flag("--json", json, "machine-readable output");
  part->callback([&] { rc = run_partition(file, json); });

  CLI::App* equiv = app.add_subcommand(
      "equiv", "decide equivalence of two constant weight codes and print a permutation");
  equiv->add_option("left", file, "first code file")->required();
  equiv->add_option("right", file_b, "second code file")->required();
  equiv->add_flag("--json", json, "machine-readable output");
  equiv->callback([&] { rc = run_equiv(file, file_b, json); });

  CLI::App* paut = app.add_subcommand(
      "paut", "report the permutation automorphism group of a constant weight code");
  paut->add_option("file", file, "code file (\"-\" for stdin)")->required();
  paut->add_flag("--brute", brute, "confirm the order by exhaustive search");
  paut->add_flag("--generators", generators, "list a structured generating set");
  paut->add_option("--cap", cap, "length cap for exhaustive search")
      ->default_val(cwc::kBruteForceDefaultCap);
  paut->add_flag("--json", json, "machine-readable output");
  paut->callback([&] { rc = run_paut(file, brute, generators, cap, json); });

  CLI::App* count = app.add_subcommand(
      "count", "count the constant weight codes with the given parameters");
  count->add_option("k", k, "dimension")->required();
  count->add_option("m", m, "cell size")->required();
  count->add_option("n", n, "code length")->required();
  count->add_flag("--json", json, "machine-readable output");
  count->callback([&] { rc = run_count(k, m, n, json); });

  CLI::App* feasible = app.add_subcommand(
      "feasible", "test the necessary condition for a code to be a group code");
  feasible->add_option("file", file, "code file (\"-\" for stdin)")->required();
  feasible->add_option("--cap", cap, "length cap for exhaustive search")
      ->default_val(cwc::kBruteForceDefaultCap);
  feasible->add_flag("--json", json, "machine-readable output");
  feasible->callback([&] { rc = run_feasible(file, cap, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
