#include "cwc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "cwc/errors.hpp"

namespace cwc {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation: degree must be positive");
  std::vector<std::uint32_t> images(degree);
  for (std::size_t j = 0; j < degree; ++j) images[j] = static_cast<std::uint32_t>(j + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  const std::size_t n = images.size();
  if (n == 0) throw std::invalid_argument("permutation: degree must be positive");
  std::vector<bool> seen(n + 1, false);
  for (std::uint32_t v : images) {
    if (v == 0 || v > n)
      throw std::invalid_argument("permutation: image " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v]) throw std::invalid_argument("permutation: image " + std::to_string(v) + " repeats");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_disjoint_cycles(
    std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> seen(degree + 1, false);
  for (const auto& cyc : cycles) {
    for (std::uint32_t v : cyc) {
      if (v == 0 || v > degree)
        throw std::invalid_argument("cycles: element " + std::to_string(v) +
                                    " exceeds degree " + std::to_string(degree));
      if (seen[v])
        throw std::invalid_argument("cycles: repeated element " + std::to_string(v));
      seen[v] = true;
    }
    if (cyc.size() < 2) continue;  // singleton cycles are fixed points
    for (std::size_t t = 0; t + 1 < cyc.size(); ++t) p.images_[cyc[t] - 1] = cyc[t + 1];
    p.images_[cyc.back() - 1] = cyc.front();
  }
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degrees differ (" + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()) + ")");
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t j = 1; j <= a.degree(); ++j) images[j - 1] = b(a(j));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& a) {
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t j = 1; j <= a.degree(); ++j) images[a(j) - 1] = j;
  return Permutation::from_images(std::move(images));
}

Codeword apply(const Permutation& sigma, const Codeword& c) {
  if (sigma.degree() != c.length())
    throw std::invalid_argument("apply: permutation degree " + std::to_string(sigma.degree()) +
                                " differs from word length " + std::to_string(c.length()));
  Codeword out(c.length());
  for (Coord j : support(c)) out.set(sigma(j));
  return out;
}

Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
  if (a == b) throw std::invalid_argument("transposition: points must differ");
  return Permutation::from_disjoint_cycles(degree, {{a, b}});
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation: degree must be positive");
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error("cycle notation: empty input");
  bool saw_any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw parse_error("cycle notation: expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw parse_error("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error(std::string("cycle notation: unexpected character '") + text[i] + "'");
      std::uint32_t value = 0;
      const char* begin = text.data() + i;
      const char* end = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{}) throw parse_error("cycle notation: element does not fit");
      i += static_cast<std::size_t>(ptr - begin);
      cyc.push_back(value);
    }
    saw_any = true;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));  // "()" contributes nothing
  }
  if (!saw_any) throw parse_error("cycle notation: empty input");
  try {
    return Permutation::from_disjoint_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("cycle notation: ") + e.what());
  }
}

std::string render_cycles(const Permutation& sigma) {
  std::string out;
  std::vector<bool> done(sigma.degree() + 1, false);
  // sweeping ascending guarantees each cycle is met at its smallest element,
  // so the normal form falls out of the walk order
  for (std::uint32_t j = 1; j <= sigma.degree(); ++j) {
    if (done[j] || sigma(j) == j) continue;
    out += '(';
    std::uint32_t x = j;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[x] = true;
      first = false;
      x = sigma(x);
    } while (x != j);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace cwc
