#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwc/codeword.hpp"

namespace cwc {

// Permutation of {1..n}. images()[j-1] = sigma(j), 1-based throughout.
class Permutation {
 public:
  static Permutation identity(std::size_t degree);
  static Permutation from_images(std::vector<std::uint32_t> images);
  // Cycles must be pairwise disjoint; unmentioned points stay fixed.
  static Permutation from_disjoint_cycles(std::size_t degree,
                                          const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t j) const { return images_[j - 1]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image vectors; gives generator lists a stable order.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

// Apply a first, then b: compose(a, b)(x) = b(a(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// Coordinate action on words: the result carries c's bit j at position
// sigma(j), i.e. result[i] = c[sigma^-1(i)].
Codeword apply(const Permutation& sigma, const Codeword& c);

Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b);

// Cycle notation. Rendering is in normal form: cycles sorted by smallest
// element, each rotated to start at its smallest element, fixed points
// omitted, elements space-separated, identity rendered "()". Parsing accepts
// well-formed disjoint cycles over 1..degree and rejects repeated symbols,
// out-of-range symbols, and malformed text.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string render_cycles(const Permutation& sigma);

}  // namespace cwc
