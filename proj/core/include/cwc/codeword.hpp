#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cwc {

// Coordinates are 1-based everywhere in the public interface; bit/word offsets
// are an internal detail.
using Coord = std::uint32_t;

// A finite set of coordinates, sorted ascending, duplicate-free.
using CoordSet = std::vector<Coord>;

// Fixed-length vector over GF(2), bit-packed 64 positions per word so that
// equality, XOR and popcount run word-parallel.
class Codeword {
 public:
  explicit Codeword(std::size_t length);  // all-zero word, length >= 1

  static Codeword from_string(std::string_view bits);  // '0'/'1' characters
  static Codeword from_support(std::size_t length, const CoordSet& support);

  std::size_t length() const { return len_; }
  bool test(Coord pos) const;  // 1-based
  void set(Coord pos, bool value = true);
  void flip(Coord pos);
  void xor_with(const Codeword& other);  // lengths must match
  bool is_zero() const;
  Coord first_set() const;  // smallest set coordinate, 0 if the word is zero
  std::size_t popcount() const;
  std::string to_string() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend CoordSet support(const Codeword& c);

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;

  void check_pos(Coord pos) const;
};

CoordSet support(const Codeword& c);  // 1-based coordinates carrying a 1
std::size_t weight(const Codeword& c);
Codeword add(const Codeword& a, const Codeword& b);  // GF(2) sum (XOR)

}  // namespace cwc
