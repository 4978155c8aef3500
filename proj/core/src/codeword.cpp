#include "cwc/codeword.hpp"

#include <bit>
#include <stdexcept>

#include "cwc/errors.hpp"

namespace cwc {

Codeword::Codeword(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {
  if (length == 0) throw std::invalid_argument("codeword: length must be positive");
}

Codeword Codeword::from_string(std::string_view bits) {
  if (bits.empty()) throw parse_error("codeword: empty bit string");
  Codeword c(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      c.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else if (bits[i] != '0') {
      throw parse_error(std::string("codeword: invalid character '") + bits[i] + "'");
    }
  }
  return c;
}

Codeword Codeword::from_support(std::size_t length, const CoordSet& support) {
  Codeword c(length);
  for (Coord pos : support) c.set(pos);
  return c;
}

void Codeword::check_pos(Coord pos) const {
  if (pos == 0 || pos > len_)
    throw std::invalid_argument("codeword: coordinate " + std::to_string(pos) +
                                " out of range 1.." + std::to_string(len_));
}

bool Codeword::test(Coord pos) const {
  check_pos(pos);
  const std::size_t i = pos - 1;
  return (words_[i >> 6] >> (i & 63)) & 1;
}

void Codeword::set(Coord pos, bool value) {
  check_pos(pos);
  const std::size_t i = pos - 1;
  if (value)
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

void Codeword::flip(Coord pos) {
  check_pos(pos);
  const std::size_t i = pos - 1;
  words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

void Codeword::xor_with(const Codeword& other) {
  if (other.len_ != len_)
    throw std::invalid_argument("codeword: length mismatch (" + std::to_string(len_) + " vs " +
                                std::to_string(other.len_) + ")");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool Codeword::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

Coord Codeword::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Coord>(i * 64 + std::countr_zero(words_[i]) + 1);
  return 0;
}

std::size_t Codeword::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string Codeword::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if ((words_[i >> 6] >> (i & 63)) & 1) s[i] = '1';
  return s;
}

CoordSet support(const Codeword& c) {
  CoordSet out;
  out.reserve(c.popcount());
  for (std::size_t i = 0; i < c.words_.size(); ++i) {
    std::uint64_t w = c.words_[i];
    while (w) {
      out.push_back(static_cast<Coord>(i * 64 + std::countr_zero(w) + 1));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t weight(const Codeword& c) { return c.popcount(); }

Codeword add(const Codeword& a, const Codeword& b) {
  Codeword out = a;
  out.xor_with(b);
  return out;
}

}  // namespace cwc
