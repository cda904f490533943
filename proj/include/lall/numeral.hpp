// Binary numerals as bit lists, least significant bit first.
//
// The empty list denotes 0. Leading zeros are allowed, so several lists
// represent the same value; the bit *length* (list length) is primitive
// and is what all the length bounds in this library talk about.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lall {

struct Numeral {
  std::vector<uint8_t> bits;  // lsb first, each 0 or 1

  Numeral() = default;
  explicit Numeral(std::vector<uint8_t> b) : bits(std::move(b)) {}

  static Numeral of_value(uint64_t v) {
    Numeral n;
    while (v) {
      n.bits.push_back(static_cast<uint8_t>(v & 1));
      v >>= 1;
    }
    return n;
  }

  uint64_t value() const {
    uint64_t v = 0;
    for (size_t i = bits.size(); i-- > 0;) v = (v << 1) | bits[i];
    return v;
  }

  size_t length() const { return bits.size(); }
  bool empty() const { return bits.empty(); }

  // Pred / list tail: drop the lsb; 0 stays 0.
  Numeral tail() const {
    if (bits.empty()) return Numeral{};
    return Numeral(std::vector<uint8_t>(bits.begin() + 1, bits.end()));
  }

  Numeral cons(uint8_t bit) const {
    Numeral n;
    n.bits.reserve(bits.size() + 1);
    n.bits.push_back(bit);
    n.bits.insert(n.bits.end(), bits.begin(), bits.end());
    return n;
  }

  bool odd() const { return !bits.empty() && bits[0] == 1; }

  bool operator==(const Numeral& o) const { return bits == o.bits; }
  bool operator!=(const Numeral& o) const { return bits != o.bits; }

  std::string to_string() const {
    if (bits.empty()) return "e";  // empty word
    std::string s;
    for (size_t i = bits.size(); i-- > 0;) s += char('0' + bits[i]);
    return s;
  }

  // Parse "e" or a msb-first 0/1 string, or a decimal value prefixed with '#'.
  static Numeral parse(const std::string& s);
};

inline Numeral Numeral::parse(const std::string& s) {
  if (s == "e" || s.empty()) return Numeral{};
  if (s[0] == '#') return of_value(std::stoull(s.substr(1)));
  Numeral n;
  for (size_t i = s.size(); i-- > 0;) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bad numeral: " + s);
    n.bits.push_back(static_cast<uint8_t>(s[i] - '0'));
  }
  return n;
}

// All bit lists of length <= max_len, shortest first (2^0 + ... + 2^max_len of them).
inline std::vector<Numeral> all_numerals_up_to(size_t max_len) {
  std::vector<Numeral> out;
  for (size_t len = 0; len <= max_len; ++len) {
    for (uint64_t m = 0; m < (uint64_t(1) << len); ++m) {
      Numeral n;
      for (size_t i = 0; i < len; ++i) n.bits.push_back(static_cast<uint8_t>((m >> i) & 1));
      out.push_back(std::move(n));
    }
  }
  return out;
}

}  // namespace lall
