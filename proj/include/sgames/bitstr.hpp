#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sgames {

// Finite 0/1 string. Bit i corresponds to player i, so the character at
// index 0 is the membership bit of player 0.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view bits);

  static BitString from_mask(unsigned mask, std::size_t width);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int bit(std::size_t i) const { return bits_[i] - '0'; }

  BitString complement() const;
  BitString prefix(std::size_t k) const;
  // Drops the last n bits (alpha^- for n=1, alpha^-- for n=2).
  BitString drop_back(std::size_t n) const;
  BitString drop_front(std::size_t n) const;
  BitString append(int bit) const;

  bool is_prefix_of(const BitString& other) const;
  bool extends(const BitString& other) const { return other.is_prefix_of(*this); }

  const std::string& str() const { return bits_; }

  friend BitString operator+(const BitString& a, const BitString& b);
  auto operator<=>(const BitString&) const = default;

 private:
  std::string bits_;
};

// True iff neither string is a prefix of the other, i.e. they differ at
// some index below both lengths.
bool incompatible(const BitString& a, const BitString& b);

// Even-length string whose bit pairs are all 10 or 01. The empty string
// qualifies.
bool is_p_string(const BitString& x);

// Even-length string of length >= 2 that is a p-string followed by 00 or 11.
bool is_d_string(const BitString& x);

// True iff some prefix of x is a d-string.
bool extends_d_string(const BitString& x);

// "beta properly contains alpha": |alpha| <= |beta|, alpha(k) <= beta(k) for
// all k < |alpha|, with strict inequality somewhere.
bool properly_contains(const BitString& beta, const BitString& alpha);

// All 2^len strings of the given length, in lexicographic order.
std::vector<BitString> all_strings(std::size_t len);

// All p-strings of the given (even) length extending the given prefix.
std::vector<BitString> p_strings_extending(const BitString& prefix, std::size_t len);

}  // namespace sgames
