#include "sgames/bitstr.hpp"

#include <stdexcept>

namespace sgames {

BitString::BitString(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
}

BitString BitString::from_mask(unsigned mask, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if (mask & (1u << i)) s[i] = '1';
  }
  BitString out;
  out.bits_ = std::move(s);
  return out;
}

BitString BitString::complement() const {
  BitString out;
  out.bits_.reserve(bits_.size());
  for (char c : bits_) out.bits_.push_back(c == '0' ? '1' : '0');
  return out;
}

BitString BitString::prefix(std::size_t k) const {
  if (k > bits_.size()) throw std::out_of_range("prefix longer than string");
  BitString out;
  out.bits_ = bits_.substr(0, k);
  return out;
}

BitString BitString::drop_back(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("drop_back past start of string");
  return prefix(bits_.size() - n);
}

BitString BitString::drop_front(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("drop_front past end of string");
  BitString out;
  out.bits_ = bits_.substr(n);
  return out;
}

BitString BitString::append(int bit) const {
  BitString out = *this;
  out.bits_.push_back(bit ? '1' : '0');
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

BitString operator+(const BitString& a, const BitString& b) {
  BitString out = a;
  out.bits_ += b.bits_;
  return out;
}

bool incompatible(const BitString& a, const BitString& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.bit(i) != b.bit(i)) return true;
  }
  return false;
}

bool is_p_string(const BitString& x) {
  if (x.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    if (x.bit(i) + x.bit(i + 1) != 1) return false;
  }
  return true;
}

bool is_d_string(const BitString& x) {
  if (x.size() < 2 || x.size() % 2 != 0) return false;
  if (x.bit(x.size() - 2) != x.bit(x.size() - 1)) return false;
  return is_p_string(x.drop_back(2));
}

bool extends_d_string(const BitString& x) {
  for (std::size_t k = 2; k <= x.size(); k += 2) {
    if (is_d_string(x.prefix(k))) return true;
  }
  return false;
}

bool properly_contains(const BitString& beta, const BitString& alpha) {
  if (alpha.size() > beta.size()) return false;
  bool strict = false;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha.bit(i) > beta.bit(i)) return false;
    if (alpha.bit(i) < beta.bit(i)) strict = true;
  }
  return strict;
}

std::vector<BitString> all_strings(std::size_t len) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << len);
  std::string s(len, '0');
  // Counting in lexicographic order: treat index 0 as the most significant
  // position so that "00.." < "01.." < "10.." matches string order.
  for (std::size_t v = 0; v < (std::size_t{1} << len); ++v) {
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = (v >> (len - 1 - i)) & 1 ? '1' : '0';
    }
    out.push_back(BitString(s));
  }
  return out;
}

std::vector<BitString> p_strings_extending(const BitString& prefix, std::size_t len) {
  std::vector<BitString> out;
  if (len % 2 != 0 || prefix.size() > len) return out;
  const std::size_t first_pair = (prefix.size() + 1) / 2;
  const std::size_t free_pairs = len / 2 - first_pair;
  for (std::size_t v = 0; v < (std::size_t{1} << free_pairs); ++v) {
    std::string s = prefix.str();
    if (s.size() % 2 != 0) {
      // Complete the straddled pair; its second bit is forced.
      s.push_back(s.back() == '0' ? '1' : '0');
    }
    for (std::size_t j = 0; j < free_pairs; ++j) {
      // "01" sorts before "10", so take bit 0 of v as the choice for the
      // leftmost free pair with 0 meaning "01".
      bool high = (v >> (free_pairs - 1 - j)) & 1;
      s += high ? "10" : "01";
    }
    BitString candidate(s);
    if (is_p_string(candidate)) out.push_back(candidate);
  }
  return out;
}

}  // namespace sgames
