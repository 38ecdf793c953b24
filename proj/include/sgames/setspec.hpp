#pragma once

#include <cstddef>
#include <string>

#include "sgames/bitstr.hpp"

namespace sgames {

// A set of naturals whose characteristic sequence is a finite prefix
// followed by a constant tail bit. Equality between two such sets is
// decidable, which is what the evaluators rely on.
class SetSpec {
 public:
  SetSpec() = default;
  SetSpec(BitString prefix, int tail);

  static SetSpec empty_set() { return SetSpec(BitString(), 0); }
  static SetSpec full_set() { return SetSpec(BitString(), 1); }

  int bit(std::size_t i) const {
    return i < prefix_.size() ? prefix_.bit(i) : tail_;
  }

  // The first `len` bits of the characteristic sequence.
  BitString characteristic_prefix(std::size_t len) const;

  SetSpec complemented() const;

  bool is_finite() const { return tail_ == 0; }
  bool is_cofinite() const { return tail_ == 1; }

  // Normalized form: trailing prefix bits equal to the tail are trimmed,
  // so ("1", 1) and ("", 1) denote the same set and compare equal.
  const BitString& prefix() const { return prefix_; }
  int tail() const { return tail_; }

  bool operator==(const SetSpec&) const = default;
  auto operator<=>(const SetSpec&) const = default;

  std::string describe() const;

 private:
  BitString prefix_;
  int tail_ = 0;
};

}  // namespace sgames
