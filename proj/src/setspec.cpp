#include "sgames/setspec.hpp"

#include <stdexcept>

namespace sgames {

SetSpec::SetSpec(BitString prefix, int tail) : prefix_(std::move(prefix)), tail_(tail) {
  if (tail_ != 0 && tail_ != 1) throw std::invalid_argument("tail bit must be 0 or 1");
  while (!prefix_.empty() && prefix_.bit(prefix_.size() - 1) == tail_) {
    prefix_ = prefix_.drop_back(1);
  }
}

BitString SetSpec::characteristic_prefix(std::size_t len) const {
  BitString out = prefix_.prefix(std::min(len, prefix_.size()));
  while (out.size() < len) out = out.append(tail_);
  return out;
}

SetSpec SetSpec::complemented() const {
  return SetSpec(prefix_.complement(), 1 - tail_);
}

std::string SetSpec::describe() const {
  return prefix_.str() + (tail_ ? "*111..." : "*000...");
}

}  // namespace sgames
