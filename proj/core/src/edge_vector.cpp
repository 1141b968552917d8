#include "hamplane/edge_vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamplane {

EdgeVector EdgeVector::from_edges(std::size_t length, std::span<const EdgeId> edges) {
  EdgeVector v(length);
  for (EdgeId e : edges) {
    if (e >= length) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    v.flip(e);
  }
  return v;
}

std::size_t EdgeVector::lowest() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return length_;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("edge vector length mismatch: " + std::to_string(length_) +
                                " vs " + std::to_string(other.length_));
  }
  xor_unchecked(other);
  return *this;
}

std::size_t EdgeVector::shared_count(const EdgeVector& other) const {
  std::size_t c = 0;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t k = 0; k < n; ++k) c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
  return c;
}

std::vector<EdgeId> EdgeVector::support() const {
  std::vector<EdgeId> out;
  out.reserve(count());
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

EdgeVector cycle_sum(const EdgeVector& a, const EdgeVector& b) { return a ^ b; }

}  // namespace hamplane
