#ifndef HAMPLANE_EDGE_VECTOR_HPP
#define HAMPLANE_EDGE_VECTOR_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hamplane {

using EdgeId = std::uint32_t;
using VertexId = std::uint32_t;

// A subset of a graph's edges, i.e. an element of the edge space over GF(2).
// Bit i is edge i of the owning graph's canonical edge list.
class EdgeVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  EdgeVector() = default;
  explicit EdgeVector(std::size_t length)
      : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  static EdgeVector from_edges(std::size_t length, std::span<const EdgeId> edges);

  std::size_t size() const { return length_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t lowest() const;

  // In-place symmetric difference. Throws std::invalid_argument on a length
  // mismatch.
  EdgeVector& operator^=(const EdgeVector& other);

  // XOR without the length check; both operands must come from one graph.
  void xor_unchecked(const EdgeVector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  }

  std::size_t shared_count(const EdgeVector& other) const;

  std::vector<EdgeId> support() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        f(static_cast<EdgeId>(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
  friend std::strong_ordering operator<=>(const EdgeVector& a, const EdgeVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

inline EdgeVector operator^(EdgeVector a, const EdgeVector& b) {
  a ^= b;
  return a;
}

// (A u B) \ (A n B). Throws std::invalid_argument when lengths differ.
EdgeVector cycle_sum(const EdgeVector& a, const EdgeVector& b);

}  // namespace hamplane

#endif  // HAMPLANE_EDGE_VECTOR_HPP
