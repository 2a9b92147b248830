#ifndef SWITCHISO_BIT_VECTOR_HPP_
#define SWITCHISO_BIT_VECTOR_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace switchiso {

// Fixed-length vector over GF(2). Used for edge sets (signatures, cuts) and
// vertex sets (switching sets).
//
// Ordering: two vectors of the same length compare as the sorted lists of
// their set positions, lexicographically. The empty set is least, and
// {0} < {0,5} < {1}. This is the order used for every "lexicographically
// least" choice in the library (canonical keys, minimal signatures).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void assign(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  // Index of the lowest set bit, or size() if none.
  std::size_t first() const;
  // Positions of set bits in increasing order.
  std::vector<int> indices() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const BitVector& a,
                                          const BitVector& b);

  std::size_t hash() const;

  // Low word, for callers that know size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  static BitVector from_indices(std::size_t size, const std::vector<int>& idx);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

}  // namespace switchiso

#endif  // SWITCHISO_BIT_VECTOR_HPP_
