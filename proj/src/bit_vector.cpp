#include "switchiso/bit_vector.hpp"

#include <bit>

namespace switchiso {

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (const std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::none() const {
  for (const std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
  }
  return size_;
}

std::vector<int> BitVector::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  const std::size_t nw = a.words_.size();
  for (std::size_t i = 0; i < nw; ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool a_has = (a.words_[i] >> bit) & 1u;
    const BitVector& without = a_has ? b : a;
    // The set lacking the first differing position is smaller only if it has
    // nothing beyond it (it is then a prefix of the other list).
    bool without_has_more = bit < 63 && (without.words_[i] >> (bit + 1)) != 0;
    for (std::size_t j = i + 1; j < nw && !without_has_more; ++j) {
      without_has_more = without.words_[j] != 0;
    }
    const bool a_less = a_has == without_has_more;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t BitVector::hash() const {
  std::size_t h = size_;
  for (const std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

BitVector BitVector::from_indices(std::size_t size,
                                  const std::vector<int>& idx) {
  BitVector v(size);
  for (const int i : idx) v.set(static_cast<std::size_t>(i));
  return v;
}

}  // namespace switchiso
