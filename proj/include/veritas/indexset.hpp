#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace veritas {

/// Fixed-capacity bitset over fragment member indices.
class IndexSet {
public:
  IndexSet() = default;
  explicit IndexSet(size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  size_t capacity() const { return capacity_; }

  bool test(uint32_t i) const {
    assert(i < capacity_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(uint32_t i) {
    assert(i < capacity_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(uint32_t i) {
    assert(i < capacity_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  IndexSet& operator|=(const IndexSet& rhs) {
    assert(capacity_ == rhs.capacity_);
    for (size_t w = 0; w < words_.size(); ++w) words_[w] |= rhs.words_[w];
    return *this;
  }

  bool subset_of(const IndexSet& rhs) const {
    assert(capacity_ == rhs.capacity_);
    for (size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~rhs.words_[w]) return false;
    return true;
  }

  bool operator==(const IndexSet& rhs) const {
    return capacity_ == rhs.capacity_ && words_ == rhs.words_;
  }
  bool operator!=(const IndexSet& rhs) const { return !(*this == rhs); }

  size_t count() const {
    size_t n = 0;
    for (uint64_t w : words_) n += static_cast<size_t>(__builtin_popcountll(w));
    return n;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        uint32_t b = static_cast<uint32_t>(__builtin_ctzll(bits));
        f(static_cast<uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

private:
  size_t capacity_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace veritas
