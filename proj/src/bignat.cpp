#include "veritas/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace veritas {

BigNat::BigNat(uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
  }
}

void BigNat::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty numeral");
  BigNat n;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in numeral");
    n.mul_add_small(10, static_cast<uint32_t>(c - '0'));
  }
  return n;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  BigNat n = *this;
  // Peel nine digits at a time.
  std::vector<uint32_t> chunks;
  while (!n.is_zero()) chunks.push_back(n.divmod_small(1000000000u));
  std::string out = std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

uint64_t BigNat::to_u64() const {
  uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

int BigNat::compare(const BigNat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (compare(rhs) < 0) throw std::underflow_error("BigNat subtraction underflow");
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t diff = static_cast<int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    if (diff < 0) {
      diff += int64_t{1} << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<uint32_t>(diff);
  }
  normalize();
  return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  BigNat out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + carry +
                     static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j];
      out.limbs_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    out.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
  }
  out.normalize();
  return out;
}

BigNat& BigNat::mul_add_small(uint32_t m, uint32_t a) {
  uint64_t carry = a;
  for (auto& limb : limbs_) {
    uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
    limb = static_cast<uint32_t>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<uint32_t>(carry));
    carry >>= 32;
  }
  normalize();
  return *this;
}

uint32_t BigNat::divmod_small(uint32_t d) {
  if (d == 0) throw std::invalid_argument("division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  normalize();
  return static_cast<uint32_t>(rem);
}

size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

size_t BigNat::hash() const {
  // FNV-1a over limbs.
  uint64_t h = 1469598103934665603ull;
  for (uint32_t limb : limbs_) {
    h ^= limb;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace veritas
