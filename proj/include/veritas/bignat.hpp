#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace veritas {

/// Arbitrary-precision natural number.
///
/// Sentence codes grow roughly quadratically per nesting level under the
/// pairing scheme in godel.hpp, so they overflow 64 bits around rank 3.
/// Only the operations the numbering needs are provided: addition,
/// subtraction (caller guarantees no underflow), multiplication, division
/// by a machine word, and comparison.
class BigNat {
public:
  BigNat() = default;
  BigNat(uint64_t v);

  /// Parses a decimal string. Throws std::invalid_argument on anything
  /// that is not a nonempty digit sequence.
  static BigNat from_decimal(std::string_view text);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;  // precondition: fits_u64()

  /// <0, 0, >0 as *this compares to rhs.
  int compare(const BigNat& rhs) const;

  BigNat& operator+=(const BigNat& rhs);
  /// Requires *this >= rhs.
  BigNat& operator-=(const BigNat& rhs);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(const BigNat& a, const BigNat& b);

  /// *this = *this * m + a.
  BigNat& mul_add_small(uint32_t m, uint32_t a);
  /// *this /= d; returns the remainder. d must be nonzero.
  uint32_t divmod_small(uint32_t d);

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigNat& a, const BigNat& b) { return !(a == b); }
  friend bool operator<(const BigNat& a, const BigNat& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigNat& a, const BigNat& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigNat& a, const BigNat& b) { return a.compare(b) >= 0; }

  size_t bit_length() const;
  size_t hash() const;

private:
  void normalize();
  // Little-endian 32-bit limbs, no trailing zero limb; empty means 0.
  std::vector<uint32_t> limbs_;
};

struct BigNatHash {
  size_t operator()(const BigNat& n) const { return n.hash(); }
};

}  // namespace veritas
