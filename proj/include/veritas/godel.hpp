#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "veritas/bignat.hpp"
#include "veritas/sentence.hpp"

namespace veritas {

/// Raised by decode() on a natural that is not in the image of the
/// numbering.
struct NotACode : std::runtime_error {
  explicit NotACode(const std::string& what) : std::runtime_error(what) {}
};

/// Cantor pairing, strictly increasing in both arguments on naturals:
/// pair(a, b) = (a+b)(a+b+1)/2 + b.
BigNat pair_nat(const BigNat& a, const BigNat& b);
/// Inverse of pair_nat.
std::pair<BigNat, BigNat> unpair_nat(const BigNat& z);

/// Injective identifier numbering: base-64 digits 1..63 over
/// [a-z A-Z 0-9 _]; the empty string maps to 0 and is rejected by the
/// sentence factories.
BigNat ident_nat(const std::string& ident);
/// Inverse; nullopt if some digit falls outside the alphabet.
std::optional<std::string> nat_ident(const BigNat& n);
bool is_ident(const std::string& s);

/// The code of a sentence. Codes are assigned bottom-up as
/// 1 + 15*payload + tag, so every code exceeds the codes of the node's
/// immediate subsentences and, for a T-atom, the value of its numeral
/// argument. Chains of reference therefore strictly descend and no
/// sentence can mention its own code.
inline const BigNat& encode(const Sentence& s) { return s.code(); }

/// Unique sentence with the given code. Throws NotACode when c is not a
/// code (0 is never a code).
Sent decode(const BigNat& c);
/// decode without the throw; nullptr when c is not a code.
Sent try_decode(const BigNat& c);

inline uint32_t rank(const Sentence& s) { return s.rank(); }

}  // namespace veritas
