#include "veritas/godel.hpp"

#include <algorithm>

namespace veritas {

BigNat pair_nat(const BigNat& a, const BigNat& b) {
  BigNat s = a + b;
  BigNat t = s * (s + BigNat(1));
  t.divmod_small(2);  // s(s+1) is even
  return t + b;
}

namespace {

// Largest w with w(w+1)/2 <= z, by binary search.
BigNat triangular_root(const BigNat& z) {
  BigNat lo(0);
  BigNat hi(1);
  auto tri = [](const BigNat& w) {
    BigNat t = w * (w + BigNat(1));
    t.divmod_small(2);
    return t;
  };
  while (tri(hi) <= z) hi = hi * BigNat(2);
  // invariant: tri(lo) <= z < tri(hi)
  while (true) {
    BigNat mid = lo + hi;
    mid.divmod_small(2);
    if (mid == lo) return lo;
    if (tri(mid) <= z)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace

std::pair<BigNat, BigNat> unpair_nat(const BigNat& z) {
  BigNat w = triangular_root(z);
  BigNat tri = w * (w + BigNat(1));
  tri.divmod_small(2);
  BigNat b = z - tri;
  BigNat a = w - b;
  return {a, b};
}

namespace {

int ident_digit(char c) {
  if (c >= 'a' && c <= 'z') return 1 + (c - 'a');
  if (c >= 'A' && c <= 'Z') return 27 + (c - 'A');
  if (c >= '0' && c <= '9') return 53 + (c - '0');
  if (c == '_') return 63;
  return 0;
}

char digit_char(int d) {
  if (d >= 1 && d <= 26) return static_cast<char>('a' + d - 1);
  if (d >= 27 && d <= 52) return static_cast<char>('A' + d - 27);
  if (d >= 53 && d <= 62) return static_cast<char>('0' + d - 53);
  return '_';
}

}  // namespace

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return ident_digit(c) != 0; });
}

BigNat ident_nat(const std::string& ident) {
  BigNat n;
  for (char c : ident) n.mul_add_small(64, static_cast<uint32_t>(ident_digit(c)));
  return n;
}

std::optional<std::string> nat_ident(const BigNat& n) {
  std::string out;
  BigNat cur = n;
  while (!cur.is_zero()) {
    uint32_t d = cur.divmod_small(64);
    if (d == 0) return std::nullopt;
    out.push_back(digit_char(static_cast<int>(d)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Sent try_decode(const BigNat& c) {
  if (c.is_zero()) return nullptr;
  BigNat t = c - BigNat(1);
  uint32_t tag = t.divmod_small(kKindCount);
  const BigNat& payload = t;
  switch (static_cast<Kind>(tag)) {
    case Kind::ObjAtom: {
      auto [p, e] = unpair_nat(payload);
      auto pred = nat_ident(p);
      auto elem = nat_ident(e);
      if (!pred || !elem || pred->empty() || elem->empty()) return nullptr;
      return obj_atom(*pred, *elem);
    }
    case Kind::ObjForall:
    case Kind::ObjExists:
    case Kind::ForallTP:
    case Kind::ExistsTP: {
      auto pred = nat_ident(payload);
      if (!pred || pred->empty()) return nullptr;
      switch (static_cast<Kind>(tag)) {
        case Kind::ObjForall: return obj_forall(*pred);
        case Kind::ObjExists: return obj_exists(*pred);
        case Kind::ForallTP: return forall_tp(*pred);
        default: return exists_tp(*pred);
      }
    }
    case Kind::TAtom:
      return t_atom(payload);
    case Kind::ForallT:
    case Kind::ExistsT:
    case Kind::ForallTT:
    case Kind::ExistsTT: {
      if (!payload.is_zero()) return nullptr;
      switch (static_cast<Kind>(tag)) {
        case Kind::ForallT: return forall_t();
        case Kind::ExistsT: return exists_t();
        case Kind::ForallTT: return forall_tt();
        default: return exists_tt();
      }
    }
    case Kind::Not: {
      Sent inner = try_decode(payload);
      return inner ? neg(inner) : nullptr;
    }
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff: {
      auto [a, b] = unpair_nat(payload);
      Sent lhs = try_decode(a);
      if (!lhs) return nullptr;
      Sent rhs = try_decode(b);
      if (!rhs) return nullptr;
      switch (static_cast<Kind>(tag)) {
        case Kind::Or: return disj(lhs, rhs);
        case Kind::And: return conj(lhs, rhs);
        case Kind::Implies: return implies(lhs, rhs);
        default: return iff(lhs, rhs);
      }
    }
  }
  return nullptr;
}

Sent decode(const BigNat& c) {
  Sent s = try_decode(c);
  if (!s) throw NotACode("not a sentence code: " + c.to_decimal());
  return s;
}

}  // namespace veritas
