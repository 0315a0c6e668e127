#include "veritas/sentence.hpp"

#include <stdexcept>

#include "veritas/godel.hpp"

namespace veritas {

struct SentenceFactory {
  static Sent make(Kind kind, Sent lhs, Sent rhs, Sent ref, std::string pred,
                   std::string elem, BigNat arg, BigNat payload,
                   uint32_t rank, bool mentions_t) {
    auto s = std::shared_ptr<Sentence>(new Sentence());
    s->kind_ = kind;
    s->lhs_ = std::move(lhs);
    s->rhs_ = std::move(rhs);
    s->ref_ = std::move(ref);
    s->pred_ = std::move(pred);
    s->elem_ = std::move(elem);
    s->arg_ = std::move(arg);
    payload.mul_add_small(kKindCount, static_cast<uint32_t>(kind) + 1);
    s->code_ = std::move(payload);
    s->rank_ = rank;
    s->mentions_t_ = mentions_t;
    return s;
  }
};

namespace {

void require_ident(const std::string& s) {
  if (!is_ident(s))
    throw std::invalid_argument("bad identifier: '" + s + "'");
}

Sent make_binary(Kind kind, const Sent& a, const Sent& b) {
  return SentenceFactory::make(kind, a, b, nullptr, {}, {}, {},
                               pair_nat(a->code(), b->code()),
                               1 + std::max(a->rank(), b->rank()),
                               a->mentions_t() || b->mentions_t());
}

}  // namespace

Sent obj_atom(const std::string& pred, const std::string& elem) {
  require_ident(pred);
  require_ident(elem);
  return SentenceFactory::make(Kind::ObjAtom, nullptr, nullptr, nullptr, pred, elem, {},
                               pair_nat(ident_nat(pred), ident_nat(elem)), 0, false);
}

Sent obj_forall(const std::string& pred) {
  require_ident(pred);
  return SentenceFactory::make(Kind::ObjForall, nullptr, nullptr, nullptr, pred, {}, {},
                               ident_nat(pred), 0, false);
}

Sent obj_exists(const std::string& pred) {
  require_ident(pred);
  return SentenceFactory::make(Kind::ObjExists, nullptr, nullptr, nullptr, pred, {}, {},
                               ident_nat(pred), 0, false);
}

Sent t_atom(const BigNat& numeral) {
  Sent ref = try_decode(numeral);
  uint32_t rank = ref ? ref->rank() + 1 : 1;
  return SentenceFactory::make(Kind::TAtom, nullptr, nullptr, std::move(ref), {}, {},
                               numeral, numeral, rank, true);
}

Sent t_quote(const Sent& referent) {
  return SentenceFactory::make(Kind::TAtom, nullptr, nullptr, referent, {}, {},
                               referent->code(), referent->code(),
                               referent->rank() + 1, true);
}

Sent forall_t() {
  return SentenceFactory::make(Kind::ForallT, nullptr, nullptr, nullptr, {}, {}, {}, {}, 1, true);
}
Sent exists_t() {
  return SentenceFactory::make(Kind::ExistsT, nullptr, nullptr, nullptr, {}, {}, {}, {}, 1, true);
}
Sent forall_tt() {
  return SentenceFactory::make(Kind::ForallTT, nullptr, nullptr, nullptr, {}, {}, {}, {}, 1, true);
}
Sent exists_tt() {
  return SentenceFactory::make(Kind::ExistsTT, nullptr, nullptr, nullptr, {}, {}, {}, {}, 1, true);
}

Sent forall_tp(const std::string& pred) {
  require_ident(pred);
  return SentenceFactory::make(Kind::ForallTP, nullptr, nullptr, nullptr, pred, {}, {},
                               ident_nat(pred), 1, true);
}

Sent exists_tp(const std::string& pred) {
  require_ident(pred);
  return SentenceFactory::make(Kind::ExistsTP, nullptr, nullptr, nullptr, pred, {}, {},
                               ident_nat(pred), 1, true);
}

Sent neg(const Sent& s) {
  return SentenceFactory::make(Kind::Not, s, nullptr, nullptr, {}, {}, {}, s->code(),
                               s->rank() + 1, s->mentions_t());
}

Sent disj(const Sent& a, const Sent& b) { return make_binary(Kind::Or, a, b); }
Sent conj(const Sent& a, const Sent& b) { return make_binary(Kind::And, a, b); }
Sent implies(const Sent& a, const Sent& b) { return make_binary(Kind::Implies, a, b); }
Sent iff(const Sent& a, const Sent& b) { return make_binary(Kind::Iff, a, b); }

}  // namespace veritas
