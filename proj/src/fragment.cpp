#include "veritas/fragment.hpp"

#include <algorithm>
#include <stdexcept>

#include "veritas/godel.hpp"

namespace veritas {

uint32_t Fragment::index_of(const BigNat& code) const {
  auto it = index_.find(code);
  return it == index_.end() ? kNoIndex : it->second;
}

Fragment build_fragment(const ObjectModel& model, unsigned depth, size_t cap) {
  if (depth < 1) throw std::invalid_argument("fragment depth must be >= 1");

  std::unordered_map<BigNat, uint32_t, BigNatHash> seen;
  std::vector<Sent> pool;
  auto add = [&](const Sent& s) -> bool {
    auto [it, fresh] = seen.emplace(s->code(), static_cast<uint32_t>(pool.size()));
    if (fresh) {
      pool.push_back(s);
      if (pool.size() > cap) throw FragmentTooLarge(pool.size(), cap);
    }
    return fresh;
  };

  for (const auto& s : model.object_sentences()) {
    if (s->rank() <= depth) add(s);
  }
  add(forall_t());
  add(exists_t());
  add(forall_tt());
  add(exists_tt());
  for (const auto& pred : model.predicate_names()) {
    add(forall_tp(pred));
    add(exists_tp(pred));
  }

  // Binary layer over rank-0 members.
  std::vector<Sent> rank0;
  for (const auto& s : pool)
    if (s->rank() == 0) rank0.push_back(s);
  for (const auto& a : rank0)
    for (const auto& b : rank0) {
      add(disj(a, b));
      add(conj(a, b));
      add(implies(a, b));
      add(iff(a, b));
    }

  // Negation and T-atom ladders up to the rank bound.
  for (unsigned r = 1; r <= depth; ++r) {
    std::vector<Sent> below;
    for (const auto& s : pool)
      if (s->rank() == r - 1) below.push_back(s);
    for (const auto& s : below) {
      add(neg(s));
      add(t_quote(s));
    }
  }

  // Companion layer: the negation of every member is a member.
  {
    std::vector<Sent> snapshot = pool;
    for (const auto& s : snapshot) {
      if (s->kind() != Kind::Not) add(neg(s));
    }
  }

  Fragment f;
  f.built_depth_ = depth;
  f.members_ = std::move(pool);
  std::sort(f.members_.begin(), f.members_.end(),
            [](const Sent& a, const Sent& b) { return a->code() < b->code(); });
  const size_t n = f.members_.size();
  f.codes_.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    f.codes_.push_back(f.members_[i]->code());
    f.index_.emplace(f.codes_.back(), i);
  }

  f.child_a_.assign(n, kNoIndex);
  f.child_b_.assign(n, kNoIndex);
  f.neg_of_.assign(n, kNoIndex);
  f.t_ref_.assign(n, kNoIndex);
  f.rank_.assign(n, 0);
  f.is_object_.assign(n, 0);
  f.in_w_.assign(n, 0);

  for (uint32_t i = 0; i < n; ++i) {
    const Sentence& s = *f.members_[i];
    f.rank_[i] = s.rank();
    f.is_object_[i] = s.is_object();
    if (s.is_object()) f.in_w_[i] = model.valuate(s);
    if (s.kind() == Kind::Not || s.is_binary()) {
      f.child_a_[i] = f.index_of(s.lhs()->code());
    }
    if (s.is_binary()) f.child_b_[i] = f.index_of(s.rhs()->code());
    if (s.kind() == Kind::TAtom) f.t_ref_[i] = f.index_of(s.arg());
    // The child's syntactic negation is this node. A negation member's
    // own neg_of is filled when its double negation is also a member.
    if (s.kind() == Kind::Not) f.neg_of_[f.child_a_[i]] = i;
  }

  f.forall_t_ = f.index_of(forall_t()->code());
  f.exists_t_ = f.index_of(exists_t()->code());
  f.forall_tt_ = f.index_of(forall_tt()->code());
  f.exists_tt_ = f.index_of(exists_tt()->code());
  f.not_forall_t_ = f.index_of(neg(forall_t())->code());
  f.not_forall_tt_ = f.index_of(neg(forall_tt())->code());
  for (const auto& pred : model.predicate_names()) {
    Fragment::PredForms pf;
    pf.pred = pred;
    pf.cls = model.classify(pred);
    pf.forall_tp = f.index_of(forall_tp(pred)->code());
    pf.exists_tp = f.index_of(exists_tp(pred)->code());
    pf.not_forall_tp = f.index_of(neg(forall_tp(pred))->code());
    pf.not_exists_tp = f.index_of(neg(exists_tp(pred))->code());
    f.pred_forms_.push_back(std::move(pf));
  }
  return f;
}

}  // namespace veritas
