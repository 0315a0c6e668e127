#include "veritas/engine.hpp"

#include <unordered_map>

#include "veritas/godel.hpp"

namespace veritas {

size_t TruthSets::outside_l0(const Fragment& f) const {
  IndexSet decided = final_set;
  decided |= false_set;
  return f.size() - decided.count();
}

Saturator::Saturator(const Fragment& f) : frag_(&f), w_(f.size()) {
  const size_t n = f.size();
  dependents_.resize(n);

  auto add_rule = [&](Rule r) {
    uint32_t id = static_cast<uint32_t>(rules_.size());
    rules_.push_back(r);
    for (uint32_t p : {r.a, r.b, r.na, r.nb}) {
      if (p != kNoIndex) dependents_[p].push_back(id);
    }
  };

  for (uint32_t i = 0; i < n; ++i) {
    const Sentence& s = *f.member(i);
    if (f.in_w(i)) w_.set(i);
    switch (s.kind()) {
      case Kind::TAtom:
        if (f.t_ref(i) != kNoIndex) d1_pairs_.push_back({i, f.t_ref(i)});
        break;
      case Kind::Or: {
        add_rule({RuleKind::G1, i, f.child_a(i), f.child_b(i)});
        break;
      }
      case Kind::And:
        add_rule({RuleKind::G2, i, f.child_a(i), f.child_b(i)});
        break;
      case Kind::Implies: {
        uint32_t a = f.child_a(i);
        add_rule({RuleKind::G3, i, kNoIndex, f.child_b(i), f.neg_of(a)});
        break;
      }
      case Kind::Iff: {
        uint32_t a = f.child_a(i), b = f.child_b(i);
        add_rule({RuleKind::G4, i, a, b, f.neg_of(a), f.neg_of(b)});
        break;
      }
      case Kind::Not: {
        uint32_t inner = f.child_a(i);
        const Sentence& x = *f.member(inner);
        switch (x.kind()) {
          case Kind::Not:
            add_rule({RuleKind::G0, i, f.child_a(inner)});
            break;
          case Kind::Or: {
            uint32_t a = f.child_a(inner), b = f.child_b(inner);
            add_rule({RuleKind::G5, i, kNoIndex, kNoIndex, f.neg_of(a), f.neg_of(b)});
            break;
          }
          case Kind::And: {
            uint32_t a = f.child_a(inner), b = f.child_b(inner);
            add_rule({RuleKind::G6, i, kNoIndex, kNoIndex, f.neg_of(a), f.neg_of(b)});
            break;
          }
          case Kind::Implies: {
            uint32_t a = f.child_a(inner), b = f.child_b(inner);
            add_rule({RuleKind::G7, i, a, kNoIndex, kNoIndex, f.neg_of(b)});
            break;
          }
          case Kind::Iff: {
            uint32_t a = f.child_a(inner), b = f.child_b(inner);
            add_rule({RuleKind::G8, i, a, b, f.neg_of(a), f.neg_of(b)});
            break;
          }
          case Kind::TAtom: {
            // not-T at the numeral of A fires from not-A in the seed.
            uint32_t ref = f.t_ref(inner);
            if (ref != kNoIndex && f.neg_of(ref) != kNoIndex)
              d2_pairs_.push_back({i, f.neg_of(ref)});
            break;
          }
          default:
            break;
        }
        break;
      }
      default:
        break;
    }
  }

  for (uint32_t i : {f.not_forall_t_idx(), f.exists_t_idx(), f.not_forall_tt_idx(),
                     f.exists_tt_idx()}) {
    if (i != kNoIndex) const_d1_.push_back(i);
  }
}

bool Saturator::satisfied(const Rule& r, const IndexSet& s) const {
  auto in = [&](uint32_t i) { return i != kNoIndex && s.test(i); };
  switch (r.kind) {
    case RuleKind::G0: return in(r.a);
    case RuleKind::G1: return in(r.a) || in(r.b);
    case RuleKind::G2: return in(r.a) && in(r.b);
    case RuleKind::G3: return in(r.na) || in(r.b);
    case RuleKind::G4: return (in(r.a) && in(r.b)) || (in(r.na) && in(r.nb));
    case RuleKind::G5: return in(r.na) && in(r.nb);
    case RuleKind::G6: return in(r.na) || in(r.nb);
    case RuleKind::G7: return in(r.a) && in(r.nb);
    case RuleKind::G8: return (in(r.a) && in(r.nb)) || (in(r.na) && in(r.b));
  }
  return false;
}

IndexSet Saturator::w() const { return w_; }

DSets Saturator::d_sets(const IndexSet& u) const {
  const Fragment& f = *frag_;
  DSets d{IndexSet(f.size()), IndexSet(f.size()), IndexSet(f.size()),
          IndexSet(f.size()), IndexSet(f.size()), IndexSet(f.size())};
  for (const auto& [concl, premise] : d1_pairs_)
    if (u.test(premise)) d.d1_u.set(concl);
  for (const auto& [concl, premise] : d2_pairs_)
    if (u.test(premise)) d.d2_u.set(concl);
  for (uint32_t i : const_d1_) d.d1.set(i);
  for (const auto& pf : f.pred_forms()) {
    switch (pf.cls) {
      case PredicateClass::P1:
        if (pf.forall_tp != kNoIndex) d.d2.set(pf.forall_tp);
        if (pf.exists_tp != kNoIndex) d.d2.set(pf.exists_tp);
        break;
      case PredicateClass::P2:
        if (pf.not_forall_tp != kNoIndex) d.d3.set(pf.not_forall_tp);
        if (pf.not_exists_tp != kNoIndex) d.d3.set(pf.not_exists_tp);
        break;
      case PredicateClass::P3:
        if (pf.not_forall_tp != kNoIndex) d.d4.set(pf.not_forall_tp);
        if (pf.exists_tp != kNoIndex) d.d4.set(pf.exists_tp);
        break;
    }
  }
  return d;
}

IndexSet Saturator::g0(const IndexSet& u) const {
  IndexSet out = w_;
  if (u.empty()) return out;
  DSets d = d_sets(u);
  out |= d.d1_u;
  out |= d.d2_u;
  out |= d.d1;
  out |= d.d2;
  out |= d.d3;
  out |= d.d4;
  return out;
}

IndexSet Saturator::step(const IndexSet& gn) const {
  IndexSet out = gn;
  for (const Rule& r : rules_) {
    if (!out.test(r.concl) && satisfied(r, gn)) out.set(r.concl);
  }
  return out;
}

GResult Saturator::g_of(const IndexSet& u) const {
  GResult res{g0(u), std::vector<uint32_t>(frag_->size(), kNoIndex)};
  IndexSet& cur = res.set;
  std::vector<uint32_t> frontier;
  cur.for_each([&](uint32_t i) {
    res.inner_stage[i] = 0;
    frontier.push_back(i);
  });
  uint32_t round = 0;
  std::vector<uint32_t> next;
  while (!frontier.empty()) {
    ++round;
    next.clear();
    for (uint32_t i : frontier) {
      for (uint32_t rid : dependents_[i]) {
        const Rule& r = rules_[rid];
        if (!cur.test(r.concl) && satisfied(r, cur)) {
          cur.set(r.concl);
          res.inner_stage[r.concl] = round;
          next.push_back(r.concl);
        }
      }
    }
    frontier.swap(next);
  }
  return res;
}

IndexSet Saturator::f_of(const IndexSet& g) const {
  const Fragment& f = *frag_;
  IndexSet out(f.size());
  for (uint32_t i = 0; i < f.size(); ++i) {
    const Sentence& s = *f.member(i);
    if (s.kind() == Kind::Not) {
      // not-X is false exactly when X holds.
      if (g.test(f.child_a(i))) out.set(i);
    } else if (f.neg_of(i) != kNoIndex && g.test(f.neg_of(i))) {
      out.set(i);
    }
  }
  return out;
}

bool Saturator::consistent(const IndexSet& u) const {
  bool ok = true;
  u.for_each([&](uint32_t i) {
    if (!ok) return;
    if (frag_->member(i)->kind() == Kind::Not && u.test(frag_->child_a(i))) ok = false;
  });
  return ok;
}

TruthSets Saturator::fixed_point() const {
  TruthSets ts;
  ts.stage_of.assign(frag_->size(), kNoIndex);
  ts.stages.push_back(w_);
  auto record = [&](const IndexSet& s, size_t k) {
    s.for_each([&](uint32_t i) {
      if (ts.stage_of[i] == kNoIndex) ts.stage_of[i] = static_cast<uint32_t>(k);
    });
  };
  record(w_, 0);
  while (true) {
    const IndexSet& cur = ts.stages.back();
    if (!consistent(cur))
      throw InconsistencyDetected("stage " + std::to_string(ts.stages.size() - 1) +
                                  " contains a sentence and its negation");
    IndexSet next = g_of(cur).set;
    record(next, ts.stages.size());
    bool done = next == cur;
    ts.stages.push_back(std::move(next));
    if (done) break;
  }
  ts.fixed_point_stage = ts.stages.size() - 2;
  ts.final_set = ts.stages.back();
  ts.false_set = f_of(ts.final_set);
  if (!consistent(ts.false_set))
    throw InconsistencyDetected("false set contains a sentence and its negation");
  for (uint32_t i = 0; i < frag_->size(); ++i) {
    if (ts.final_set.test(i) && ts.false_set.test(i))
      throw InconsistencyDetected("truth and false sets overlap at code " +
                                  frag_->codes()[i].to_decimal());
  }
  for (uint32_t i = 0; i < frag_->size(); ++i) {
    if (ts.final_set.test(i) || ts.false_set.test(i))
      ts.x_t.push_back(frag_->codes()[i]);
  }
  return ts;
}

DSets d_sets(const IndexSet& u, const Fragment& f) { return Saturator(f).d_sets(u); }
IndexSet g0(const IndexSet& u, const Fragment& f) { return Saturator(f).g0(u); }
IndexSet step(const IndexSet& gn, const Fragment& f) { return Saturator(f).step(gn); }
GResult g_of(const IndexSet& u, const Fragment& f) { return Saturator(f).g_of(u); }
IndexSet f_of(const IndexSet& g, const Fragment& f) { return Saturator(f).f_of(g); }
TruthSets fixed_point(const Fragment& f) { return Saturator(f).fixed_point(); }

bool is_consistent(const std::vector<BigNat>& codes) {
  std::unordered_map<BigNat, bool, BigNatHash> present;
  for (const auto& c : codes) present.emplace(c, true);
  for (const auto& c : codes) {
    Sent s = decode(c);
    if (s->kind() == Kind::Not && present.count(s->lhs()->code())) return false;
  }
  return true;
}

bool is_consistent(const IndexSet& u, const Fragment& f) {
  return Saturator(f).consistent(u);
}

IndexSet to_index_set(const std::vector<BigNat>& codes, const Fragment& f) {
  IndexSet out(f.size());
  for (const auto& c : codes) {
    uint32_t i = f.index_of(c);
    if (i != kNoIndex) out.set(i);
  }
  return out;
}

std::vector<BigNat> to_codes(const IndexSet& s, const Fragment& f) {
  std::vector<BigNat> out;
  s.for_each([&](uint32_t i) { out.push_back(f.codes()[i]); });
  return out;
}

}  // namespace veritas
