#include "veritas/evaluate.hpp"

#include <algorithm>

#include "veritas/godel.hpp"
#include "veritas/text.hpp"

namespace veritas {

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::True: return "True (stage " + std::to_string(v.stage) + ")";
    case Verdict::Kind::False: return "False (stage " + std::to_string(v.stage) + ")";
    default: return "OutsideL0";
  }
}

Evaluator::Evaluator(const ObjectModel& model, size_t memo_cap)
    : model_(&model),
      truths_exist_(!model.predicate_names().empty()),
      memo_cap_(memo_cap) {}

Verdict Evaluator::evaluate(const Sent& s) {
  auto it = memo_.find(s->code());
  if (it != memo_.end()) return it->second;
  Verdict v = compute(s);
  if (memo_.size() < memo_cap_) memo_.emplace(s->code(), v);
  return v;
}

namespace {

uint32_t clamp1(uint32_t stage) { return std::max<uint32_t>(stage, 1); }

}  // namespace

Verdict Evaluator::compute(const Sent& s) {
  if (s->is_object())
    return model_->valuate(*s) ? Verdict::truth(0) : Verdict::falsity(0);

  switch (s->kind()) {
    case Kind::TAtom: {
      const Sent& ref = s->t_referent();
      if (!ref || !model_->mentions_known_symbols(*ref)) return Verdict::outside();
      Verdict r = evaluate(ref);
      if (r.is_outside()) return r;
      // Truth ascriptions enter one stage after their referent (D1/D2).
      return {r.kind, r.stage + 1};
    }
    case Kind::ForallT:
      return truths_exist_ ? Verdict::falsity(1) : Verdict::outside();
    case Kind::ExistsT:
      return truths_exist_ ? Verdict::truth(1) : Verdict::outside();
    case Kind::ForallTT:
      return truths_exist_ ? Verdict::falsity(1) : Verdict::outside();
    case Kind::ExistsTT:
      return truths_exist_ ? Verdict::truth(1) : Verdict::outside();
    case Kind::ForallTP: {
      if (!truths_exist_) return Verdict::outside();
      return model_->classify(s->pred()) == PredicateClass::P1 ? Verdict::truth(1)
                                                               : Verdict::falsity(1);
    }
    case Kind::ExistsTP: {
      if (!truths_exist_) return Verdict::outside();
      return model_->classify(s->pred()) == PredicateClass::P2 ? Verdict::falsity(1)
                                                               : Verdict::truth(1);
    }
    case Kind::Not: {
      return evaluate(s->lhs()).flip();
    }
    default:
      break;
  }

  Verdict a = evaluate(s->lhs());
  Verdict b = evaluate(s->rhs());
  if (a.is_outside() || b.is_outside()) return Verdict::outside();

  switch (s->kind()) {
    case Kind::Or: {
      if (a.is_true() && b.is_true())
        return Verdict::truth(clamp1(std::min(a.stage, b.stage)));
      if (a.is_true()) return Verdict::truth(clamp1(a.stage));
      if (b.is_true()) return Verdict::truth(clamp1(b.stage));
      return Verdict::falsity(clamp1(std::max(a.stage, b.stage)));
    }
    case Kind::And: {
      if (a.is_true() && b.is_true())
        return Verdict::truth(clamp1(std::max(a.stage, b.stage)));
      if (a.is_false() && b.is_false())
        return Verdict::falsity(clamp1(std::min(a.stage, b.stage)));
      return Verdict::falsity(clamp1(a.is_false() ? a.stage : b.stage));
    }
    case Kind::Implies: {
      bool holds = a.is_false() || b.is_true();
      if (!holds) return Verdict::falsity(clamp1(std::max(a.stage, b.stage)));
      uint32_t stage = UINT32_MAX;
      if (a.is_false()) stage = std::min(stage, a.stage);
      if (b.is_true()) stage = std::min(stage, b.stage);
      return Verdict::truth(clamp1(stage));
    }
    case Kind::Iff: {
      uint32_t stage = clamp1(std::max(a.stage, b.stage));
      return a.kind == b.kind ? Verdict::truth(stage) : Verdict::falsity(stage);
    }
    default:
      throw std::logic_error("unreachable sentence kind");
  }
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::W: return "W";
    case Rule::D1U: return "D1(U)";
    case Rule::D2U: return "D2(U)";
    case Rule::ConstD1: return "D1";
    case Rule::ConstD2: return "D2";
    case Rule::ConstD3: return "D3";
    case Rule::ConstD4: return "D4";
    case Rule::G0: return "G^0";
    case Rule::G1: return "G^1";
    case Rule::G2: return "G^2";
    case Rule::G3: return "G^3";
    case Rule::G4: return "G^4";
    case Rule::G5: return "G^5";
    case Rule::G6: return "G^6";
    case Rule::G7: return "G^7";
    case Rule::G8: return "G^8";
    case Rule::NegHolds: return "negation holds";
    default: return "outside L0";
  }
}

namespace {

Trace build_trace(const Sent& s, Evaluator& ev);

Trace outside_leaf(const Sent& s) { return {s, Verdict::outside(), Rule::Outside, {}}; }

// Trace of a true sentence: which rule admitted its code.
Trace true_trace(const Sent& s, Evaluator& ev) {
  Trace t{s, ev.evaluate(s), Rule::W, {}};
  if (s->is_object()) return t;  // admitted through W
  const ObjectModel& m = ev.model();
  switch (s->kind()) {
    case Kind::TAtom:
      t.rule = Rule::D1U;
      t.premises.push_back(build_trace(s->t_referent(), ev));
      return t;
    case Kind::ExistsT:
    case Kind::ExistsTT:
      t.rule = Rule::ConstD1;
      return t;
    case Kind::ForallTP:
      t.rule = Rule::ConstD2;
      return t;
    case Kind::ExistsTP:
      t.rule = m.classify(s->pred()) == PredicateClass::P1 ? Rule::ConstD2 : Rule::ConstD4;
      return t;
    case Kind::Or: {
      t.rule = Rule::G1;
      Verdict va = ev.evaluate(s->lhs());
      Verdict vb = ev.evaluate(s->rhs());
      bool pick_a = va.is_true() && (!vb.is_true() || va.stage <= vb.stage);
      t.premises.push_back(build_trace(pick_a ? s->lhs() : s->rhs(), ev));
      return t;
    }
    case Kind::And:
      t.rule = Rule::G2;
      t.premises.push_back(build_trace(s->lhs(), ev));
      t.premises.push_back(build_trace(s->rhs(), ev));
      return t;
    case Kind::Implies: {
      t.rule = Rule::G3;
      Verdict va = ev.evaluate(s->lhs());
      Verdict vb = ev.evaluate(s->rhs());
      bool pick_na = va.is_false() && (!vb.is_true() || va.stage <= vb.stage);
      t.premises.push_back(build_trace(pick_na ? neg(s->lhs()) : s->rhs(), ev));
      return t;
    }
    case Kind::Iff: {
      t.rule = Rule::G4;
      bool both_true = ev.evaluate(s->lhs()).is_true();
      Sent pa = both_true ? s->lhs() : neg(s->lhs());
      Sent pb = both_true ? s->rhs() : neg(s->rhs());
      t.premises.push_back(build_trace(pa, ev));
      t.premises.push_back(build_trace(pb, ev));
      return t;
    }
    case Kind::Not:
      break;
    default:
      return t;
  }

  // True negation: which rule admitted the negated form.
  const Sent& x = s->lhs();
  switch (x->kind()) {
    case Kind::TAtom:
      t.rule = Rule::D2U;
      t.premises.push_back(build_trace(neg(x->t_referent()), ev));
      return t;
    case Kind::ForallT:
    case Kind::ForallTT:
      t.rule = Rule::ConstD1;
      return t;
    case Kind::ForallTP:
      t.rule = m.classify(x->pred()) == PredicateClass::P2 ? Rule::ConstD3 : Rule::ConstD4;
      return t;
    case Kind::ExistsTP:
      t.rule = Rule::ConstD3;
      return t;
    case Kind::Not:
      t.rule = Rule::G0;
      t.premises.push_back(build_trace(x->lhs(), ev));
      return t;
    case Kind::Or:
      t.rule = Rule::G5;
      t.premises.push_back(build_trace(neg(x->lhs()), ev));
      t.premises.push_back(build_trace(neg(x->rhs()), ev));
      return t;
    case Kind::And: {
      t.rule = Rule::G6;
      Verdict va = ev.evaluate(x->lhs());
      Verdict vb = ev.evaluate(x->rhs());
      bool pick_a = va.is_false() && (!vb.is_false() || va.stage <= vb.stage);
      t.premises.push_back(build_trace(neg(pick_a ? x->lhs() : x->rhs()), ev));
      return t;
    }
    case Kind::Implies:
      t.rule = Rule::G7;
      t.premises.push_back(build_trace(x->lhs(), ev));
      t.premises.push_back(build_trace(neg(x->rhs()), ev));
      return t;
    case Kind::Iff: {
      t.rule = Rule::G8;
      bool a_true = ev.evaluate(x->lhs()).is_true();
      Sent pa = a_true ? x->lhs() : neg(x->lhs());
      Sent pb = a_true ? neg(x->rhs()) : x->rhs();
      t.premises.push_back(build_trace(pa, ev));
      t.premises.push_back(build_trace(pb, ev));
      return t;
    }
    default:
      return t;
  }
}

Trace build_trace(const Sent& s, Evaluator& ev) {
  Verdict v = ev.evaluate(s);
  if (v.is_outside()) {
    Trace t = outside_leaf(s);
    // Point at the undecided constituent.
    if (s->kind() == Kind::Not) {
      t.premises.push_back(build_trace(s->lhs(), ev));
    } else if (s->is_binary()) {
      if (ev.evaluate(s->lhs()).is_outside())
        t.premises.push_back(build_trace(s->lhs(), ev));
      else
        t.premises.push_back(build_trace(s->rhs(), ev));
    }
    return t;
  }
  if (v.is_true()) return true_trace(s, ev);
  Trace t{s, v, Rule::NegHolds, {}};
  t.premises.push_back(true_trace(neg(s), ev));
  return t;
}

void render_into(const Trace& t, std::string& out, int indent) {
  out.append(static_cast<size_t>(indent) * 2, ' ');
  out += print(t.sentence);
  out += ": " + to_string(t.verdict);
  if (t.verdict.is_outside()) {
    if (!t.premises.empty()) out += " via undecided constituent";
  } else if (t.sentence->is_object() && t.verdict.is_true()) {
    out += " via W (true object sentence)";
  } else {
    out += std::string(" via ") + rule_name(t.rule);
  }
  out += "\n";
  for (const Trace& p : t.premises) render_into(p, out, indent + 1);
}

}  // namespace

Trace explain(const Sent& s, Evaluator& ev) { return build_trace(s, ev); }

std::string render_trace(const Trace& t) {
  std::string out;
  render_into(t, out, 0);
  return out;
}

}  // namespace veritas
