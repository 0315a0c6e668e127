#include "doctest.h"
#include "veritas/engine.hpp"
#include "veritas/evaluate.hpp"
#include "veritas/godel.hpp"
#include "veritas/text.hpp"

using namespace veritas;

namespace {

ObjectModel example_model() {
  return ObjectModel::from_json_text(R"({
    "domain": ["0","1","2","3","4"],
    "predicates": {
      "refl": {"dom": ["0","1","2","3","4"], "true_at": ["0","1","2","3","4"]},
      "never": {"dom": ["0","1","2","3","4"], "true_at": []},
      "ev": {"dom": ["0","1","2","3","4"], "true_at": ["0","2","4"]}
    },
    "object_depth": 2
  })");
}

ObjectModel one_pred_model() {
  return ObjectModel::from_json_text(R"({
    "domain": ["0","1","2"],
    "predicates": {"ev": {"dom": ["0","1","2"], "true_at": ["0","2"]}},
    "object_depth": 1
  })");
}

}  // namespace

TEST_CASE("quantified forms get their fixed verdicts") {
  ObjectModel m = example_model();
  Evaluator ev(m);
  CHECK(ev.evaluate(exists_t()) == Verdict::truth(1));
  CHECK(ev.evaluate(forall_t()) == Verdict::falsity(1));
  CHECK(ev.evaluate(exists_tt()) == Verdict::truth(1));
  CHECK(ev.evaluate(forall_tt()) == Verdict::falsity(1));
  // Per class: true everywhere, false everywhere, mixed.
  CHECK(ev.evaluate(forall_tp("refl")) == Verdict::truth(1));
  CHECK(ev.evaluate(exists_tp("refl")) == Verdict::truth(1));
  CHECK(ev.evaluate(forall_tp("never")) == Verdict::falsity(1));
  CHECK(ev.evaluate(exists_tp("never")) == Verdict::falsity(1));
  CHECK(ev.evaluate(forall_tp("ev")) == Verdict::falsity(1));
  CHECK(ev.evaluate(exists_tp("ev")) == Verdict::truth(1));
}

TEST_CASE("object sentences evaluate at stage zero through the model") {
  ObjectModel m = example_model();
  Evaluator ev(m);
  CHECK(ev.evaluate(obj_atom("ev", "2")) == Verdict::truth(0));
  CHECK(ev.evaluate(obj_atom("ev", "1")) == Verdict::falsity(0));
  CHECK(ev.evaluate(parse("(!(ex P.ev) | P.ev(0))", &m)) == Verdict::truth(0));
  CHECK_THROWS_AS(ev.evaluate(obj_forall("zz")), UnknownPredicate);
}

TEST_CASE("truth ascriptions climb one stage per quotation") {
  ObjectModel m = example_model();
  Evaluator ev(m);
  Sent a = obj_atom("ev", "2");
  Sent b = obj_atom("ev", "1");
  CHECK(ev.evaluate(t_quote(a)) == Verdict::truth(1));
  CHECK(ev.evaluate(t_quote(t_quote(a))) == Verdict::truth(2));
  CHECK(ev.evaluate(t_quote(b)) == Verdict::falsity(1));
  CHECK(ev.evaluate(t_quote(t_quote(b))) == Verdict::falsity(2));
  CHECK(ev.evaluate(neg(t_quote(b))) == Verdict::truth(1));
  CHECK(ev.evaluate(t_quote(forall_t())) == Verdict::falsity(2));
}

TEST_CASE("non-referring T-atoms and their compounds are outside L0") {
  ObjectModel m = example_model();
  Evaluator ev(m);
  CHECK(ev.evaluate(t_atom(BigNat(0))).is_outside());
  CHECK(ev.evaluate(t_atom(BigNat(17))).is_outside());  // decodes to an unknown predicate
  CHECK(ev.evaluate(parse("T[17]", &m)).is_outside());
  // Propagation through every connective.
  Sent out = t_atom(BigNat(0));
  CHECK(ev.evaluate(neg(out)).is_outside());
  CHECK(ev.evaluate(disj(exists_t(), out)).is_outside());
  CHECK(ev.evaluate(conj(out, exists_t())).is_outside());
  CHECK(ev.evaluate(implies(out, exists_t())).is_outside());
  CHECK(ev.evaluate(iff(out, out)).is_outside());
  CHECK(ev.evaluate(t_quote(out)).is_outside());
}

TEST_CASE("biconditionals with the sentence's own ascription hold everywhere") {
  ObjectModel m = one_pred_model();
  Fragment f = build_fragment(m, 2);
  Evaluator ev(m);
  for (const auto& a : f.members()) {
    CHECK(ev.evaluate(iff(a, t_quote(a))).is_true());
    CHECK(ev.evaluate(iff(a, neg(t_quote(a)))).is_false());
  }
}

TEST_CASE("connective stages follow the closure rounds") {
  ObjectModel m = example_model();
  Evaluator ev(m);
  Sent a = obj_atom("ev", "2");   // True(0)
  Sent b = obj_atom("ev", "1");   // False(0)
  CHECK(ev.evaluate(disj(a, b)) == Verdict::truth(0));  // object sentence, in W
  CHECK(ev.evaluate(disj(a, exists_t())) == Verdict::truth(1));
  CHECK(ev.evaluate(disj(b, t_quote(t_quote(a)))) == Verdict::truth(2));
  CHECK(ev.evaluate(conj(exists_t(), t_quote(t_quote(a)))) == Verdict::truth(2));
  CHECK(ev.evaluate(neg(conj(exists_t(), t_quote(t_quote(a))))) == Verdict::falsity(2));
  CHECK(ev.evaluate(implies(t_quote(t_quote(a)), exists_t())) == Verdict::truth(1));
  CHECK(ev.evaluate(implies(exists_t(), t_quote(b))) == Verdict::falsity(1));
  CHECK(ev.evaluate(iff(a, t_quote(a))) == Verdict::truth(1));
  CHECK(ev.evaluate(iff(b, t_quote(b))) == Verdict::truth(1));
}

TEST_CASE("evaluate matches saturation membership and stages exactly") {
  ObjectModel m = one_pred_model();
  Fragment f = build_fragment(m, 3);
  TruthSets ts = fixed_point(f);
  Evaluator ev(m);
  for (uint32_t i = 0; i < f.size(); ++i) {
    Verdict v = ev.evaluate(f.member(i));
    if (ts.final_set.test(i)) {
      CHECK(v.is_true());
      CHECK(v.stage == ts.stage_of[i]);
    } else if (ts.false_set.test(i)) {
      CHECK(v.is_false());
      const Sentence& s = *f.member(i);
      uint32_t witness = s.kind() == Kind::Not ? f.child_a(i) : f.neg_of(i);
      CHECK(v.stage == ts.stage_of[witness]);
    } else {
      CHECK(v.is_outside());
    }
  }
}

TEST_CASE("memoization is transparent") {
  ObjectModel m = example_model();
  Evaluator ev(m);
  Sent s = parse("(existsT <-> T[#'existsT'])", &m);
  Verdict first = ev.evaluate(s);
  size_t size = ev.memo_size();
  CHECK(ev.evaluate(s) == first);
  CHECK(ev.memo_size() == size);

  Evaluator tiny(m, 0);  // cap disabled storage entirely
  CHECK(tiny.evaluate(s) == first);
  CHECK(tiny.memo_size() == 0);
}

TEST_CASE("traces name replayable rules") {
  ObjectModel m = example_model();
  Evaluator ev(m);

  Trace t = explain(parse("T[#'P.ev(2)']", &m), ev);
  CHECK(t.verdict == Verdict::truth(1));
  CHECK(t.rule == Rule::D1U);
  REQUIRE(t.premises.size() == 1);
  CHECK(t.premises[0].rule == Rule::W);
  CHECK(t.premises[0].verdict == Verdict::truth(0));

  Trace dn = explain(parse("!!existsT", &m), ev);
  CHECK(dn.rule == Rule::G0);
  REQUIRE(dn.premises.size() == 1);
  CHECK(dn.premises[0].rule == Rule::ConstD1);

  Trace f = explain(forall_t(), ev);
  CHECK(f.verdict == Verdict::falsity(1));
  CHECK(f.rule == Rule::NegHolds);
  REQUIRE(f.premises.size() == 1);
  CHECK(f.premises[0].sentence->code() == neg(forall_t())->code());
  CHECK(f.premises[0].rule == Rule::ConstD1);

  Trace out = explain(t_atom(BigNat(0)), ev);
  CHECK(out.verdict.is_outside());
  CHECK(out.rule == Rule::Outside);

  std::string rendered = render_trace(t);
  CHECK(rendered.find("D1(U)") != std::string::npos);
  CHECK(rendered.find("W (true object sentence)") != std::string::npos);
}

TEST_CASE("trace stages and premises are mutually consistent") {
  // Replay: every node's verdict agrees with the evaluator, premises are
  // decided, rule conclusions sit one closure step above premises, and
  // claimed memberships reproduce in the saturation sets.
  ObjectModel m = example_model();
  Evaluator ev(m);
  Fragment frag = build_fragment(m, 3);
  TruthSets ts = fixed_point(frag);
  auto replay = [&](const Trace& t, auto&& self) -> void {
    CHECK(ev.evaluate(t.sentence) == t.verdict);
    uint32_t idx = frag.index_of(t.sentence->code());
    if (idx != kNoIndex && t.verdict.decided()) {
      if (t.verdict.is_true()) {
        CHECK(ts.final_set.test(idx));
        CHECK(ts.stage_of[idx] == t.verdict.stage);
      } else {
        CHECK(ts.false_set.test(idx));
      }
    }
    for (const auto& p : t.premises) {
      CHECK(p.verdict.decided());
      self(p, self);
    }
    switch (t.rule) {
      case Rule::D1U:
      case Rule::D2U:
        REQUIRE(t.premises.size() == 1);
        CHECK(t.premises[0].verdict.is_true());
        CHECK(t.verdict.stage == t.premises[0].verdict.stage + 1);
        break;
      case Rule::G0:
      case Rule::G1:
      case Rule::G2:
      case Rule::G3:
      case Rule::G4:
      case Rule::G5:
      case Rule::G6:
      case Rule::G7:
      case Rule::G8: {
        REQUIRE(!t.premises.empty());
        uint32_t max_stage = 0;
        for (const auto& p : t.premises) {
          CHECK(p.verdict.is_true());
          max_stage = std::max(max_stage, p.verdict.stage);
        }
        // One closure round above the premises, inside the same stage.
        CHECK(t.verdict.stage == std::max<uint32_t>(max_stage, 1));
        break;
      }
      case Rule::NegHolds:
        REQUIRE(t.premises.size() == 1);
        CHECK(t.premises[0].verdict.is_true());
        CHECK(t.premises[0].verdict.stage == t.verdict.stage);
        break;
      default:
        break;
    }
  };
  for (const char* text :
       {"T[#'P.ev(2)']", "(P.ev(1) <-> T[#'P.ev(1)'])", "!!existsT",
        "!(forallT | T[#'P.never(1)'])", "((P.ev(2) & existsTT) -> forallTP P.refl)",
        "T[#'T[#'all P.never']']", "!(P.ev(2) -> T[#'P.ev(1)'])"}) {
    Trace t = explain(parse(text, &m), ev);
    replay(t, replay);
  }
}
