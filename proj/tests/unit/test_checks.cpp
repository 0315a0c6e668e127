#include "doctest.h"
#include "json.hpp"
#include "veritas/checks.hpp"
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
    "object_depth": 1
  })");
}

struct Suite {
  ObjectModel model = example_model();
  Fragment fragment;
  TruthSets truth;
  Suite() : fragment(build_fragment(model, 2)), truth(fixed_point(fragment)) {}
};

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("missing check " + id);
}

}  // namespace

TEST_CASE("the full suite passes on the example model") {
  Suite s;
  CheckOptions opts;
  opts.seed = 7;
  opts.sample_pairs = 5000;
  Checker checker(s.model, s.fragment, s.truth, opts);
  auto results = checker.run_all();
  REQUIRE(results.size() == 26);
  for (const auto& r : results) {
    INFO(r.id);
    CHECK(r.pass());
    CHECK(r.universe > 0);
  }
  // Suite completeness: one check per lettered rule.
  for (const char* id : {"t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "tt6",
                         "tt7", "tp6", "tp7", "a1", "a2", "a3", "a4", "a5", "a6",
                         "a7", "a8", "a9", "tbicond", "conservativity", "totality",
                         "untyped", "consistency"}) {
    CHECK(find(results, id).id == id);
  }
}

TEST_CASE("a flipped implication verdict is caught with minimal counterexamples") {
  Suite s;
  CheckOptions opts;
  opts.sample_pairs = 2000;
  Checker checker(s.model, s.fragment, s.truth, opts);
  auto evaluator = std::make_shared<Evaluator>(s.model);
  checker.set_eval_fn([evaluator](const Sent& sent) {
    Verdict v = evaluator->evaluate(sent);
    return sent->kind() == Kind::Implies ? v.flip() : v;
  });

  auto results = checker.check_connective_rules();
  const CheckResult& t4 = find(results, "t4");
  CHECK(!t4.pass());
  REQUIRE(!t4.counterexamples.empty());

  // Each counterexample re-fails in isolation.
  for (const auto& cex : t4.counterexamples) {
    CHECK(!checker.recheck_instance("t4", cex));
  }
  // Rank minimality: no failing implication has smaller rank.
  uint32_t reported = t4.counterexamples.front()->rank();
  for (const auto& cex : t4.counterexamples) CHECK(cex->rank() == reported);
  uint32_t smallest_failing = UINT32_MAX;
  for (const auto& a : s.fragment.members()) {
    if (a->rank() > 1) continue;
    for (const auto& b : s.fragment.members()) {
      if (b->rank() > 1) continue;
      Sent c = implies(a, b);
      if (!checker.recheck_instance("t4", c))
        smallest_failing = std::min(smallest_failing, c->rank());
    }
  }
  CHECK(reported <= smallest_failing);

  // The untouched rules still pass.
  CHECK(find(results, "t2").pass());
  CHECK(find(results, "t3").pass());
}

TEST_CASE("norms map to check outcomes") {
  Suite s;
  CheckOptions opts;
  opts.seed = 3;
  opts.sample_pairs = 2000;
  Checker checker(s.model, s.fragment, s.truth, opts);
  NormsReport rep = norms_report(checker, 2);

  CHECK(rep.norms.at("n1") == NormStatus::Verified);
  CHECK(rep.norms.at("n2") == NormStatus::Asserted);
  CHECK(rep.norms.at("n3") == NormStatus::Verified);
  CHECK(rep.norms.at("n4") == NormStatus::Verified);
  CHECK(rep.norms.at("n5") == NormStatus::Verified);
  CHECK(rep.norms.at("n6") == NormStatus::Asserted);
  CHECK(rep.norms.at("n7") == NormStatus::Verified);
  CHECK(rep.norms.at("n8") == NormStatus::Verified);
  CHECK(rep.norms.at("n9") == NormStatus::Verified);
  CHECK(rep.norms.at("n10") == NormStatus::Asserted);
  CHECK(rep.all_mechanized_verified());
  CHECK(rep.notes.count("n2") == 1);

  // A failing check degrades its norm.
  Checker broken(s.model, s.fragment, s.truth, opts);
  auto evaluator = std::make_shared<Evaluator>(s.model);
  broken.set_eval_fn([evaluator](const Sent& sent) {
    Verdict v = evaluator->evaluate(sent);
    return sent->kind() == Kind::Iff ? v.flip() : v;
  });
  NormsReport bad = norms_report(broken, 2);
  CHECK(bad.norms.at("n4") == NormStatus::Failed);  // biconditionals evaluate via Iff
  CHECK(!bad.all_mechanized_verified());
}

TEST_CASE("reports are deterministic and match the schema") {
  Suite s;
  CheckOptions opts;
  opts.seed = 11;
  opts.sample_pairs = 1000;
  std::string first, second;
  {
    Checker checker(s.model, s.fragment, s.truth, opts);
    NormsReport rep = norms_report(checker, 2);
    first = norms_report_json(rep);
  }
  {
    Checker checker(s.model, s.fragment, s.truth, opts);
    NormsReport rep = norms_report(checker, 2);
    second = norms_report_json(rep);
  }
  CHECK(first == second);

  auto j = nlohmann::json::parse(first);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("norms").is_object());
  CHECK(j.at("norms").size() == 10);
  CHECK(j.at("checks").is_array());
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("id"));
    CHECK(c.contains("universe"));
    CHECK(c.contains("pass"));
    CHECK(c.at("counterexamples").is_array());
  }

  std::string sat = saturation_report_json(s.fragment, s.truth);
  auto js = nlohmann::json::parse(sat);
  for (const char* key : {"fragment_size", "stages", "fixed_point_stage", "g_size",
                          "f_size", "outside_l0", "consistent"}) {
    CHECK(js.contains(key));
  }
  CHECK(js.at("consistent") == true);
  CHECK(js.at("outside_l0") == 0);
}

TEST_CASE("predicates over a proper subset of the domain check cleanly") {
  ObjectModel m = ObjectModel::from_json_text(R"({
    "domain": ["0","1","2","3","4"],
    "predicates": {
      "half": {"dom": ["0","1","2"], "true_at": ["0","2"]},
      "top":  {"dom": ["3","4"],     "true_at": ["3","4"]}
    },
    "object_depth": 1
  })");
  CHECK(m.classify("half") == PredicateClass::P3);
  CHECK(m.classify("top") == PredicateClass::P1);
  CHECK(m.valuate(*obj_forall("top")));

  Fragment f = build_fragment(m, 2);
  TruthSets ts = fixed_point(f);
  Checker checker(m, f, ts, {});
  auto quant = checker.check_quantifier_rules();
  for (const auto& r : quant) {
    INFO(r.id);
    CHECK(r.pass());
  }
  CHECK(find(quant, "tp6").universe == 5);  // |X_half| + |X_top|
  auto comp = checker.check_compositionality();
  for (const auto& r : comp) {
    INFO(r.id);
    CHECK(r.pass());
  }
}

TEST_CASE("a programmatically built model plugs into the whole engine") {
  // Bounded-arithmetic flavor over 0..9, no JSON involved: tables are
  // computed and handed to the constructor directly.
  std::vector<std::string> domain;
  for (int i = 0; i < 10; ++i) domain.push_back(std::to_string(i));
  std::map<std::string, ObjectModel::Predicate> preds;
  ObjectModel::Predicate square_free, composite, small;
  for (int i = 0; i < 10; ++i) {
    std::string e = std::to_string(i);
    square_free.domain.push_back(e);
    square_free.table[e] = i % 4 != 0 && i % 9 != 0;
    composite.domain.push_back(e);
    composite.table[e] = i == 4 || i == 6 || i == 8 || i == 9;
    small.domain.push_back(e);
    small.table[e] = true;  // everything below ten
  }
  preds["sqfree"] = square_free;
  preds["comp"] = composite;
  preds["small"] = small;
  ObjectModel m(domain, preds, 1);

  CHECK(m.classify("small") == PredicateClass::P1);
  CHECK(m.classify("sqfree") == PredicateClass::P3);
  Fragment f = build_fragment(m, 2);
  TruthSets ts = fixed_point(f);
  CHECK(ts.outside_l0(f) == 0);
  Checker checker(m, f, ts, {});
  NormsReport rep = norms_report(checker, 2);
  CHECK(rep.all_mechanized_verified());
}

TEST_CASE("a model with no predicates has an empty truth domain") {
  ObjectModel m = ObjectModel::from_json_text(R"({"domain": ["0"], "predicates": {}})");
  Fragment f = build_fragment(m, 2);
  TruthSets ts = fixed_point(f);
  CHECK(ts.x_t.empty());
  CHECK(ts.final_set.empty());
  Checker checker(m, f, ts, {});
  CHECK_THROWS_AS(norms_report(checker, 2), EmptyUniverse);
}

TEST_CASE("pair rules sample above the threshold and stay exhaustive below") {
  Suite s;
  CheckOptions opts;
  opts.seed = 5;
  opts.pair_threshold = 50;  // force sampling for the t-rules
  opts.sample_pairs = 777;
  Checker checker(s.model, s.fragment, s.truth, opts);
  auto results = checker.check_connective_rules();
  CHECK(find(results, "t2").universe == 777);

  CheckOptions wide;
  wide.pair_threshold = 200000;
  Checker checker2(s.model, s.fragment, s.truth, wide);
  auto results2 = checker2.check_connective_rules();
  size_t u = find(results2, "t2").universe;
  // Exhaustive: a perfect square of the pool size.
  size_t root = 0;
  while (root * root < u) ++root;
  CHECK(root * root == u);
  CHECK(find(results2, "t0").universe == s.fragment.size());
}
