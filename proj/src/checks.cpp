#include "veritas/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"
#include "veritas/godel.hpp"
#include "veritas/text.hpp"

namespace veritas {

namespace {

uint64_t fnv64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// True when a binary connective occurs anywhere, including inside quoted
// referents of T-atoms.
bool contains_binary(const Sentence& s) {
  if (s.is_binary()) return true;
  if (s.kind() == Kind::Not) return contains_binary(*s.lhs());
  if (s.kind() == Kind::TAtom) {
    const Sent& ref = s.t_referent();
    return ref && contains_binary(*ref);
  }
  return false;
}

Verdict::Kind expected_not(const Verdict& a) {
  return a.flip().kind;
}

Verdict::Kind expected_or(const Verdict& a, const Verdict& b) {
  if (a.is_outside() || b.is_outside()) return Verdict::Kind::OutsideL0;
  return a.is_true() || b.is_true() ? Verdict::Kind::True : Verdict::Kind::False;
}

Verdict::Kind expected_and(const Verdict& a, const Verdict& b) {
  if (a.is_outside() || b.is_outside()) return Verdict::Kind::OutsideL0;
  return a.is_true() && b.is_true() ? Verdict::Kind::True : Verdict::Kind::False;
}

Verdict::Kind expected_implies(const Verdict& a, const Verdict& b) {
  if (a.is_outside() || b.is_outside()) return Verdict::Kind::OutsideL0;
  return a.is_false() || b.is_true() ? Verdict::Kind::True : Verdict::Kind::False;
}

Verdict::Kind expected_iff(const Verdict& a, const Verdict& b) {
  if (a.is_outside() || b.is_outside()) return Verdict::Kind::OutsideL0;
  return a.kind == b.kind ? Verdict::Kind::True : Verdict::Kind::False;
}

class Timer {
public:
  explicit Timer(CheckResult& result) : result_(&result) {
    start_ = std::chrono::steady_clock::now();
  }
  ~Timer() {
    result_->elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_);
  }

private:
  CheckResult* result_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

// Keeps only rank-minimal failures, capped.
struct Checker::Failures {
  explicit Failures(size_t cap) : cap(cap) {}
  size_t cap;
  uint32_t min_rank = UINT32_MAX;
  std::vector<Sent> items;

  void add(const Sent& s) {
    if (s->rank() < min_rank) {
      min_rank = s->rank();
      items.clear();
    }
    if (s->rank() == min_rank && items.size() < cap) items.push_back(s);
  }

  void finish(CheckResult& r) {
    std::sort(items.begin(), items.end(),
              [](const Sent& a, const Sent& b) { return a->code() < b->code(); });
    r.counterexamples = std::move(items);
  }
};

Checker::Checker(const ObjectModel& model, const Fragment& fragment,
                 const TruthSets& truth, CheckOptions options)
    : model_(&model),
      frag_(&fragment),
      truth_(&truth),
      options_(options),
      evaluator_(model) {
  eval_fn_ = [this](const Sent& s) { return evaluator_.evaluate(s); };
  for (const auto& m : frag_->members()) evaluator_.evaluate(m);
}

Verdict Checker::ev(const Sent& s) { return eval_fn_(s); }

const std::vector<Sent>& Checker::pair_pool() {
  if (pair_pool_.empty()) {
    for (const auto& m : frag_->members()) {
      if (m->rank() <= 2 && !contains_binary(*m)) pair_pool_.push_back(m);
    }
  }
  return pair_pool_;
}

template <typename F>
CheckResult Checker::run_members(const std::string& id, F&& instance) {
  CheckResult r;
  r.id = id;
  Timer timer(r);
  Failures failures(options_.max_counterexamples);
  for (const auto& m : frag_->members()) {
    ++r.universe;
    if (Sent bad = instance(m)) failures.add(bad);
  }
  failures.finish(r);
  return r;
}

template <typename F>
CheckResult Checker::run_pairs(const std::string& id, const std::vector<Sent>& pool,
                               F&& instance) {
  CheckResult r;
  r.id = id;
  Timer timer(r);
  Failures failures(options_.max_counterexamples);
  const size_t n = pool.size();
  if (n * n <= options_.pair_threshold) {
    for (const auto& a : pool)
      for (const auto& b : pool) {
        ++r.universe;
        if (Sent bad = instance(a, b)) failures.add(bad);
      }
  } else {
    std::mt19937_64 rng(options_.seed ^ fnv64(id));
    for (size_t k = 0; k < options_.sample_pairs; ++k) {
      const auto& a = pool[rng() % n];
      const auto& b = pool[rng() % n];
      ++r.universe;
      if (Sent bad = instance(a, b)) failures.add(bad);
    }
  }
  failures.finish(r);
  return r;
}

std::vector<CheckResult> Checker::check_connective_rules() {
  std::vector<CheckResult> out;
  out.push_back(run_members("t0", [&](const Sent& a) -> Sent {
    Sent nn = neg(neg(a));
    return ev(nn).kind == ev(a).kind ? nullptr : nn;
  }));
  out.push_back(run_members("t1", [&](const Sent& a) -> Sent {
    Verdict va = ev(a), vn = ev(neg(a));
    bool ok = vn.kind == expected_not(va) && va.kind == expected_not(vn);
    return ok ? nullptr : a;
  }));
  out.push_back(run_pairs("t2", pair_pool(), [&](const Sent& a, const Sent& b) -> Sent {
    Sent c = disj(a, b);
    return ev(c).kind == expected_or(ev(a), ev(b)) ? nullptr : c;
  }));
  out.push_back(run_pairs("t3", pair_pool(), [&](const Sent& a, const Sent& b) -> Sent {
    Sent c = conj(a, b);
    return ev(c).kind == expected_and(ev(a), ev(b)) ? nullptr : c;
  }));
  out.push_back(run_pairs("t4", pair_pool(), [&](const Sent& a, const Sent& b) -> Sent {
    Sent c = implies(a, b);
    return ev(c).kind == expected_implies(ev(a), ev(b)) ? nullptr : c;
  }));
  out.push_back(run_pairs("t5", pair_pool(), [&](const Sent& a, const Sent& b) -> Sent {
    Sent c = iff(a, b);
    return ev(c).kind == expected_iff(ev(a), ev(b)) ? nullptr : c;
  }));
  return out;
}

namespace {

struct QuantInstances {
  bool any_true = false, all_true = true;
  bool any_false = false, all_false = true;
  size_t count = 0;
};

}  // namespace

std::vector<CheckResult> Checker::check_quantifier_rules() {
  auto scan = [&](auto&& make_instance) {
    QuantInstances q;
    for (const auto& x : truth_->x_t) {
      Verdict v = ev(make_instance(x));
      ++q.count;
      if (v.is_true()) q.any_true = true; else q.all_true = false;
      if (v.is_false()) q.any_false = true; else q.all_false = false;
    }
    return q;
  };
  auto exists_ok = [&](const Sent& form, const QuantInstances& q) {
    Verdict v = ev(form);
    return v.is_true() == q.any_true && v.is_false() == q.all_false;
  };
  auto forall_ok = [&](const Sent& form, const QuantInstances& q) {
    Verdict v = ev(form);
    return v.is_true() == q.all_true && v.is_false() == q.any_false;
  };

  std::vector<CheckResult> out;
  {
    CheckResult r;
    r.id = "t6";
    Timer timer(r);
    QuantInstances q = scan([](const BigNat& x) { return t_atom(x); });
    r.universe = q.count;
    if (!exists_ok(exists_t(), q)) r.counterexamples.push_back(exists_t());
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.id = "t7";
    Timer timer(r);
    QuantInstances q = scan([](const BigNat& x) { return t_atom(x); });
    r.universe = q.count;
    if (!forall_ok(forall_t(), q)) r.counterexamples.push_back(forall_t());
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.id = "tt6";
    Timer timer(r);
    QuantInstances q = scan([](const BigNat& x) { return t_quote(t_atom(x)); });
    r.universe = q.count;
    if (!exists_ok(exists_tt(), q)) r.counterexamples.push_back(exists_tt());
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.id = "tt7";
    Timer timer(r);
    QuantInstances q = scan([](const BigNat& x) { return t_quote(t_atom(x)); });
    r.universe = q.count;
    if (!forall_ok(forall_tt(), q)) r.counterexamples.push_back(forall_tt());
    out.push_back(std::move(r));
  }
  {
    CheckResult r6, r7;
    r6.id = "tp6";
    r7.id = "tp7";
    Timer t6(r6);
    Timer t7(r7);
    Failures f6(options_.max_counterexamples), f7(options_.max_counterexamples);
    for (const auto& pred : model_->predicate_names()) {
      QuantInstances q;
      for (const auto& e : model_->predicate(pred).domain) {
        Verdict v = ev(t_quote(obj_atom(pred, e)));
        ++q.count;
        if (v.is_true()) q.any_true = true; else q.all_true = false;
        if (v.is_false()) q.any_false = true; else q.all_false = false;
      }
      r6.universe += q.count;
      r7.universe += q.count;
      if (!exists_ok(exists_tp(pred), q)) f6.add(exists_tp(pred));
      if (!forall_ok(forall_tp(pred), q)) f7.add(forall_tp(pred));
    }
    f6.finish(r6);
    f7.finish(r7);
    out.push_back(std::move(r6));
    out.push_back(std::move(r7));
  }
  return out;
}

CheckResult Checker::check_biconditionals() {
  CheckResult r;
  r.id = "tbicond";
  Timer timer(r);
  Failures failures(options_.max_counterexamples);
  unsigned depth = frag_->built_depth();
  uint32_t bound = depth >= 2 ? depth - 2 : 0;
  for (const auto& a : frag_->members()) {
    if (a->rank() > bound) continue;
    Sent direct = iff(a, t_quote(a));
    Sent negated = iff(a, neg(t_quote(a)));
    r.universe += 2;
    if (!ev(direct).is_true()) failures.add(direct);
    if (!ev(negated).is_false()) failures.add(negated);
  }
  failures.finish(r);
  return r;
}

std::vector<CheckResult> Checker::check_compositionality() {
  std::vector<CheckResult> out;
  out.push_back(run_members("a1", [&](const Sent& a) -> Sent {
    Sent bic = iff(t_quote(neg(a)), neg(t_quote(a)));
    return ev(bic).is_true() ? nullptr : bic;
  }));
  auto pair_rule = [&](const std::string& id, Sent (*op)(const Sent&, const Sent&)) {
    return run_pairs(id, frag_->members(), [&, op](const Sent& a, const Sent& b) -> Sent {
      Sent bic = iff(t_quote(op(a, b)), op(t_quote(a), t_quote(b)));
      return ev(bic).is_true() ? nullptr : bic;
    });
  };
  out.push_back(pair_rule("a2", disj));
  out.push_back(pair_rule("a3", conj));
  out.push_back(pair_rule("a4", implies));
  out.push_back(pair_rule("a5", iff));
  {
    CheckResult r6, r7;
    r6.id = "a6";
    r7.id = "a7";
    Timer t6(r6);
    Timer t7(r7);
    Failures f6(options_.max_counterexamples), f7(options_.max_counterexamples);
    for (const auto& pred : model_->predicate_names()) {
      Sent b6 = iff(t_quote(obj_forall(pred)), forall_tp(pred));
      Sent b7 = iff(t_quote(obj_exists(pred)), exists_tp(pred));
      ++r6.universe;
      ++r7.universe;
      if (!ev(b6).is_true()) f6.add(b6);
      if (!ev(b7).is_true()) f7.add(b7);
    }
    f6.finish(r6);
    f7.finish(r7);
    out.push_back(std::move(r6));
    out.push_back(std::move(r7));
  }
  {
    CheckResult r;
    r.id = "a8";
    Timer timer(r);
    Sent bic = iff(t_quote(forall_t()), forall_tt());
    r.universe = 1;
    if (!ev(bic).is_true()) r.counterexamples.push_back(bic);
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.id = "a9";
    Timer timer(r);
    Sent bic = iff(t_quote(exists_t()), exists_tt());
    r.universe = 1;
    if (!ev(bic).is_true()) r.counterexamples.push_back(bic);
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult Checker::check_conservativity() {
  CheckResult r;
  r.id = "conservativity";
  Timer timer(r);
  Failures failures(options_.max_counterexamples);
  for (const auto& m : frag_->members()) {
    if (!m->is_object()) continue;
    ++r.universe;
    Verdict v = ev(m);
    bool object_truth = model_->valuate(*m);
    bool ok = object_truth ? v.is_true() : v.is_false();
    if (!ok) failures.add(m);
  }
  failures.finish(r);
  return r;
}

CheckResult Checker::check_totality() {
  CheckResult r;
  r.id = "totality";
  Timer timer(r);
  Failures failures(options_.max_counterexamples);
  for (const auto& x : truth_->x_t) {
    ++r.universe;
    Sent inst = t_atom(x);
    if (!ev(inst).decided()) failures.add(inst);
  }
  failures.finish(r);
  return r;
}

CheckResult Checker::check_untyped() {
  return run_members("untyped", [&](const Sent& a) -> Sent {
    Sent inst = t_quote(a);
    return ev(inst).decided() ? nullptr : inst;
  });
}

CheckResult Checker::check_consistency() {
  CheckResult r;
  r.id = "consistency";
  Timer timer(r);
  Failures failures(options_.max_counterexamples);
  const Fragment& f = *frag_;
  for (uint32_t i = 0; i < f.size(); ++i) {
    ++r.universe;
    bool in_g = truth_->final_set.test(i);
    bool in_f = truth_->false_set.test(i);
    if (in_g && in_f) {
      failures.add(f.member(i));
      continue;
    }
    if (f.member(i)->kind() == Kind::Not) {
      uint32_t inner = f.child_a(i);
      if ((in_g && truth_->final_set.test(inner)) ||
          (in_f && truth_->false_set.test(inner)))
        failures.add(f.member(i));
    }
  }
  failures.finish(r);
  return r;
}

std::vector<CheckResult> Checker::run_all() {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  append(check_connective_rules());
  append(check_quantifier_rules());
  out.push_back(check_biconditionals());
  append(check_compositionality());
  out.push_back(check_conservativity());
  out.push_back(check_totality());
  out.push_back(check_untyped());
  out.push_back(check_consistency());
  return out;
}

bool Checker::recheck_instance(const std::string& id, const Sent& instance) {
  if (id == "t0") {
    const Sent& a = instance->lhs()->lhs();
    return ev(instance).kind == ev(a).kind;
  }
  if (id == "t1") {
    Verdict va = ev(instance), vn = ev(neg(instance));
    return vn.kind == expected_not(va) && va.kind == expected_not(vn);
  }
  if (id == "t2")
    return ev(instance).kind == expected_or(ev(instance->lhs()), ev(instance->rhs()));
  if (id == "t3")
    return ev(instance).kind == expected_and(ev(instance->lhs()), ev(instance->rhs()));
  if (id == "t4")
    return ev(instance).kind ==
           expected_implies(ev(instance->lhs()), ev(instance->rhs()));
  if (id == "t5")
    return ev(instance).kind == expected_iff(ev(instance->lhs()), ev(instance->rhs()));
  if (id == "tbicond") {
    bool negated = instance->rhs()->kind() == Kind::Not;
    return negated ? ev(instance).is_false() : ev(instance).is_true();
  }
  if (id[0] == 'a') return ev(instance).is_true();
  if (id == "conservativity") {
    return model_->valuate(*instance) ? ev(instance).is_true() : ev(instance).is_false();
  }
  if (id == "totality" || id == "untyped") return ev(instance).decided();
  if (id == "consistency") {
    uint32_t i = frag_->index_of(*instance);
    if (i == kNoIndex) return true;
    return !(truth_->final_set.test(i) && truth_->false_set.test(i));
  }
  // Quantifier rules: re-run the whole rule for the named form.
  for (auto& r : check_quantifier_rules()) {
    if (r.id != id) continue;
    for (const auto& cex : r.counterexamples) {
      if (cex->code() == instance->code()) return false;
    }
    return true;
  }
  throw std::invalid_argument("unknown check id: " + id);
}

const char* to_string(NormStatus s) {
  switch (s) {
    case NormStatus::Verified: return "VERIFIED";
    case NormStatus::Asserted: return "ASSERTED";
    default: return "FAILED";
  }
}

bool NormsReport::all_mechanized_verified() const {
  for (const auto& [norm, status] : norms) {
    if (status == NormStatus::Failed) return false;
  }
  for (const char* n : {"n1", "n3", "n4", "n5", "n7", "n8", "n9"}) {
    auto it = norms.find(n);
    if (it == norms.end() || it->second != NormStatus::Verified) return false;
  }
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

NormsReport norms_report(Checker& checker, unsigned depth) {
  if (checker.fragment().size() == 0)
    throw EmptyUniverse("fragment has no members");
  if (checker.truth().x_t.empty())
    throw EmptyUniverse("no sentence is decided: the truth predicate has an empty domain");

  NormsReport rep;
  rep.depth = depth;
  rep.seed = checker.options().seed;
  rep.checks = checker.run_all();

  auto pass = [&](std::initializer_list<const char*> ids) {
    for (const char* id : ids) {
      auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                             [&](const CheckResult& r) { return r.id == id; });
      if (it == rep.checks.end() || !it->pass()) return false;
    }
    return true;
  };
  auto verdict = [&](std::initializer_list<const char*> ids) {
    return pass(ids) ? NormStatus::Verified : NormStatus::Failed;
  };

  rep.norms["n1"] = verdict({"totality"});
  rep.norms["n2"] = pass({"conservativity"}) ? NormStatus::Asserted : NormStatus::Failed;
  rep.norms["n3"] = verdict({"untyped"});
  rep.norms["n4"] = verdict({"tbicond"});
  rep.norms["n5"] =
      verdict({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9"});
  rep.norms["n6"] = NormStatus::Asserted;
  rep.norms["n7"] = verdict(
      {"t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "tt6", "tt7", "tp6", "tp7"});
  rep.norms["n8"] = rep.norms["n7"];
  rep.norms["n9"] = verdict({"consistency"});
  rep.norms["n10"] = NormStatus::Asserted;

  rep.notes["n2"] =
      "not machine-checkable in full (quantifies over added theories); backed "
      "by the conservativity check";
  rep.notes["n6"] = "standard interpretations are outside the mechanized scope";
  rep.notes["n10"] = "self-applicability is a meta-level claim; not machine-checked";
  return rep;
}

namespace {

nlohmann::json checks_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item;
    item["id"] = c.id;
    item["universe"] = c.universe;
    item["pass"] = c.pass();
    nlohmann::json cexs = nlohmann::json::array();
    for (const auto& s : c.counterexamples) cexs.push_back(print(s));
    item["counterexamples"] = std::move(cexs);
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace

std::string norms_report_json(const NormsReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["depth"] = report.depth;
  j["seed"] = report.seed;
  nlohmann::json norms;
  for (const auto& [name, status] : report.norms) norms[name] = to_string(status);
  j["norms"] = std::move(norms);
  nlohmann::json notes;
  for (const auto& [name, note] : report.notes) notes[name] = note;
  j["notes"] = std::move(notes);
  j["checks"] = checks_json(report.checks);
  return j.dump(2) + "\n";
}

std::string norms_report_text(const NormsReport& report) {
  std::ostringstream out;
  out << "norms report (depth " << report.depth << ", seed " << report.seed << ")\n";
  for (const auto& [name, status] : report.norms) {
    out << "  " << name << ": " << to_string(status);
    auto note = report.notes.find(name);
    if (note != report.notes.end()) out << "  [" << note->second << "]";
    out << "\n";
  }
  out << "checks:\n";
  for (const auto& c : report.checks) {
    out << "  " << c.id << ": " << (c.pass() ? "pass" : "FAIL") << "  (universe "
        << c.universe << ", " << c.elapsed.count() / 1000 << " ms)\n";
    for (const auto& s : c.counterexamples) out << "    counterexample: " << print(s) << "\n";
  }
  out << (report.all_mechanized_verified() ? "all mechanized norms VERIFIED\n"
                                           : "norm verification FAILED\n");
  return out.str();
}

std::string saturation_report_json(const Fragment& fragment, const TruthSets& truth) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["fragment_size"] = fragment.size();
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : truth.stages) stages.push_back(s.count());
  j["stages"] = std::move(stages);
  j["fixed_point_stage"] = truth.fixed_point_stage;
  j["g_size"] = truth.final_set.count();
  j["f_size"] = truth.false_set.count();
  j["outside_l0"] = truth.outside_l0(fragment);
  bool consistent = is_consistent(truth.final_set, fragment) &&
                    is_consistent(truth.false_set, fragment);
  j["consistent"] = consistent;
  return j.dump(2) + "\n";
}

std::string saturation_report_text(const Fragment& fragment, const TruthSets& truth) {
  std::ostringstream out;
  out << "fragment: " << fragment.size() << " sentences (depth "
      << fragment.built_depth() << ")\n";
  out << "stages:";
  for (const auto& s : truth.stages) out << " " << s.count();
  out << "\nfixed point at stage " << truth.fixed_point_stage << "\n";
  out << "true set: " << truth.final_set.count()
      << ", false set: " << truth.false_set.count()
      << ", outside L0: " << truth.outside_l0(fragment) << "\n";
  return out.str();
}

}  // namespace veritas
