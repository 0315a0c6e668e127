#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "veritas/engine.hpp"
#include "veritas/evaluate.hpp"
#include "veritas/fragment.hpp"

namespace veritas {

struct CheckOptions {
  uint64_t seed = 0;
  /// Pair rules run exhaustively when the pool squares to at most this
  /// many instances, and draw sample_pairs seeded pairs otherwise.
  size_t pair_threshold = 200000;
  size_t sample_pairs = 100000;
  size_t max_counterexamples = 8;
};

struct CheckResult {
  std::string id;
  size_t universe = 0;  // instances checked
  /// Rank-minimal failing instances (empty on pass).
  std::vector<Sent> counterexamples;
  std::chrono::microseconds elapsed{0};
  bool pass() const { return counterexamples.empty(); }
};

/// Runs the truth-rule and compositionality checks over one saturated
/// fragment. Each verdict is produced by the evaluator (or an injected
/// verdict function, used by the fault-injection tests).
class Checker {
public:
  using EvalFn = std::function<Verdict(const Sent&)>;

  Checker(const ObjectModel& model, const Fragment& fragment, const TruthSets& truth,
          CheckOptions options = {});

  /// Replaces the verdict source. The default evaluates through an
  /// internal memoized Evaluator.
  void set_eval_fn(EvalFn fn) { eval_fn_ = std::move(fn); }

  // Rule checks; ids in parentheses.
  std::vector<CheckResult> check_connective_rules();   // t0..t5
  std::vector<CheckResult> check_quantifier_rules();   // t6 t7 tt6 tt7 tp6 tp7
  CheckResult check_biconditionals();                  // tbicond
  std::vector<CheckResult> check_compositionality();   // a1..a9
  CheckResult check_conservativity();                  // conservativity
  CheckResult check_totality();                        // totality (T total on X_T)
  CheckResult check_untyped();                         // untyped (T-atoms at every rank)
  CheckResult check_consistency();                     // consistency (G/F disjoint)

  /// Every check above, in a fixed order.
  std::vector<CheckResult> run_all();

  const Fragment& fragment() const { return *frag_; }
  const TruthSets& truth() const { return *truth_; }
  const ObjectModel& model() const { return *model_; }
  const CheckOptions& options() const { return options_; }

  /// Re-runs the rule behind a reported counterexample. Used to confirm
  /// that counterexamples fail in isolation.
  bool recheck_instance(const std::string& id, const Sent& instance);

private:
  Verdict ev(const Sent& s);
  const std::vector<Sent>& pair_pool();
  template <typename F>
  CheckResult run_pairs(const std::string& id, const std::vector<Sent>& pool,
                        F&& instance);
  template <typename F>
  CheckResult run_members(const std::string& id, F&& instance);

  struct Failures;

  const ObjectModel* model_;
  const Fragment* frag_;
  const TruthSets* truth_;
  CheckOptions options_;
  Evaluator evaluator_;
  EvalFn eval_fn_;
  std::vector<Sent> pair_pool_;
};

enum class NormStatus { Verified, Asserted, Failed };
const char* to_string(NormStatus s);

/// Outcome of the whole suite mapped onto the ten norms. The three norms
/// that quantify over interpretations or theories (n2, n6, n10) are
/// reported as asserted rather than machine-checked.
struct NormsReport {
  std::map<std::string, NormStatus> norms;
  std::map<std::string, std::string> notes;
  std::vector<CheckResult> checks;
  unsigned depth = 0;
  uint64_t seed = 0;

  bool all_mechanized_verified() const;
};

/// Runs the full suite and maps results to norms. Throws EmptyUniverse
/// when the fragment is empty or no sentence is decided (X_T empty).
NormsReport norms_report(Checker& checker, unsigned depth);

std::string norms_report_json(const NormsReport& report);
std::string norms_report_text(const NormsReport& report);

std::string saturation_report_json(const Fragment& fragment, const TruthSets& truth);
std::string saturation_report_text(const Fragment& fragment, const TruthSets& truth);

}  // namespace veritas
