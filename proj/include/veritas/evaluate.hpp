#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "veritas/object_model.hpp"
#include "veritas/sentence.hpp"

namespace veritas {

/// Interpretation of one sentence: true or false with the least outer
/// stage of the fixed-point iteration at which the deciding code
/// appears, or outside the interpreted language (a T-atom whose numeral
/// is not the code of a sentence over the model, or a compound with such
/// a constituent).
struct Verdict {
  enum class Kind : uint8_t { True, False, OutsideL0 };
  Kind kind = Kind::OutsideL0;
  uint32_t stage = 0;

  static Verdict truth(uint32_t stage) { return {Kind::True, stage}; }
  static Verdict falsity(uint32_t stage) { return {Kind::False, stage}; }
  static Verdict outside() { return {Kind::OutsideL0, 0}; }

  bool is_true() const { return kind == Kind::True; }
  bool is_false() const { return kind == Kind::False; }
  bool is_outside() const { return kind == Kind::OutsideL0; }
  bool decided() const { return !is_outside(); }

  /// Negation: stages carry over (a sentence is false at the stage its
  /// negation is admitted, and vice versa).
  Verdict flip() const {
    if (is_outside()) return *this;
    return {is_true() ? Kind::False : Kind::True, stage};
  }

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.kind == b.kind && (a.is_outside() || a.stage == b.stage);
  }
  friend bool operator!=(const Verdict& a, const Verdict& b) { return !(a == b); }
};

std::string to_string(const Verdict& v);

/// Demand-driven, memoized interpreter. Recursion descends the
/// wellfounded reference order (subsentences and decoded T-referents),
/// so it terminates on every input, including T-atoms at arbitrary
/// numerals. Verdict stages agree with the saturation's stage indices.
///
/// The memo is keyed by code and bounded; entries beyond the cap are
/// recomputed instead of stored, which changes speed but never results.
/// An instance is not synchronized: share only across callers that do
/// not run concurrently, or give each caller its own instance.
class Evaluator {
public:
  explicit Evaluator(const ObjectModel& model, size_t memo_cap = 400000);

  Verdict evaluate(const Sent& s);
  const ObjectModel& model() const { return *model_; }
  size_t memo_size() const { return memo_.size(); }

private:
  Verdict compute(const Sent& s);

  const ObjectModel* model_;
  bool truths_exist_;
  size_t memo_cap_;
  std::unordered_map<BigNat, Verdict, BigNatHash> memo_;
};

/// Rules a derivation step can name. W and the D-rules admit codes into
/// the base stage; G0..G8 are the connective closure rules; NegHolds
/// marks a false sentence explained through its admitted negation;
/// Outside marks the undecided leaf or the constituent it spreads from.
enum class Rule {
  W,
  D1U,
  D2U,
  ConstD1,
  ConstD2,
  ConstD3,
  ConstD4,
  G0,
  G1,
  G2,
  G3,
  G4,
  G5,
  G6,
  G7,
  G8,
  NegHolds,
  Outside,
};

const char* rule_name(Rule r);

/// Derivation tree for one sentence: the rule that admitted the deciding
/// code, with one subtree per premise, down to W members and constants.
struct Trace {
  Sent sentence;
  Verdict verdict;
  Rule rule = Rule::Outside;
  std::vector<Trace> premises;
};

Trace explain(const Sent& s, Evaluator& ev);
std::string render_trace(const Trace& t);

}  // namespace veritas
