#pragma once

#include <vector>

#include "veritas/fragment.hpp"
#include "veritas/indexset.hpp"

namespace veritas {

/// The seed-dependent and constant premise sets feeding the base stage:
/// truth ascriptions over the seed, their negations, and the quantified
/// forms admitted outright (per predicate class for the P-forms). All
/// restricted to the fragment.
struct DSets {
  IndexSet d1_u;  // T at the numeral of A, for code(A) in U
  IndexSet d2_u;  // not-T at the numeral of A, for code(not A) in U
  IndexSet d1;    // not-forallT, existsT, not-forallTT, existsTT
  IndexSet d2;    // both P-forms, P true everywhere
  IndexSet d3;    // negations of both P-forms, P false everywhere
  IndexSet d4;    // negated forall / plain exists, mixed P
};

struct GResult {
  IndexSet set;
  /// Closure round at which each member entered (kNoIndex if absent):
  /// 0 for the base stage, n for members first derived in round n.
  std::vector<uint32_t> inner_stage;
};

/// Stage sets of the fixed-point iteration and the final truth/false
/// sets over a fragment.
struct TruthSets {
  /// U_0, U_1, ... ; strictly increasing until the last two coincide.
  std::vector<IndexSet> stages;
  IndexSet final_set;   // = last stage, satisfies g_of(final) == final
  IndexSet false_set;   // codes whose negation is in final_set
  /// Least outer stage at which each member appears (kNoIndex if never).
  std::vector<uint32_t> stage_of;
  /// Least k with U_{k+1} == U_k.
  size_t fixed_point_stage = 0;
  /// Numerals (codes) of members in final_set or false_set: the domain
  /// of the truth predicate realized on this fragment.
  std::vector<BigNat> x_t;

  size_t outside_l0(const Fragment& f) const;
};

/// Precomputed rule tables for one fragment. All operations are pure;
/// the saturator only reads the fragment.
class Saturator {
public:
  explicit Saturator(const Fragment& f);

  const Fragment& fragment() const { return *frag_; }

  /// Codes of true object sentences (the seed of the iteration).
  IndexSet w() const;
  DSets d_sets(const IndexSet& u) const;
  /// W if the seed is empty, otherwise W with all six premise sets.
  IndexSet g0(const IndexSet& u) const;
  /// One round of the nine connective closure rules, unioned in.
  IndexSet step(const IndexSet& gn) const;
  /// Least closure of g0(u) under the nine rules (worklist iteration).
  GResult g_of(const IndexSet& u) const;
  /// Members whose negation lies in g. For a negation member !X this is
  /// equivalent to X in g (double negation elimination).
  IndexSet f_of(const IndexSet& g) const;
  /// Iterates U_{k+1} = g_of(U_k) from U_0 = W to the least fixed point.
  /// Throws InconsistencyDetected if any stage contains a sentence
  /// together with its negation.
  TruthSets fixed_point() const;

  bool consistent(const IndexSet& u) const;

private:
  const Fragment* frag_;

  enum class RuleKind : uint8_t { G0, G1, G2, G3, G4, G5, G6, G7, G8 };
  struct Rule {
    RuleKind kind;
    uint32_t concl;
    uint32_t a = kNoIndex, b = kNoIndex, na = kNoIndex, nb = kNoIndex;
  };
  bool satisfied(const Rule& r, const IndexSet& s) const;

  std::vector<Rule> rules_;
  std::vector<std::vector<uint32_t>> dependents_;  // member -> rule ids
  struct DPair {
    uint32_t concl, premise;
  };
  std::vector<DPair> d1_pairs_, d2_pairs_;
  std::vector<uint32_t> const_d1_;
  IndexSet w_;
};

// Free-function forms of the operations above (each builds the rule
// tables; reuse a Saturator for repeated calls on one fragment).
DSets d_sets(const IndexSet& u, const Fragment& f);
IndexSet g0(const IndexSet& u, const Fragment& f);
IndexSet step(const IndexSet& gn, const Fragment& f);
GResult g_of(const IndexSet& u, const Fragment& f);
IndexSet f_of(const IndexSet& g, const Fragment& f);
TruthSets fixed_point(const Fragment& f);

/// No sentence occurs together with its negation. Codes must decode;
/// throws NotACode otherwise.
bool is_consistent(const std::vector<BigNat>& codes);
bool is_consistent(const IndexSet& u, const Fragment& f);

/// Helpers to move between code vectors and index sets.
IndexSet to_index_set(const std::vector<BigNat>& codes, const Fragment& f);
std::vector<BigNat> to_codes(const IndexSet& s, const Fragment& f);

}  // namespace veritas
