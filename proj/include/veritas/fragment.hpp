#pragma once

#include <limits>
#include <unordered_map>
#include <vector>

#include "veritas/object_model.hpp"
#include "veritas/sentence.hpp"

namespace veritas {

constexpr uint32_t kNoIndex = std::numeric_limits<uint32_t>::max();

/// A finite, rank-downward-closed window onto the extended language,
/// interned for the saturation engine: members are sorted by code and
/// addressed by index; per-member tables resolve children, T-referents
/// and negation companions to indices.
///
/// Closure invariants: every immediate subsentence, every decoded
/// T-referent and the negation companion of every member is a member;
/// all P(x) instances of every mentioned predicate are members; the four
/// constant quantified T-forms and both per-predicate forms are members.
class Fragment {
public:
  struct PredForms {
    std::string pred;
    PredicateClass cls;
    uint32_t forall_tp = kNoIndex;
    uint32_t exists_tp = kNoIndex;
    uint32_t not_forall_tp = kNoIndex;
    uint32_t not_exists_tp = kNoIndex;
  };

  const std::vector<Sent>& members() const { return members_; }
  const std::vector<BigNat>& codes() const { return codes_; }
  size_t size() const { return members_.size(); }
  const Sent& member(uint32_t i) const { return members_[i]; }

  /// Index of the member with this code, or kNoIndex.
  uint32_t index_of(const BigNat& code) const;
  uint32_t index_of(const Sentence& s) const { return index_of(s.code()); }

  // Per-member tables, all parallel to members().
  uint32_t child_a(uint32_t i) const { return child_a_[i]; }
  uint32_t child_b(uint32_t i) const { return child_b_[i]; }
  /// Index of the member's syntactic negation, kNoIndex if absent. The
  /// companion layer guarantees presence for every non-negation member;
  /// a negation member's entry points at its double negation when that
  /// is in range.
  uint32_t neg_of(uint32_t i) const { return neg_of_[i]; }
  /// TAtom members: index of the decoded referent.
  uint32_t t_ref(uint32_t i) const { return t_ref_[i]; }
  uint32_t rank_of(uint32_t i) const { return rank_[i]; }
  bool is_object(uint32_t i) const { return is_object_[i]; }
  /// Object member the model valuates true (W membership).
  bool in_w(uint32_t i) const { return in_w_[i]; }

  // Constant quantified forms and their negations.
  uint32_t forall_t_idx() const { return forall_t_; }
  uint32_t exists_t_idx() const { return exists_t_; }
  uint32_t forall_tt_idx() const { return forall_tt_; }
  uint32_t exists_tt_idx() const { return exists_tt_; }
  uint32_t not_forall_t_idx() const { return not_forall_t_; }
  uint32_t not_forall_tt_idx() const { return not_forall_tt_; }
  const std::vector<PredForms>& pred_forms() const { return pred_forms_; }

  /// Rank bound the fragment was built with (the companion layer may add
  /// members one rank above it).
  unsigned built_depth() const { return built_depth_; }

private:
  friend Fragment build_fragment(const ObjectModel&, unsigned, size_t);

  std::vector<Sent> members_;
  std::vector<BigNat> codes_;
  std::unordered_map<BigNat, uint32_t, BigNatHash> index_;
  std::vector<uint32_t> child_a_, child_b_, neg_of_, t_ref_, rank_;
  std::vector<uint8_t> is_object_, in_w_;
  uint32_t forall_t_ = kNoIndex, exists_t_ = kNoIndex;
  uint32_t forall_tt_ = kNoIndex, exists_tt_ = kNoIndex;
  uint32_t not_forall_t_ = kNoIndex, not_forall_tt_ = kNoIndex;
  std::vector<PredForms> pred_forms_;
  unsigned built_depth_ = 0;
};

/// Enumerates the fragment at the given rank bound:
///   - the model's object sentences of rank <= depth;
///   - the quantified T-forms (rank 1);
///   - negation and T-atom ladders: !A and T[#'A'] for every member A of
///     rank < depth;
///   - all binary combinations of rank-0 members (deeper binaries square
///     the universe per level and add no new rule shape);
///   - a final negation-companion layer so every member's negation is a
///     member.
/// At depth 1 this yields exactly the sentences of rank <= 1 over the
/// model's atoms. Deterministic: members are sorted by code.
/// Throws FragmentTooLarge above the cap.
Fragment build_fragment(const ObjectModel& model, unsigned depth,
                        size_t cap = 200000);

}  // namespace veritas
