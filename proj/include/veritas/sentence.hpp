#pragma once

#include <memory>
#include <string>

#include "veritas/bignat.hpp"

namespace veritas {

/// Node kinds of the extended language.
///
/// The numeric values double as the tag of the Gödel numbering, so the
/// order is frozen: reordering would change every code and break stored
/// reports.
enum class Kind : uint8_t {
  ObjAtom = 0,   // P(x) at a domain element
  ObjForall = 1, // forall x P(x), object quantifier
  ObjExists = 2, // exists x P(x)
  TAtom = 3,     // T applied to a numeral
  ForallT = 4,   // forall x T(x)
  ExistsT = 5,   // exists x T(x)
  ForallTT = 6,  // forall x T of the quoted T(x)
  ExistsTT = 7,
  ForallTP = 8,  // forall x T of the quoted P(x)
  ExistsTP = 9,
  Not = 10,
  Or = 11,
  And = 12,
  Implies = 13,
  Iff = 14,
};

constexpr uint32_t kKindCount = 15;

class Sentence;
using Sent = std::shared_ptr<const Sentence>;

/// Immutable sentence tree. Every node carries its Gödel code (computed
/// bottom-up at construction) and its rank.
///
/// Rank is the wellfounded reference measure: object-language sentences
/// without connectives have rank 0, the six quantified T-forms rank 1, a
/// T-atom one more than its decoded referent (1 if the numeral is not a
/// code), and a connective node one more than its deepest child.
class Sentence {
public:
  Kind kind() const { return kind_; }
  /// Left child for binary connectives; the single child of Not.
  const Sent& lhs() const { return lhs_; }
  const Sent& rhs() const { return rhs_; }
  const std::string& pred() const { return pred_; }
  const std::string& elem() const { return elem_; }
  /// TAtom only: the numeral argument.
  const BigNat& arg() const { return arg_; }
  /// TAtom only: the sentence the numeral is the code of, resolved at
  /// construction; nullptr when the numeral is not a code.
  const Sent& t_referent() const { return ref_; }

  const BigNat& code() const { return code_; }
  uint32_t rank() const { return rank_; }
  /// True iff the truth symbol occurs anywhere in the tree. Sentences
  /// without it belong to the object language.
  bool mentions_t() const { return mentions_t_; }
  bool is_object() const { return !mentions_t_; }

  bool is_connective() const { return kind_ >= Kind::Not; }
  bool is_binary() const { return kind_ >= Kind::Or; }
  bool has_pred() const {
    return kind_ == Kind::ObjAtom || kind_ == Kind::ObjForall ||
           kind_ == Kind::ObjExists || kind_ == Kind::ForallTP ||
           kind_ == Kind::ExistsTP;
  }

  friend bool operator==(const Sentence& a, const Sentence& b) { return a.code_ == b.code_; }
  friend bool operator!=(const Sentence& a, const Sentence& b) { return !(a == b); }

private:
  friend struct SentenceFactory;
  Sentence() = default;

  Kind kind_ = Kind::ObjAtom;
  Sent lhs_, rhs_, ref_;
  std::string pred_, elem_;
  BigNat arg_;
  BigNat code_;
  uint32_t rank_ = 0;
  bool mentions_t_ = false;
};

// Factories. Identifier arguments must be nonempty strings over
// [A-Za-z0-9_]; they throw std::invalid_argument otherwise.
Sent obj_atom(const std::string& pred, const std::string& elem);
Sent obj_forall(const std::string& pred);
Sent obj_exists(const std::string& pred);
Sent t_atom(const BigNat& numeral);
/// TAtom at the numeral of the referent's code.
Sent t_quote(const Sent& referent);
Sent forall_t();
Sent exists_t();
Sent forall_tt();
Sent exists_tt();
Sent forall_tp(const std::string& pred);
Sent exists_tp(const std::string& pred);
Sent neg(const Sent& s);
Sent disj(const Sent& a, const Sent& b);
Sent conj(const Sent& a, const Sent& b);
Sent implies(const Sent& a, const Sent& b);
Sent iff(const Sent& a, const Sent& b);

struct SentCodeHash {
  size_t operator()(const Sent& s) const { return s->code().hash(); }
};
struct SentCodeEq {
  bool operator()(const Sent& a, const Sent& b) const { return a->code() == b->code(); }
};

}  // namespace veritas
