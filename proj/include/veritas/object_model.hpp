#pragma once

#include <map>
#include <string>
#include <vector>

#include "veritas/bignat.hpp"
#include "veritas/errors.hpp"
#include "veritas/sentence.hpp"

namespace veritas {

/// Trichotomy of a predicate over its domain: true everywhere, false
/// everywhere, or mixed.
enum class PredicateClass { P1, P2, P3 };

const char* to_string(PredicateClass c);

/// A finite first-order structure interpreting the object language: an
/// ordered domain of named elements and a total boolean table per
/// predicate over that predicate's own (nonempty) domain.
///
/// The structure is immutable after construction; every operation is
/// pure.
class ObjectModel {
public:
  struct Predicate {
    std::vector<std::string> domain;  // X_P, subset of the model domain
    std::map<std::string, bool> table;
  };

  ObjectModel(std::vector<std::string> domain,
              std::map<std::string, Predicate> predicates,
              unsigned object_depth);

  static ObjectModel from_json_text(const std::string& text);
  static ObjectModel from_json_file(const std::string& path);

  const std::vector<std::string>& domain() const { return domain_; }
  const std::vector<std::string>& predicate_names() const { return names_; }
  bool has_predicate(const std::string& name) const;
  const Predicate& predicate(const std::string& name) const;
  unsigned object_depth() const { return object_depth_; }

  /// Classical valuation over the structure. The sentence must be T-free
  /// and mention only registered predicates and elements of their
  /// domains.
  bool valuate(const Sentence& s) const;

  PredicateClass classify(const std::string& pred) const;

  /// True iff every predicate and element the sentence mentions is
  /// registered (T-atoms' numeral referents are not inspected).
  bool mentions_known_symbols(const Sentence& s) const;

  /// The object sentences the model contributes to fragments: atoms and
  /// quantifier closures, one layer of binary combinations over the
  /// atoms, and a negation ladder up to object_depth.
  std::vector<Sent> object_sentences() const;

private:
  std::vector<std::string> domain_;
  std::map<std::string, Predicate> predicates_;
  std::vector<std::string> names_;
  unsigned object_depth_;
};

/// W restricted to the given sentences: codes of the T-free members the
/// model valuates true.
std::vector<BigNat> true_object_codes(const std::vector<Sent>& fragment,
                                      const ObjectModel& model);

}  // namespace veritas
