#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veritas {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

struct UnknownPredicate : std::runtime_error {
  explicit UnknownPredicate(const std::string& pred)
      : std::runtime_error("unknown predicate: '" + pred + "'") {}
};

struct UnknownElement : std::runtime_error {
  UnknownElement(const std::string& pred, const std::string& elem)
      : std::runtime_error("element '" + elem + "' is not in the domain of predicate '" +
                           pred + "'") {}
};

struct NotObjectSentence : std::runtime_error {
  NotObjectSentence() : std::runtime_error("sentence mentions the truth symbol") {}
};

struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

struct FragmentTooLarge : std::runtime_error {
  FragmentTooLarge(size_t size, size_t cap)
      : std::runtime_error("fragment exceeds cap: " + std::to_string(size) + " > " +
                           std::to_string(cap)) {}
};

/// A stage set containing both a sentence and its negation. The operator
/// preserves consistency of consistent seeds, so this signals a bug, not
/// a reachable state.
struct InconsistencyDetected : std::runtime_error {
  explicit InconsistencyDetected(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyUniverse : std::runtime_error {
  explicit EmptyUniverse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace veritas
