#pragma once

#include <string>
#include <string_view>

#include "veritas/errors.hpp"
#include "veritas/object_model.hpp"
#include "veritas/sentence.hpp"

namespace veritas {

// Concrete grammar (ASCII, whitespace between tokens, binary forms always
// parenthesized):
//
//   sentence  := '!' sentence | '(' sentence binop sentence ')'
//              | '(' sentence ')' | atom
//   binop     := '|' | '&' | '->' | '<->'
//   atom      := 'P.' ident '(' ident ')'          object atom
//              | 'all' 'P.' ident                  object forall
//              | 'ex' 'P.' ident                   object exists
//              | 'T[' nat ']'                      T-atom at a raw numeral
//              | 'T[#' quote sentence quote ']'    T-atom at the quoted
//                                                  sentence's code
//              | 'forallT' | 'existsT'
//              | 'forallTT' | 'existsTT'
//              | 'forallTP' 'P.' ident | 'existsTP' 'P.' ident
//
// where quote is a single quote character and ident is [A-Za-z0-9_]+.

/// Parses the grammar above. With a model, predicate and element names
/// are checked against it; without one the parse is purely structural.
/// Throws ParseError (carrying the offending position), including for
/// unknown identifiers when a model is given.
Sent parse(std::string_view text, const ObjectModel* model = nullptr);

/// Canonical text: fully parenthesized binary forms, quoted-code sugar
/// for every T-atom whose numeral is a code. parse(print(s)) == s.
std::string print(const Sentence& s);
inline std::string print(const Sent& s) { return print(*s); }

}  // namespace veritas
