#include "veritas/text.hpp"

#include <cctype>

#include "veritas/godel.hpp"

namespace veritas {

namespace {

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

class Parser {
public:
  Parser(std::string_view text, const ObjectModel* model)
      : text_(text), model_(model) {}

  Sent parse_all() {
    Sent s = sentence();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after sentence");
    return s;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  bool eat_str(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  std::string ident() {
    size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string pred_ref() {
    skip_ws();
    size_t at = pos_;
    if (!eat_str("P.")) fail("expected P.<predicate>");
    std::string name = ident();
    if (model_ && !model_->has_predicate(name)) {
      pos_ = at;
      fail("unknown predicate '" + name + "'");
    }
    return name;
  }

  Sent sentence() {
    if (++depth_ > kMaxNesting) fail("sentence nesting too deep");
    Sent s = sentence_inner();
    --depth_;
    return s;
  }

  Sent sentence_inner() {
    skip_ws();
    if (eat('!')) return neg(sentence());
    if (eat('(')) {
      Sent lhs = sentence();
      skip_ws();
      if (eat(')')) return lhs;  // grouping
      Sent (*op)(const Sent&, const Sent&) = nullptr;
      if (eat_str("<->"))
        op = iff;
      else if (eat_str("->"))
        op = implies;
      else if (eat('|'))
        op = disj;
      else if (eat('&'))
        op = conj;
      else
        fail("expected a connective: | & -> <->");
      Sent rhs = sentence();
      skip_ws();
      expect(')', "')'");
      return op(lhs, rhs);
    }
    return atom();
  }

  Sent atom() {
    skip_ws();
    size_t at = pos_;
    if (!ident_char(peek())) fail("expected a sentence");
    std::string word = ident();
    if (word == "T") return t_form(at);
    if (word == "P" && peek() == '.') {
      // Back up over "P": object atom P.<pred>(<elem>).
      pos_ = at;
      std::string pred = pred_ref();
      expect('(', "'('");
      size_t elem_at = pos_;
      std::string elem = ident();
      expect(')', "')'");
      if (model_) {
        const auto& p = model_->predicate(pred);
        if (!p.table.count(elem)) {
          pos_ = elem_at;
          fail("element '" + elem + "' is not in the domain of '" + pred + "'");
        }
      }
      return obj_atom(pred, elem);
    }
    if (word == "all") return obj_forall(pred_ref());
    if (word == "ex") return obj_exists(pred_ref());
    if (word == "forallT") return forall_t();
    if (word == "existsT") return exists_t();
    if (word == "forallTT") return forall_tt();
    if (word == "existsTT") return exists_tt();
    if (word == "forallTP") return forall_tp(pred_ref());
    if (word == "existsTP") return exists_tp(pred_ref());
    pos_ = at;
    fail("unknown sentence form '" + word + "'");
  }

  Sent t_form(size_t at) {
    if (!eat('[')) {
      pos_ = at;
      fail("expected '[' after T");
    }
    skip_ws();
    if (eat('#')) {
      expect('\'', "opening quote");
      Sent quoted = sentence();
      skip_ws();
      expect('\'', "closing quote");
      skip_ws();
      expect(']', "']'");
      return t_quote(quoted);
    }
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a numeral or #'<sentence>'");
    BigNat value = BigNat::from_decimal(text_.substr(start, pos_ - start));
    skip_ws();
    expect(']', "']'");
    return t_atom(value);
  }

  static constexpr size_t kMaxNesting = 4096;

  std::string_view text_;
  const ObjectModel* model_;
  size_t pos_ = 0;
  size_t depth_ = 0;
};

void print_into(const Sentence& s, std::string& out) {
  switch (s.kind()) {
    case Kind::ObjAtom:
      out += "P." + s.pred() + "(" + s.elem() + ")";
      return;
    case Kind::ObjForall:
      out += "all P." + s.pred();
      return;
    case Kind::ObjExists:
      out += "ex P." + s.pred();
      return;
    case Kind::TAtom: {
      const Sent& ref = s.t_referent();
      if (ref) {
        out += "T[#'";
        print_into(*ref, out);
        out += "']";
      } else {
        out += "T[" + s.arg().to_decimal() + "]";
      }
      return;
    }
    case Kind::ForallT: out += "forallT"; return;
    case Kind::ExistsT: out += "existsT"; return;
    case Kind::ForallTT: out += "forallTT"; return;
    case Kind::ExistsTT: out += "existsTT"; return;
    case Kind::ForallTP: out += "forallTP P." + s.pred(); return;
    case Kind::ExistsTP: out += "existsTP P." + s.pred(); return;
    case Kind::Not:
      out += "!";
      print_into(*s.lhs(), out);
      return;
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff: {
      const char* op = s.kind() == Kind::Or ? "|"
                       : s.kind() == Kind::And ? "&"
                       : s.kind() == Kind::Implies ? "->"
                                                   : "<->";
      out += "(";
      print_into(*s.lhs(), out);
      out += " ";
      out += op;
      out += " ";
      print_into(*s.rhs(), out);
      out += ")";
      return;
    }
  }
}

}  // namespace

Sent parse(std::string_view text, const ObjectModel* model) {
  return Parser(text, model).parse_all();
}

std::string print(const Sentence& s) {
  std::string out;
  print_into(s, out);
  return out;
}

}  // namespace veritas
