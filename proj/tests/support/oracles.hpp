#pragma once

// Independent test oracles. These re-derive results straight from the
// defining equations with none of the engine's machinery (no index sets,
// no worklists, no rule tables); membership is tracked through decimal
// code strings on purpose so a representation bug cannot cancel out.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "veritas/godel.hpp"
#include "veritas/object_model.hpp"
#include "veritas/sentence.hpp"
#include "veritas/text.hpp"

namespace oracles {

using veritas::Kind;
using veritas::ObjectModel;
using veritas::Sent;

// Classical valuation over a pre-tabulated atom map.
class TruthTable {
public:
  explicit TruthTable(const ObjectModel& model) {
    for (const auto& name : model.predicate_names()) {
      const auto& p = model.predicate(name);
      for (const auto& e : p.domain) atoms_[name + "/" + e] = p.table.at(e);
      domains_[name] = p.domain;
    }
  }

  bool eval(const Sent& s) const {
    switch (s->kind()) {
      case Kind::ObjAtom:
        return atoms_.at(s->pred() + "/" + s->elem());
      case Kind::ObjForall: {
        for (const auto& e : domains_.at(s->pred()))
          if (!atoms_.at(s->pred() + "/" + e)) return false;
        return true;
      }
      case Kind::ObjExists: {
        for (const auto& e : domains_.at(s->pred()))
          if (atoms_.at(s->pred() + "/" + e)) return true;
        return false;
      }
      case Kind::Not:
        return !eval(s->lhs());
      case Kind::Or:
        return eval(s->lhs()) || eval(s->rhs());
      case Kind::And:
        return eval(s->lhs()) && eval(s->rhs());
      case Kind::Implies:
        return !eval(s->lhs()) || eval(s->rhs());
      case Kind::Iff:
        return eval(s->lhs()) == eval(s->rhs());
      default:
        throw std::runtime_error("oracle: not an object sentence");
    }
  }

private:
  std::map<std::string, bool> atoms_;
  std::map<std::string, std::vector<std::string>> domains_;
};

using CodeSet = std::set<std::string>;

inline std::string key(const Sent& s) { return s->code().to_decimal(); }

// Straight-line restatement of the stage-set equations over a sentence
// list: the base stage from W and the six premise sets, then repeated
// full scans with the nine connective rules until nothing changes.
class NaiveStages {
public:
  NaiveStages(const ObjectModel& model, std::vector<Sent> sentences)
      : model_(&model), sentences_(std::move(sentences)), table_(model) {}

  CodeSet w() const {
    CodeSet out;
    for (const auto& s : sentences_)
      if (s->is_object() && table_.eval(s)) out.insert(key(s));
    return out;
  }

  CodeSet g0(const CodeSet& u) const {
    CodeSet out = w();
    if (u.empty()) return out;
    for (const auto& s : sentences_) {
      switch (s->kind()) {
        case Kind::TAtom: {
          const Sent& ref = s->t_referent();
          if (ref && u.count(key(ref))) out.insert(key(s));  // D1(U)
          break;
        }
        case Kind::ExistsT:
        case Kind::ExistsTT:
          out.insert(key(s));  // D1 constants
          break;
        case Kind::ForallTP:
          if (model_->classify(s->pred()) == veritas::PredicateClass::P1)
            out.insert(key(s));  // D2
          break;
        case Kind::ExistsTP: {
          auto c = model_->classify(s->pred());
          if (c != veritas::PredicateClass::P2) out.insert(key(s));  // D2 or D4
          break;
        }
        case Kind::Not: {
          const Sent& x = s->lhs();
          if (x->kind() == Kind::TAtom) {  // D2(U)
            const Sent& ref = x->t_referent();
            if (ref && u.count(key(veritas::neg(ref)))) out.insert(key(s));
          } else if (x->kind() == Kind::ForallT || x->kind() == Kind::ForallTT) {
            out.insert(key(s));  // D1 constants
          } else if (x->kind() == Kind::ForallTP) {
            auto c = model_->classify(x->pred());
            if (c != veritas::PredicateClass::P1) out.insert(key(s));  // D3 or D4
          } else if (x->kind() == Kind::ExistsTP) {
            if (model_->classify(x->pred()) == veritas::PredicateClass::P2)
              out.insert(key(s));  // D3
          }
          break;
        }
        default:
          break;
      }
    }
    return out;
  }

  CodeSet one_round(const CodeSet& g) const {
    CodeSet out = g;
    auto in = [&](const Sent& s) { return g.count(key(s)) != 0; };
    for (const auto& s : sentences_) {
      switch (s->kind()) {
        case Kind::Or:
          if (in(s->lhs()) || in(s->rhs())) out.insert(key(s));
          break;
        case Kind::And:
          if (in(s->lhs()) && in(s->rhs())) out.insert(key(s));
          break;
        case Kind::Implies:
          if (in(veritas::neg(s->lhs())) || in(s->rhs())) out.insert(key(s));
          break;
        case Kind::Iff:
          if ((in(s->lhs()) && in(s->rhs())) ||
              (in(veritas::neg(s->lhs())) && in(veritas::neg(s->rhs()))))
            out.insert(key(s));
          break;
        case Kind::Not: {
          const Sent& x = s->lhs();
          switch (x->kind()) {
            case Kind::Not:
              if (in(x->lhs())) out.insert(key(s));
              break;
            case Kind::Or:
              if (in(veritas::neg(x->lhs())) && in(veritas::neg(x->rhs())))
                out.insert(key(s));
              break;
            case Kind::And:
              if (in(veritas::neg(x->lhs())) || in(veritas::neg(x->rhs())))
                out.insert(key(s));
              break;
            case Kind::Implies:
              if (in(x->lhs()) && in(veritas::neg(x->rhs()))) out.insert(key(s));
              break;
            case Kind::Iff:
              if ((in(x->lhs()) && in(veritas::neg(x->rhs()))) ||
                  (in(veritas::neg(x->lhs())) && in(x->rhs())))
                out.insert(key(s));
              break;
            default:
              break;
          }
          break;
        }
        default:
          break;
      }
    }
    return out;
  }

  CodeSet g(const CodeSet& u, int max_rounds = 64) const {
    CodeSet cur = g0(u);
    for (int i = 0; i < max_rounds; ++i) {
      CodeSet next = one_round(cur);
      if (next == cur) return cur;
      cur = std::move(next);
    }
    return cur;
  }

  CodeSet f(const CodeSet& g) const {
    CodeSet out;
    for (const auto& s : sentences_) {
      if (s->kind() == Kind::Not) {
        if (g.count(key(s->lhs()))) out.insert(key(s));
      } else if (g.count(key(veritas::neg(s)))) {
        out.insert(key(s));
      }
    }
    return out;
  }

  CodeSet least_fixed_point(int max_outer = 32) const {
    CodeSet u = w();
    for (int i = 0; i < max_outer; ++i) {
      CodeSet next = g(u);
      if (next == u) return u;
      u = std::move(next);
    }
    return u;
  }

private:
  const ObjectModel* model_;
  std::vector<Sent> sentences_;
  TruthTable table_;
};

// Re-derives the fragment universe from the generation grammar, keyed by
// canonical text: the model's atom level, one binary layer over it, the
// quantified forms, negation and quotation ladders up to the rank bound,
// and the closing negation-companion layer.
inline std::set<std::string> enumerate_fragment_texts(const ObjectModel& model,
                                                      unsigned depth) {
  using veritas::print;
  std::map<std::string, Sent> all;
  auto add = [&](const Sent& s) { all.emplace(print(s), s); };

  std::vector<Sent> level0;
  for (const auto& name : model.predicate_names()) {
    for (const auto& e : model.predicate(name).domain)
      level0.push_back(veritas::obj_atom(name, e));
    level0.push_back(veritas::obj_forall(name));
    level0.push_back(veritas::obj_exists(name));
  }
  for (const auto& s : level0) add(s);

  // Object ladder from the model's own depth setting.
  std::vector<Sent> obj_level = level0;
  for (unsigned d = 1; d <= model.object_depth(); ++d) {
    std::vector<Sent> next;
    for (const auto& s : obj_level) next.push_back(veritas::neg(s));
    if (d == 1) {
      for (const auto& a : level0)
        for (const auto& b : level0) {
          next.push_back(veritas::disj(a, b));
          next.push_back(veritas::conj(a, b));
          next.push_back(veritas::implies(a, b));
          next.push_back(veritas::iff(a, b));
        }
    }
    for (const auto& s : next)
      if (s->rank() <= depth) add(s);
    obj_level = std::move(next);
  }

  add(veritas::forall_t());
  add(veritas::exists_t());
  add(veritas::forall_tt());
  add(veritas::exists_tt());
  for (const auto& name : model.predicate_names()) {
    add(veritas::forall_tp(name));
    add(veritas::exists_tp(name));
  }

  for (const auto& a : level0)
    for (const auto& b : level0) {
      add(veritas::disj(a, b));
      add(veritas::conj(a, b));
      add(veritas::implies(a, b));
      add(veritas::iff(a, b));
    }

  for (unsigned r = 1; r <= depth; ++r) {
    std::vector<Sent> below;
    for (const auto& [text, s] : all)
      if (s->rank() == r - 1) below.push_back(s);
    for (const auto& s : below) {
      add(veritas::neg(s));
      add(veritas::t_quote(s));
    }
  }

  std::vector<Sent> snapshot;
  for (const auto& [text, s] : all) snapshot.push_back(s);
  for (const auto& s : snapshot)
    if (s->kind() != Kind::Not) add(veritas::neg(s));

  std::set<std::string> texts;
  for (const auto& [text, s] : all) texts.insert(text);
  return texts;
}

}  // namespace oracles
