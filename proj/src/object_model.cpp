#include "veritas/object_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "veritas/godel.hpp"

namespace veritas {

const char* to_string(PredicateClass c) {
  switch (c) {
    case PredicateClass::P1: return "P1";
    case PredicateClass::P2: return "P2";
    default: return "P3";
  }
}

ObjectModel::ObjectModel(std::vector<std::string> domain,
                         std::map<std::string, Predicate> predicates,
                         unsigned object_depth)
    : domain_(std::move(domain)),
      predicates_(std::move(predicates)),
      object_depth_(object_depth) {
  if (domain_.empty()) throw ModelError("model domain is empty");
  for (const auto& e : domain_) {
    if (!is_ident(e)) throw ModelError("bad domain element name: '" + e + "'");
  }
  {
    auto sorted = domain_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ModelError("duplicate domain element");
  }
  for (auto& [name, p] : predicates_) {
    if (!is_ident(name)) throw ModelError("bad predicate name: '" + name + "'");
    if (p.domain.empty())
      throw ModelError("predicate '" + name + "' has an empty domain");
    for (const auto& e : p.domain) {
      if (std::find(domain_.begin(), domain_.end(), e) == domain_.end())
        throw ModelError("predicate '" + name + "' lists element '" + e +
                         "' outside the model domain");
      if (!p.table.count(e))
        throw ModelError("predicate '" + name + "' has no value at '" + e + "'");
    }
    names_.push_back(name);
  }
}

ObjectModel ObjectModel::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  try {
    std::vector<std::string> domain = j.at("domain").get<std::vector<std::string>>();
    std::map<std::string, Predicate> preds;
    for (auto& [name, pj] : j.at("predicates").items()) {
      Predicate p;
      if (pj.contains("dom"))
        p.domain = pj.at("dom").get<std::vector<std::string>>();
      else
        p.domain = domain;
      auto true_at = pj.at("true_at").get<std::vector<std::string>>();
      for (const auto& e : p.domain) p.table[e] = false;
      for (const auto& e : true_at) {
        if (std::find(p.domain.begin(), p.domain.end(), e) == p.domain.end())
          throw ModelError("predicate '" + name + "': true_at element '" + e +
                           "' outside its domain");
        p.table[e] = true;
      }
      preds.emplace(name, std::move(p));
    }
    unsigned depth = j.value("object_depth", 2u);
    return ObjectModel(std::move(domain), std::move(preds), depth);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("bad model shape: ") + e.what());
  }
}

ObjectModel ObjectModel::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read model file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

bool ObjectModel::has_predicate(const std::string& name) const {
  return predicates_.count(name) != 0;
}

const ObjectModel::Predicate& ObjectModel::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw UnknownPredicate(name);
  return it->second;
}

bool ObjectModel::valuate(const Sentence& s) const {
  switch (s.kind()) {
    case Kind::ObjAtom: {
      const Predicate& p = predicate(s.pred());
      auto it = p.table.find(s.elem());
      if (it == p.table.end()) throw UnknownElement(s.pred(), s.elem());
      return it->second;
    }
    case Kind::ObjForall: {
      const Predicate& p = predicate(s.pred());
      return std::all_of(p.domain.begin(), p.domain.end(),
                         [&](const std::string& e) { return p.table.at(e); });
    }
    case Kind::ObjExists: {
      const Predicate& p = predicate(s.pred());
      return std::any_of(p.domain.begin(), p.domain.end(),
                         [&](const std::string& e) { return p.table.at(e); });
    }
    case Kind::Not:
      return !valuate(*s.lhs());
    case Kind::Or:
      return valuate(*s.lhs()) || valuate(*s.rhs());
    case Kind::And:
      return valuate(*s.lhs()) && valuate(*s.rhs());
    case Kind::Implies:
      return !valuate(*s.lhs()) || valuate(*s.rhs());
    case Kind::Iff:
      return valuate(*s.lhs()) == valuate(*s.rhs());
    default:
      throw NotObjectSentence();
  }
}

PredicateClass ObjectModel::classify(const std::string& pred) const {
  const Predicate& p = predicate(pred);
  bool any_true = false, any_false = false;
  for (const auto& e : p.domain) (p.table.at(e) ? any_true : any_false) = true;
  if (!any_false) return PredicateClass::P1;
  if (!any_true) return PredicateClass::P2;
  return PredicateClass::P3;
}

bool ObjectModel::mentions_known_symbols(const Sentence& s) const {
  switch (s.kind()) {
    case Kind::ObjAtom: {
      if (!has_predicate(s.pred())) return false;
      return predicate(s.pred()).table.count(s.elem()) != 0;
    }
    case Kind::ObjForall:
    case Kind::ObjExists:
    case Kind::ForallTP:
    case Kind::ExistsTP:
      return has_predicate(s.pred());
    case Kind::Not:
      return mentions_known_symbols(*s.lhs());
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff:
      return mentions_known_symbols(*s.lhs()) && mentions_known_symbols(*s.rhs());
    default:
      return true;
  }
}

std::vector<Sent> ObjectModel::object_sentences() const {
  std::vector<Sent> atoms;
  for (const auto& name : names_) {
    const Predicate& p = predicate(name);
    for (const auto& e : p.domain) atoms.push_back(obj_atom(name, e));
    atoms.push_back(obj_forall(name));
    atoms.push_back(obj_exists(name));
  }
  std::vector<Sent> out = atoms;
  if (object_depth_ == 0) return out;
  // One binary layer over the atom level; negation ladder above. Deeper
  // binary nesting repeats no new connective shape and squares the
  // universe per level.
  std::vector<Sent> prev = atoms;
  std::vector<Sent> level;
  for (const auto& a : atoms) level.push_back(neg(a));
  for (const auto& a : atoms)
    for (const auto& b : atoms) {
      level.push_back(disj(a, b));
      level.push_back(conj(a, b));
      level.push_back(implies(a, b));
      level.push_back(iff(a, b));
    }
  out.insert(out.end(), level.begin(), level.end());
  for (unsigned d = 2; d <= object_depth_; ++d) {
    std::vector<Sent> next;
    for (const auto& s : level) next.push_back(neg(s));
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<BigNat> true_object_codes(const std::vector<Sent>& fragment,
                                      const ObjectModel& model) {
  std::vector<BigNat> out;
  for (const auto& s : fragment) {
    if (s->is_object() && model.valuate(*s)) out.push_back(s->code());
  }
  return out;
}

}  // namespace veritas
