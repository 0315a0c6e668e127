#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "veritas/checks.hpp"
#include "veritas/engine.hpp"
#include "veritas/evaluate.hpp"
#include "veritas/fragment.hpp"
#include "veritas/godel.hpp"
#include "veritas/text.hpp"

namespace {

using namespace veritas;

struct Config {
  std::string model_path;
  unsigned depth = 3;
  uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
};

void emit(const Config& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw ModelError("cannot write output file: " + cfg.out_path);
  out << payload;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = v.is_true() ? "True" : v.is_false() ? "False" : "OutsideL0";
  if (v.decided()) j["stage"] = v.stage;
  return j;
}

nlohmann::json trace_json(const Trace& t) {
  nlohmann::json j = verdict_json(t.verdict);
  j["sentence"] = print(t.sentence);
  if (t.verdict.decided()) j["rule"] = rule_name(t.rule);
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : t.premises) premises.push_back(trace_json(p));
  j["premises"] = std::move(premises);
  return j;
}

int cmd_eval(const Config& cfg, const std::string& sentence_text) {
  ObjectModel model = ObjectModel::from_json_file(cfg.model_path);
  Sent s = parse(sentence_text, &model);
  Evaluator evaluator(model);
  Verdict v = evaluator.evaluate(s);
  if (cfg.format == "json")
    emit(cfg, verdict_json(v).dump(2) + "\n");
  else
    emit(cfg, to_string(v) + "\n");
  return v.decided() ? 0 : 3;
}

int cmd_explain(const Config& cfg, const std::string& sentence_text) {
  ObjectModel model = ObjectModel::from_json_file(cfg.model_path);
  Sent s = parse(sentence_text, &model);
  Evaluator evaluator(model);
  Trace t = explain(s, evaluator);
  if (cfg.format == "json")
    emit(cfg, trace_json(t).dump(2) + "\n");
  else
    emit(cfg, render_trace(t));
  return t.verdict.decided() ? 0 : 3;
}

int cmd_saturate(const Config& cfg) {
  ObjectModel model = ObjectModel::from_json_file(cfg.model_path);
  Fragment fragment = build_fragment(model, cfg.depth);
  TruthSets truth = fixed_point(fragment);
  bool consistent = is_consistent(truth.final_set, fragment) &&
                    is_consistent(truth.false_set, fragment);
  if (cfg.format == "json")
    emit(cfg, saturation_report_json(fragment, truth));
  else
    emit(cfg, saturation_report_text(fragment, truth));
  return consistent ? 0 : 1;
}

int cmd_classify(const Config& cfg, const std::string& pred) {
  ObjectModel model = ObjectModel::from_json_file(cfg.model_path);
  PredicateClass c = model.classify(pred);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["predicate"] = pred;
    j["class"] = to_string(c);
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, std::string(to_string(c)) + "\n");
  }
  return 0;
}

Kind mutate_kind(const std::string& name) {
  if (name == "not") return Kind::Not;
  if (name == "or") return Kind::Or;
  if (name == "and") return Kind::And;
  if (name == "implies") return Kind::Implies;
  if (name == "iff") return Kind::Iff;
  if (name == "tatom") return Kind::TAtom;
  throw std::invalid_argument("unknown --mutate kind: " + name);
}

int cmd_norms(const Config& cfg, const std::string& mutate) {
  ObjectModel model = ObjectModel::from_json_file(cfg.model_path);
  Fragment fragment = build_fragment(model, cfg.depth);
  TruthSets truth = fixed_point(fragment);
  CheckOptions options;
  options.seed = cfg.seed;
  Checker checker(model, fragment, truth, options);
  if (!mutate.empty()) {
    Kind kind = mutate_kind(mutate);
    auto evaluator = std::make_shared<Evaluator>(model);
    checker.set_eval_fn([evaluator, kind](const Sent& s) {
      Verdict v = evaluator->evaluate(s);
      return s->kind() == kind ? v.flip() : v;
    });
  }
  NormsReport report = norms_report(checker, cfg.depth);
  if (cfg.format == "json")
    emit(cfg, norms_report_json(report));
  else
    emit(cfg, norms_report_text(report));
  return report.all_mechanized_verified() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truth-predicate engine over finite object models"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  Config cfg;
  app.add_option("--model", cfg.model_path, "model file (JSON)")->required();
  app.add_option("--depth", cfg.depth, "fragment rank bound")->default_val(3);
  app.add_option("--seed", cfg.seed, "sampling seed")->default_val(0);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");

  std::string sentence_text, pred_name, mutate;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one sentence");
  eval_cmd->add_option("sentence", sentence_text, "sentence text")->required();
  auto* saturate_cmd = app.add_subcommand("saturate", "run the fixed-point iteration");
  auto* norms_cmd = app.add_subcommand("norms", "run the verification suite");
  norms_cmd->add_option("--mutate", mutate,
                        "flip verdicts of one node kind (fault injection for tests)")
      ->check(CLI::IsMember({"not", "or", "and", "implies", "iff", "tatom"}));
  auto* classify_cmd = app.add_subcommand("classify", "classify a predicate");
  classify_cmd->add_option("predicate", pred_name, "predicate name")->required();
  auto* explain_cmd = app.add_subcommand("explain", "show the derivation of a sentence");
  explain_cmd->add_option("sentence", sentence_text, "sentence text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(cfg, sentence_text);
    if (saturate_cmd->parsed()) return cmd_saturate(cfg);
    if (norms_cmd->parsed()) return cmd_norms(cfg, mutate);
    if (classify_cmd->parsed()) return cmd_classify(cfg, pred_name);
    if (explain_cmd->parsed()) return cmd_explain(cfg, sentence_text);
  } catch (const FragmentTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InconsistencyDetected& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
