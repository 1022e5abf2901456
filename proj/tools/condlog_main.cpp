// condlog: command-line driver.
//
// Exit status: 0 accepted / true / nothing found, 1 rejected / false /
// countermodel found, 2 usage, I/O or parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "condlog/compiler.hpp"
#include "condlog/eval.hpp"
#include "condlog/hilbert.hpp"
#include "condlog/kernel.hpp"
#include "condlog/model_io.hpp"
#include "condlog/parse.hpp"
#include "condlog/script_io.hpp"
#include "condlog/search.hpp"
#include "condlog/substitution.hpp"

using namespace condlog;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Formula parse_or_throw(const std::string& text, Vocabulary& vocab) {
  try {
    return parse_formula(text, vocab, SymbolPolicy::Declare);
  } catch (const ParseError& e) {
    throw FormatError(std::string(e.what()) + " in \"" + text + "\"");
  }
}

// A formula list: a JSON array of strings, a JSON object with one array-valued
// key ("formulas", "theory", "premises"), or plain text with one formula per
// line ('#' starts a comment line).
std::vector<Formula> read_formulas(const std::string& path, Vocabulary& vocab) {
  const std::string text = slurp(path);
  std::vector<Formula> out;
  const json j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) {
    const json* list = &j;
    if (j.is_object())
      for (const char* key : {"formulas", "theory", "premises"})
        if (j.contains(key)) list = &j.at(key);
    if (!list->is_array()) throw FormatError(path + ": expected an array of formula strings");
    for (const auto& f : *list) {
      if (!f.is_string()) throw FormatError(path + ": expected formula strings");
      out.push_back(parse_or_throw(f.get<std::string>(), vocab));
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back(parse_or_throw(line.substr(start), vocab));
  }
  return out;
}

Theory extend_theory(Theory base, const std::string& path, Vocabulary& vocab) {
  if (path.empty()) return base;
  for (auto& f : read_formulas(path, vocab)) base.sentences.push_back(std::move(f));
  try {
    return Theory(std::move(base.sentences));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("theory: ") + e.what());
  }
}

Mode parse_mode(const std::string& s) {
  if (s == "limit") return Mode::Limit;
  if (s == "sp") return Mode::SP;
  if (s == "level") return Mode::AsWritten;
  throw UsageError("unknown mode " + s + " (limit, sp, level)");
}

struct Common {
  std::string theory;
  bool assume = false;
  int steps = 10000;
  int model_size = 4;
  bool json_out = false;

  void attach(CLI::App* app, bool oracle) {
    app->add_option("--theory", theory, "File with the first-order theory");
    if (oracle) {
      app->add_flag("--assume-side-conditions", assume, "Record undecided side conditions as assumptions");
      app->add_option("--oracle-steps", steps, "Given-clause iterations per side condition")->check(CLI::PositiveNumber);
      app->add_option("--oracle-model-size", model_size, "Largest domain tried for countermodels")
          ->check(CLI::PositiveNumber);
    }
    app->add_flag("--json", json_out, "Machine-readable output");
  }

  CheckPolicy policy() const {
    CheckPolicy p;
    p.assume_side_conditions = assume;
    p.budget.max_steps = steps;
    p.budget.max_model_size = model_size;
    return p;
  }
};

int report(const CheckReport& r, bool json_out) {
  if (json_out)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.accepted ? 0 : 1;
}

int run_check(const std::string& file, const Common& c, System system) {
  ProofScript s = read_script_file(file);
  s.theory = extend_theory(s.theory, c.theory, s.vocabulary);
  return report(check_script(s, system, c.policy()), c.json_out);
}

int run_hilbert(const std::string& file, const Common& c) {
  HilbertProof p = read_hilbert_file(file);
  p.theory = extend_theory(p.theory, c.theory, p.vocabulary);
  return report(check_hilbert_proof(p, c.policy()), c.json_out);
}

int run_compile(const std::string& file, const std::string& target, const std::string& weights, const std::string& out,
                const Common& c) {
  ProofScript s = read_script_file(file);
  s.theory = extend_theory(s.theory, c.theory, s.vocabulary);
  Level level;
  try {
    level = Level::parse(target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
  const SplitPolicy split = weights.empty() ? SplitPolicy{} : split_policy_from_json(read_json_file(weights));
  CompileResult r;
  try {
    r = compile(s, level, split, c.policy());
  } catch (const CompileError& e) {
    std::cerr << "compile: " << e.what() << "\n";
    return 1;
  }
  const CheckReport recheck = check_quant_proof(r.script, c.policy());
  json j = r.to_json();
  j["recheck"] = recheck.to_json();
  if (!out.empty()) {
    std::ofstream o(out);
    if (!o) throw FormatError("cannot write " + out);
    o << r.to_json().dump(2) << "\n";
  }
  if (c.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [f, l] : r.instantiation) std::cout << l.to_string() << "\t" << print_formula(f) << "\n";
    if (out.empty()) std::cout << r.to_json().at("script").dump(2) << "\n";
    std::cout << "quantitative script " << (recheck.accepted ? "accepted" : "rejected") << "\n";
    if (!recheck.accepted) std::cout << recheck.to_text();
  }
  return recheck.accepted ? 0 : 1;
}

// Every valuation of the free variables of f that extends v.
void valuations(const PSStructure& m, std::vector<std::string> vars, Valuation v, std::vector<Valuation>& out) {
  if (vars.empty()) {
    out.push_back(std::move(v));
    return;
  }
  const std::string x = vars.back();
  vars.pop_back();
  for (int e = 0; e < m.domain_size(); ++e) {
    v[x] = e;
    valuations(m, vars, v, out);
  }
}

int run_eval(const std::string& model_path, const std::string& text, const std::string& mode_name,
             const std::string& valuation, const Common& c) {
  const PSStructure m = read_model_file(model_path);
  Vocabulary vocab;
  for (const auto& w : m.worlds) {
    for (const auto& [k, _] : w.interp.constants) vocab.constants.insert(k);
    for (const auto& [f, table] : w.interp.functions)
      if (!table.empty()) vocab.functions[f] = static_cast<int>(table.begin()->first.size());
  }
  const Theory theory = extend_theory({}, c.theory, vocab);
  const ValidationReport valid = validate_structure(m, theory);
  if (!valid.valid) {
    std::cerr << "invalid structure:\n";
    for (const auto& p : valid.problems) std::cerr << "  " << p << "\n";
    return 2;
  }
  const Formula f = parse_or_throw(text, vocab);
  const Mode mode = parse_mode(mode_name);
  Valuation base;
  if (!valuation.empty()) {
    const json vj = json::parse(valuation, nullptr, false);
    if (vj.is_discarded()) throw UsageError("--valuation: not JSON");
    base = valuation_from_json(m, vj);
  }
  std::vector<std::string> open;
  for (const auto& x : free_variables(f))
    if (!base.count(x)) open.push_back(x);
  std::vector<Valuation> all;
  valuations(m, open, base, all);

  bool value = true;
  std::optional<std::uint64_t> witness;
  std::optional<Valuation> failing;
  for (const auto& v : all) {
    const CondVerdict r = evaluate(m, v, f, mode);
    if (r.witness_n0) witness = std::max(witness.value_or(0), *r.witness_n0);
    if (!r.value) {
      value = false;
      failing = v;
      break;
    }
  }
  if (c.json_out) {
    json j = {{"value", value}, {"mode", to_string(mode)}};
    if (witness) j["witness_n0"] = *witness;
    if (failing) j["failing_valuation"] = valuation_to_json(m, *failing);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
    if (witness) std::cout << "witness_n0 " << *witness << "\n";
    if (failing && !failing->empty()) std::cout << "fails at " << valuation_to_json(m, *failing).dump() << "\n";
  }
  return value ? 0 : 1;
}

int run_search(const std::string& premises_path, const std::string& goal_text, int worlds, int domain,
               const std::string& mode_name, std::uint64_t cap, const std::string& out, const Common& c) {
  Vocabulary vocab;
  const std::vector<Formula> premises = premises_path.empty() ? std::vector<Formula>{} : read_formulas(premises_path, vocab);
  const Formula goal = parse_or_throw(goal_text, vocab);
  const Theory theory = extend_theory({}, c.theory, vocab);
  SearchBounds bounds;
  bounds.max_worlds = worlds;
  bounds.max_domain = domain;
  bounds.enumeration_cap = cap;
  std::optional<Countermodel> cm;
  try {
    cm = search_counterexample(premises, goal, bounds, parse_mode(mode_name), theory);
  } catch (const BoundsTooLarge& e) {
    throw UsageError(e.what());
  }
  if (!cm) {
    std::cout << (c.json_out ? "{\"result\": \"exhausted\"}" : "exhausted") << "\n";
    return 0;
  }
  const json j = {{"model", structure_to_json(cm->structure)}, {"valuation", valuation_to_json(cm->structure, cm->valuation)}};
  if (!out.empty()) {
    std::ofstream o(out);
    if (!o) throw FormatError("cannot write " + out);
    o << structure_to_json(cm->structure).dump(2) << "\n";
  }
  std::cout << j.dump(2) << "\n";
  return 1;
}

int run_fmt(const std::vector<std::string>& files, const std::string& formula) {
  if (!formula.empty()) {
    Vocabulary vocab;
    std::cout << print_formula(parse_or_throw(formula, vocab)) << "\n";
  }
  for (const auto& path : files) {
    const std::string text = slurp(path);
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      Vocabulary vocab;
      for (const auto& f : read_formulas(path, vocab)) std::cout << print_formula(f) << "\n";
    } else if (j.is_object() && j.contains("steps")) {
      std::cout << script_to_json(script_from_json(j)).dump(2) << "\n";
    } else if (j.is_object() && j.contains("lines")) {
      std::cout << hilbert_to_json(hilbert_from_json(j)).dump(2) << "\n";
    } else if (j.is_object() && j.contains("domain")) {
      std::cout << structure_to_json(structure_from_json(j)).dump(2) << "\n";
    } else {
      Vocabulary vocab;
      json list = json::array();
      for (const auto& f : read_formulas(path, vocab)) list.push_back(print_formula(f));
      std::cout << list.dump(2) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order conditional logic: proof checking, compilation and model evaluation"};
  app.require_subcommand(1);

  Common common;
  std::string file;

  auto* check = app.add_subcommand("check", "Check a qualitative derivation");
  check->add_option("script", file, "Proof script (JSON)")->required();
  common.attach(check, true);

  auto* check_quant = app.add_subcommand("check-quant", "Check a quantitative derivation");
  check_quant->add_option("script", file, "Proof script (JSON)")->required();
  common.attach(check_quant, true);

  auto* check_hilbert = app.add_subcommand("check-hilbert", "Check an axiomatic derivation");
  check_hilbert->add_option("proof", file, "Hilbert proof (JSON)")->required();
  common.attach(check_hilbert, true);

  std::string target, weights, out;
  auto* comp = app.add_subcommand("compile", "Instantiate the premises of a derivation for a target level");
  comp->add_option("script", file, "Qualitative proof script (JSON)")->required();
  comp->add_option("--target", target, "Target level, e.g. 1/5")->required();
  comp->add_option("--weights", weights, "Split weights (JSON)");
  comp->add_option("--out", out, "Write instantiation and script here");
  common.attach(comp, true);

  std::string model, formula, mode = "limit", valuation;
  auto* ev = app.add_subcommand("eval", "Evaluate a formula in a structure");
  ev->add_option("--model", model, "Structure (JSON)")->required();
  ev->add_option("--formula", formula, "Formula")->required();
  ev->add_option("--mode", mode, "limit, sp or level");
  ev->add_option("--valuation", valuation, "JSON object mapping variables to element names");
  common.attach(ev, false);

  std::string premises, goal;
  int max_worlds = 2, max_domain = 2;
  std::uint64_t cap = SearchBounds{}.enumeration_cap;
  auto* se = app.add_subcommand("search", "Look for a countermodel to premises |= goal");
  se->add_option("--premises", premises, "Premise formulas (JSON array or one per line)");
  se->add_option("--goal", goal, "Goal formula")->required();
  se->add_option("--max-worlds", max_worlds, "Largest number of worlds")->check(CLI::PositiveNumber);
  se->add_option("--max-domain", max_domain, "Largest domain")->check(CLI::PositiveNumber);
  se->add_option("--mode", mode, "limit, sp or level");
  se->add_option("--cap", cap, "Largest number of candidates to enumerate");
  se->add_option("--out", out, "Write the countermodel structure here");
  common.attach(se, false);

  std::vector<std::string> fmt_files;
  auto* fmt = app.add_subcommand("fmt", "Print formulas, scripts or structures in canonical form");
  fmt->add_option("files", fmt_files, "Files to canonicalize");
  fmt->add_option("--formula", formula, "A formula to canonicalize");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(file, common, System::Qualitative);
    if (*check_quant) return run_check(file, common, System::Quantitative);
    if (*check_hilbert) return run_hilbert(file, common);
    if (*comp) return run_compile(file, target, weights, out, common);
    if (*ev) return run_eval(model, formula, mode, valuation, common);
    if (*se) return run_search(premises, goal, max_worlds, max_domain, mode, cap, out, common);
    if (*fmt) return run_fmt(fmt_files, formula);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
