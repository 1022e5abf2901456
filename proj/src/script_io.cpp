#include "condlog/script_io.hpp"

#include "condlog/parse.hpp"

namespace condlog {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(const json& root) {
    if (!root.is_object()) throw FormatError("expected a JSON object");
    if (root.contains("vocabulary")) {
      vocab_ = vocabulary_from_json(root.at("vocabulary"));
      policy_ = SymbolPolicy::Strict;
    }
  }

  Formula formula(const json& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": expected a formula string");
    const auto text = j.get<std::string>();
    try {
      return parse_formula(text, vocab_, policy_);
    } catch (const ParseError& e) {
      throw FormatError(where + ": " + e.what() + " in \"" + text + "\"");
    } catch (const VocabularyError& e) {
      throw FormatError(where + ": " + e.what());
    }
  }

  Term term(const json& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": expected a term string");
    try {
      return parse_term(j.get<std::string>(), vocab_, policy_);
    } catch (const ParseError& e) {
      throw FormatError(where + ": " + e.what());
    }
  }

  std::vector<Formula> formulas(const json& root, const char* key, const std::string& where) {
    std::vector<Formula> out;
    if (!root.contains(key)) return out;
    const json& list = root.at(key);
    if (!list.is_array()) throw FormatError(where + "." + key + ": expected an array");
    for (std::size_t i = 0; i < list.size(); ++i)
      out.push_back(formula(list[i], where + "." + key + "[" + std::to_string(i) + "]"));
    return out;
  }

  Theory theory(const json& root) {
    try {
      return Theory(formulas(root, "theory", "theory"));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("theory: ") + e.what());
    }
  }

  PremiseSet premises(const json& j, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": expected {\"cond\":[..],\"fo\":[..]}");
    PremiseSet p;
    for (const auto& f : formulas(j, "cond", where)) p.add(f);
    for (const auto& f : formulas(j, "fo", where)) p.add(f);
    return p;
  }

  const Vocabulary& vocabulary() const { return vocab_; }

 private:
  Vocabulary vocab_;
  SymbolPolicy policy_ = SymbolPolicy::Declare;
};

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<int>();
}

std::vector<int> ids(const json& obj, const std::string& where) {
  std::vector<int> out;
  if (!obj.contains("from")) return out;
  if (!obj.at("from").is_array()) throw FormatError(where + ".from: expected an array");
  for (const auto& x : obj.at("from")) out.push_back(integer(x, where + ".from"));
  return out;
}

std::string text(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) throw FormatError(where + ": missing string \"" + key + "\"");
  return obj.at(key).get<std::string>();
}

json formulas_to_json(const std::vector<Formula>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(print_formula(f));
  return out;
}

}  // namespace

Vocabulary vocabulary_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("vocabulary: expected an object");
  Vocabulary v;
  try {
    if (j.contains("predicates"))
      for (const auto& [name, arity] : j.at("predicates").items()) v.declare_predicate(name, arity.get<int>());
    if (j.contains("functions"))
      for (const auto& [name, arity] : j.at("functions").items()) v.declare_function(name, arity.get<int>());
    if (j.contains("constants"))
      for (const auto& c : j.at("constants")) v.declare_constant(c.get<std::string>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("vocabulary: ") + e.what());
  } catch (const VocabularyError& e) {
    throw FormatError(std::string("vocabulary: ") + e.what());
  }
  return v;
}

json vocabulary_to_json(const Vocabulary& v) {
  json out = {{"predicates", json::object()}, {"functions", json::object()}, {"constants", json::array()}};
  for (const auto& [p, a] : v.predicates) out["predicates"][p] = a;
  for (const auto& [f, a] : v.functions) out["functions"][f] = a;
  for (const auto& c : v.constants) out["constants"].push_back(c);
  return out;
}

json premises_to_json(const PremiseSet& p) { return {{"cond", formulas_to_json(p.cond)}, {"fo", formulas_to_json(p.fo)}}; }

ProofScript script_from_json(const json& j) {
  Reader r(j);
  ProofScript s;
  s.theory = r.theory(j);
  if (j.contains("premises")) s.premises = r.premises(j.at("premises"), "premises");
  if (!j.contains("steps") || !j.at("steps").is_array()) throw FormatError("missing \"steps\" array");
  const json& steps = j.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const json& st = steps[i];
    const std::string where = "steps[" + std::to_string(i) + "]";
    if (!st.is_object()) throw FormatError(where + ": expected an object");
    ProofStep step;
    step.id = st.contains("id") ? integer(st.at("id"), where + ".id") : static_cast<int>(i + 1);
    step.rule = text(st, "rule", where);
    step.from = ids(st, where);
    if (!st.contains("conclusion")) throw FormatError(where + ": missing \"conclusion\"");
    step.conclusion = r.formula(st.at("conclusion"), where + ".conclusion");
    if (st.contains("premises")) step.premises = r.premises(st.at("premises"), where + ".premises");
    if (st.contains("params")) {
      const json& p = st.at("params");
      if (!p.is_object()) throw FormatError(where + ".params: expected an object");
      if (p.contains("term")) step.params.term = r.term(p.at("term"), where + ".params.term");
      if (p.contains("var")) step.params.variables.push_back(text(p, "var", where + ".params"));
      if (p.contains("vars")) {
        if (!p.at("vars").is_array()) throw FormatError(where + ".params.vars: expected an array");
        for (const auto& v : p.at("vars")) {
          if (!v.is_string()) throw FormatError(where + ".params.vars: expected strings");
          step.params.variables.push_back(v.get<std::string>());
        }
      }
      if (step.params.term && step.params.term->is_variable() && step.params.variables.empty())
        step.params.variables.push_back(step.params.term->name());
    }
    s.steps.push_back(std::move(step));
  }
  if (j.contains("goal"))
    s.goal = integer(j.at("goal"), "goal");
  else if (!s.steps.empty())
    s.goal = s.steps.back().id;
  s.vocabulary = r.vocabulary();
  return s;
}

json script_to_json(const ProofScript& s) {
  json steps = json::array();
  for (const auto& st : s.steps) {
    json o = {{"id", st.id}, {"rule", st.rule}, {"from", st.from}, {"conclusion", print_formula(st.conclusion)}};
    json params = json::object();
    if (st.params.term) params["term"] = print_term(*st.params.term);
    if (st.params.variables.size() == 1 && !st.params.term) params["var"] = st.params.variables.front();
    if (st.params.variables.size() > 1) params["vars"] = st.params.variables;
    if (!params.empty()) o["params"] = params;
    if (st.premises) o["premises"] = premises_to_json(*st.premises);
    steps.push_back(std::move(o));
  }
  return {{"theory", formulas_to_json(s.theory.sentences)},
          {"premises", premises_to_json(s.premises)},
          {"steps", steps},
          {"goal", s.goal},
          {"vocabulary", vocabulary_to_json(s.vocabulary)}};
}

ProofScript read_script_file(const std::string& path) { return script_from_json(read_json_file(path)); }

HilbertProof hilbert_from_json(const json& j) {
  Reader r(j);
  HilbertProof p;
  p.theory = r.theory(j);
  if (!j.contains("lines") || !j.at("lines").is_array()) throw FormatError("missing \"lines\" array");
  const json& lines = j.at("lines");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const json& l = lines[i];
    const std::string where = "lines[" + std::to_string(i) + "]";
    if (!l.is_object()) throw FormatError(where + ": expected an object");
    HilbertLine line;
    if (!l.contains("formula")) throw FormatError(where + ": missing \"formula\"");
    line.formula = r.formula(l.at("formula"), where + ".formula");
    line.by = text(l, "by", where);
    line.from = ids(l, where);
    if (l.contains("params") && l.at("params").contains("term"))
      line.term = r.term(l.at("params").at("term"), where + ".params.term");
    p.lines.push_back(std::move(line));
  }
  p.vocabulary = r.vocabulary();
  return p;
}

json hilbert_to_json(const HilbertProof& p) {
  json lines = json::array();
  for (const auto& l : p.lines) {
    json o = {{"formula", print_formula(l.formula)}, {"by", l.by}, {"from", l.from}};
    if (l.term) o["params"] = {{"term", print_term(*l.term)}};
    lines.push_back(std::move(o));
  }
  return {{"theory", formulas_to_json(p.theory.sentences)}, {"lines", lines}};
}

HilbertProof read_hilbert_file(const std::string& path) { return hilbert_from_json(read_json_file(path)); }

}  // namespace condlog
