#include "condlog/compiler.hpp"

#include <set>

#include "condlog/constructions.hpp"
#include "condlog/parse.hpp"
#include "condlog/script_io.hpp"
#include "condlog/substitution.hpp"

namespace condlog {

Rational SplitPolicy::weight(int step) const {
  auto it = weights.find(step);
  return it == weights.end() ? default_weight : it->second;
}

namespace {

Rational weight_value(const nlohmann::json& j, const std::string& where) {
  Rational w;
  try {
    if (j.is_string())
      w = parse_rational(j.get<std::string>());
    else if (j.is_number_integer())
      w = Rational(j.get<long>());
    else
      throw CompileError(where + ": weight must be a string such as \"1/3\"");
  } catch (const std::invalid_argument& e) {
    throw CompileError(where + ": " + e.what());
  }
  if (w <= 0 || w >= 1) throw CompileError(where + ": weight " + to_string(w) + " is not strictly between 0 and 1");
  return w;
}

}  // namespace

SplitPolicy split_policy_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw CompileError("weights: expected an object");
  SplitPolicy p;
  for (const auto& [key, value] : j.items()) {
    if (key == "default") {
      p.default_weight = weight_value(value, "weights.default");
    } else if (key == "steps") {
      if (!value.is_object()) throw CompileError("weights.steps: expected an object");
      for (const auto& [id, w] : value.items()) {
        int step = 0;
        try {
          std::size_t used = 0;
          step = std::stoi(id, &used);
          if (used != id.size()) throw std::invalid_argument(id);
        } catch (const std::exception&) {
          throw CompileError("weights.steps: \"" + id + "\" is not a step id");
        }
        p.weights[step] = weight_value(w, "weights.steps." + id);
      }
    } else {
      throw CompileError("weights: unknown key \"" + key + "\"");
    }
  }
  return p;
}

nlohmann::json CompileResult::to_json() const {
  nlohmann::json inst = nlohmann::json::array();
  for (const auto& [f, l] : instantiation) inst.push_back({{"premise", print_formula(f)}, {"level", l.to_string()}});
  return {{"instantiation", inst}, {"script", script_to_json(script)}};
}

CompileResult compile(const ProofScript& proof, const Level& target, const SplitPolicy& split, const CheckPolicy& policy) {
  for (const auto& [id, w] : split.weights)
    if (w <= 0 || w >= 1) throw CompileError("split weight for step " + std::to_string(id) + " is not strictly between 0 and 1");
  if (split.default_weight <= 0 || split.default_weight >= 1) throw CompileError("default split weight out of range");

  const CheckReport report = check_proof(proof, policy);
  if (!report.accepted) {
    std::string why = "input derivation is rejected";
    if (const auto* s = report.first_failure()) why += " at step " + std::to_string(s->id) + ": " + s->message;
    else if (!report.script_errors.empty()) why += ": " + report.script_errors.front();
    throw CompileError(why);
  }

  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) index[proof.steps[i].id] = i;

  CompileResult out;
  auto ask = [&](int id, const Rational& b) {
    auto [it, fresh] = out.budgets.emplace(id, b);
    if (!fresh && b < it->second) it->second = b;
  };
  ask(proof.goal, target.value());

  // Inputs always precede their consumers, so one reverse sweep settles every budget.
  for (std::size_t i = proof.steps.size(); i-- > 0;) {
    const ProofStep& step = proof.steps[i];
    auto it = out.budgets.find(step.id);
    if (it == out.budgets.end()) continue;
    const Rational b = it->second;
    const Rule rule = *parse_rule(step.rule);
    switch (rule) {
      case Rule::AND:
      case Rule::CM: {
        const Rational w = split.weight(step.id);
        const Rational s1 = w * b, s2 = b - s1;
        out.splits[step.id] = {s1, s2};
        ask(step.from.at(0), s1);
        ask(step.from.at(1), s2);
        break;
      }
      case Rule::OR:
        for (int id : step.from) ask(id, b / 2);
        break;
      default:  // II, and every single-input rule, pass the whole budget on
        for (int id : step.from) ask(id, b);
    }
  }

  // Levels of the conditional premises: the strongest any Premise step needs.
  std::vector<Formula> conds = proof.premises.cond;
  for (const auto& step : proof.steps)
    if (step.premises)
      for (const auto& f : step.premises->cond)
        if (std::none_of(conds.begin(), conds.end(), [&](const Formula& g) { return alpha_equivalent(f, g); }))
          conds.push_back(f);
  std::vector<Level> levels(conds.size(), Level::one());
  for (const auto& step : proof.steps) {
    auto it = out.budgets.find(step.id);
    if (it == out.budgets.end() || *parse_rule(step.rule) != Rule::Premise) continue;
    for (std::size_t k = 0; k < conds.size(); ++k)
      if (alpha_equivalent(conds[k], step.conclusion)) levels[k] = std::min(levels[k], capped(it->second));
  }
  auto leveled = [&](const Formula& f) {
    for (std::size_t k = 0; k < conds.size(); ++k)
      if (alpha_equivalent(conds[k], f)) return with_level(f, levels[k]);
    return with_level(f, Level::one());
  };
  auto lift = [&](const PremiseSet& p) {
    PremiseSet q;
    for (const auto& f : p.cond) q.add(leveled(f));
    for (const auto& f : p.fo) q.add(f);
    return q;
  };
  for (std::size_t k = 0; k < conds.size(); ++k) out.instantiation.emplace_back(conds[k], levels[k]);

  ProofScript& q = out.script;
  q.theory = proof.theory;
  q.premises = lift(proof.premises);
  q.goal = proof.goal;
  q.vocabulary = proof.vocabulary;
  for (const auto& step : proof.steps) {
    auto it = out.budgets.find(step.id);
    if (it == out.budgets.end()) continue;
    ProofStep s = step;
    if (classify(s.conclusion) != FormulaClass::FO) s.conclusion = with_level(s.conclusion, capped(it->second));
    if (s.premises) s.premises = lift(*s.premises);
    q.steps.push_back(std::move(s));
  }
  return out;
}

}  // namespace condlog
