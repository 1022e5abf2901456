#include "condlog/kernel.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>

#include "condlog/constructions.hpp"
#include "condlog/parse.hpp"
#include "condlog/substitution.hpp"

namespace condlog {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Premise: return "Premise";
    case Rule::REF: return "REF";
    case Rule::LLE: return "LLE";
    case Rule::RW: return "RW";
    case Rule::AND: return "AND";
    case Rule::OR: return "OR";
    case Rule::CM: return "CM";
    case Rule::LAX: return "Lambda-AX";
    case Rule::F1: return "F1";
    case Rule::F3: return "F3";
    case Rule::EQ: return "EQ";
    case Rule::REN: return "REN";
    case Rule::II: return "II";
    case Rule::INC: return "INC";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  std::string s(name);
  for (const char* suffix : {"^q", "+"})
    if (s.size() > std::strlen(suffix) && s.ends_with(suffix)) s.resize(s.size() - std::strlen(suffix));
  static const std::map<std::string, Rule> names = {
      {"Premise", Rule::Premise}, {"premise", Rule::Premise}, {"REF", Rule::REF},   {"LLE", Rule::LLE},
      {"RW", Rule::RW},           {"AND", Rule::AND},         {"OR", Rule::OR},     {"CM", Rule::CM},
      {"LAX", Rule::LAX},         {"Lambda-AX", Rule::LAX},   {"F1", Rule::F1},     {"F3", Rule::F3},
      {"EQ", Rule::EQ},           {"REN", Rule::REN},         {"II", Rule::II},     {"INC", Rule::INC},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const char* to_string(RuleErrorKind k) {
  switch (k) {
    case RuleErrorKind::UnknownRule: return "unknown-rule";
    case RuleErrorKind::Arity: return "arity";
    case RuleErrorKind::Shape: return "shape";
    case RuleErrorKind::ConclusionMismatch: return "conclusion-mismatch";
    case RuleErrorKind::PremiseMismatch: return "premise-mismatch";
    case RuleErrorKind::SideCondition: return "side-condition";
    case RuleErrorKind::NotInterpretationIndependent: return "not-interpretation-independent";
    case RuleErrorKind::Freshness: return "freshness";
    case RuleErrorKind::Level: return "level";
    case RuleErrorKind::Class: return "class";
  }
  return "?";
}

namespace {

bool same(const Formula& a, const Formula& b) { return alpha_equivalent(a, b); }

bool member(const std::vector<Formula>& set, const Formula& f) {
  return std::any_of(set.begin(), set.end(), [&](const Formula& g) { return same(f, g); });
}

// a minus b, up to alpha-equivalence.
std::vector<Formula> minus(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  for (const auto& f : a)
    if (!member(b, f)) out.push_back(f);
  return out;
}

bool set_equal(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  return minus(a, b).empty() && minus(b, a).empty();
}

}  // namespace

PremiseSet PremiseSet::of(std::span<const Formula> formulas) {
  PremiseSet p;
  for (const auto& f : formulas) p.add(f);
  return p;
}

void PremiseSet::add(const Formula& f) {
  auto& set = classify(f) == FormulaClass::FO ? fo : cond;
  if (!member(set, f)) set.push_back(f);
}

bool PremiseSet::contains(const Formula& f) const { return member(cond, f) || member(fo, f); }

std::vector<Formula> PremiseSet::all() const {
  std::vector<Formula> out = cond;
  out.insert(out.end(), fo.begin(), fo.end());
  return out;
}

bool operator==(const PremiseSet& a, const PremiseSet& b) { return set_equal(a.cond, b.cond) && set_equal(a.fo, b.fo); }

Level quant_level(Rule rule, std::span<const Level> in) {
  auto arity = [&](std::size_t n) {
    if (in.size() != n)
      throw RuleError(RuleErrorKind::Arity, std::string(rule_name(rule)) + " combines " + std::to_string(n) +
                                                " levels, got " + std::to_string(in.size()));
  };
  switch (rule) {
    case Rule::AND:
    case Rule::CM:
      arity(2);
      return capped(in[0].value() + in[1].value());
    case Rule::OR:
      arity(2);
      return capped(2 * std::max(in[0].value(), in[1].value()));
    case Rule::II:
      arity(2);
      return std::max(in[0], in[1]);
    case Rule::REF:
      arity(0);
      return Level::zero();
    case Rule::LLE:
    case Rule::RW:
    case Rule::F1:
    case Rule::F3:
    case Rule::EQ:
    case Rule::REN:
    case Rule::INC:
      arity(1);
      return in[0];
    default:
      throw RuleError(RuleErrorKind::Arity, std::string(rule_name(rule)) + " has no level combinator");
  }
}

namespace {

using E = RuleErrorKind;

[[noreturn]] void fail(E kind, const std::string& msg) { throw RuleError(kind, msg); }

std::string show(const Formula& f) { return print_formula(f); }

// Body conditional under a universal prefix, if any.
const Formula* inner_conditional(const Formula& f) {
  const Formula* cur = &f;
  while (cur->kind() == Formula::Kind::Forall) cur = &cur->body();
  return cur->is_conditional() ? cur : nullptr;
}

std::optional<Level> level_of(const Formula& f) {
  const Formula* c = inner_conditional(f);
  if (c && c->kind() == Formula::Kind::CondLevel) return c->level();
  return std::nullopt;
}

void check_class(const Judgment& j, System system, const std::string& what) {
  const FormulaClass universal = system == System::Qualitative ? FormulaClass::CondUniversal : FormulaClass::QuantUniversal;
  auto cond_ok = [&](const Formula& f) {
    const FormulaClass c = classify(f);
    return c == universal || (system == System::Qualitative && c == FormulaClass::CondClosed);
  };
  for (const auto& f : j.premises.cond)
    if (!cond_ok(f))
      fail(E::Class, what + ": premise " + show(f) + " is not a " +
                         (system == System::Qualitative ? "universal conditional" : "universal leveled conditional"));
  for (const auto& f : j.premises.fo)
    if (classify(f) != FormulaClass::FO) fail(E::Class, what + ": premise " + show(f) + " is not first-order");
  if (classify(j.conclusion) != FormulaClass::FO && !cond_ok(j.conclusion))
    fail(E::Class, what + ": " + show(j.conclusion) + " is not a formula of the " +
                       (system == System::Qualitative ? "qualitative" : "quantitative") + " system");
}

// The bare conditional a rule of system P works on.
const Formula& bare(const Judgment& j, Rule rule, const char* role) {
  const Formula& f = j.conclusion;
  if (!f.is_conditional())
    fail(E::Shape, std::string(rule_name(rule)) + " needs a conditional " + role + " without quantifier prefix, got " + show(f));
  return f;
}

Formula make_cond(const Formula& a, const Formula& b, const std::optional<Level>& level) {
  return level ? Formula::cond(a, b, *level) : Formula::cond(a, b);
}

class Discharger {
 public:
  Discharger(const Theory& theory, const CheckPolicy& policy) : theory_(theory), policy_(policy) {}

  Obligation run(std::string description, const std::vector<Formula>& hypotheses, const Formula& goal) {
    Obligation o{std::move(description), hypotheses, goal, OracleVerdict::Kind::Unknown, {}, false};
    std::string key;
    for (const auto& h : hypotheses) key += show(h) + "\n";
    key += "|- " + show(goal);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const OracleVerdict v = entails(theory_, hypotheses, goal, policy_.budget);
      it = cache_.emplace(key, std::make_pair(v.kind, v.detail)).first;
    }
    o.verdict = it->second.first;
    o.detail = it->second.second;
    o.assumed = o.verdict == OracleVerdict::Kind::Unknown && policy_.assume_side_conditions;
    return o;
  }

 private:
  const Theory& theory_;
  const CheckPolicy& policy_;
  std::map<std::string, std::pair<OracleVerdict::Kind, std::string>> cache_;
};

RuleResult apply_impl(Rule rule, std::span<const Judgment> inputs, const RuleParams& params, System system,
                      Discharger& oracle) {
  const bool quant = system == System::Quantitative;
  const std::string name = rule_name(rule);
  auto need = [&](std::size_t n) {
    if (inputs.size() != n)
      fail(E::Arity, name + " takes " + std::to_string(n) + " input judgment" + (n == 1 ? "" : "s") + ", got " +
                         std::to_string(inputs.size()));
  };
  auto target = [&]() -> const Judgment& {
    if (!params.target) fail(E::Shape, name + " needs the claimed conclusion");
    return *params.target;
  };
  for (std::size_t i = 0; i < inputs.size(); ++i) check_class(inputs[i], system, "input " + std::to_string(i + 1));
  if (params.target) check_class(*params.target, system, "conclusion");
  if (rule == Rule::INC && !quant) fail(E::UnknownRule, "INC belongs to the quantitative system");

  auto input_level = [&](const Formula& c) -> std::optional<Level> {
    if (!quant) return std::nullopt;
    if (c.kind() != Formula::Kind::CondLevel) fail(E::Level, "conditional without a level: " + show(c));
    return c.level();
  };
  auto same_premises = [&]() {
    for (std::size_t i = 1; i < inputs.size(); ++i)
      if (!(inputs[i].premises == inputs[0].premises))
        fail(E::PremiseMismatch, name + " needs the same premise set in all inputs");
  };

  RuleResult result;
  std::vector<std::pair<std::string, Formula>> side;  // description, goal over Delta_fo
  const PremiseSet* side_premises = nullptr;

  switch (rule) {
    case Rule::Premise: {
      need(0);
      const Judgment& t = target();
      const auto claimed = level_of(t.conclusion);
      bool found = false;
      for (const auto& p : t.premises.all()) {
        if (!alpha_equivalent(p, t.conclusion, quant)) continue;
        const auto pl = level_of(p);
        if (!pl || (claimed && *pl <= *claimed)) found = true;
      }
      if (!found) fail(E::PremiseMismatch, show(t.conclusion) + " is not among the premises");
      result.conclusion = t;
      break;
    }
    case Rule::REF: {
      need(0);
      const Judgment& t = target();
      const Formula& c = bare(t, rule, "conclusion");
      if (!same(c.antecedent(), c.consequent())) fail(E::Shape, "REF concludes phi ~> phi, got " + show(c));
      input_level(c);
      result.conclusion = {t.premises, make_cond(c.antecedent(), c.consequent(), quant ? std::optional(Level::zero()) : std::nullopt)};
      break;
    }
    case Rule::LAX: {
      need(0);
      const Judgment& t = target();
      if (classify(t.conclusion) != FormulaClass::FO)
        fail(E::Class, "Lambda-AX concludes first-order formulas only, got " + show(t.conclusion));
      result.conclusion = t;
      side.emplace_back("Lambda-AX", t.conclusion);
      side_premises = &t.premises;
      break;
    }
    case Rule::LLE:
    case Rule::RW: {
      need(1);
      const Formula& c = bare(inputs[0], rule, "input");
      const Formula& tc = bare(target(), rule, "conclusion");
      const auto level = input_level(c);
      if (rule == Rule::LLE) {
        if (!same(c.consequent(), tc.consequent()))
          fail(E::ConclusionMismatch, "LLE keeps the consequent " + show(c.consequent()));
        side.emplace_back("LLE equivalence", Formula::equivalence(c.antecedent(), tc.antecedent()));
        result.conclusion = {inputs[0].premises, make_cond(tc.antecedent(), c.consequent(), level)};
      } else {
        if (!same(c.antecedent(), tc.antecedent()))
          fail(E::ConclusionMismatch, "RW keeps the antecedent " + show(c.antecedent()));
        side.emplace_back("RW implication", Formula::implication(c.consequent(), tc.consequent()));
        result.conclusion = {inputs[0].premises, make_cond(c.antecedent(), tc.consequent(), level)};
      }
      side_premises = &inputs[0].premises;
      break;
    }
    case Rule::AND:
    case Rule::OR:
    case Rule::CM: {
      need(2);
      const Formula& a = bare(inputs[0], rule, "input");
      const Formula& b = bare(inputs[1], rule, "input");
      std::optional<Level> level;
      if (quant) {
        const Level ls[] = {*input_level(a), *input_level(b)};
        level = quant_level(rule, ls);
      }
      same_premises();
      if (rule == Rule::OR) {
        if (!same(a.consequent(), b.consequent())) fail(E::Shape, "OR needs a common consequent");
        result.conclusion = {inputs[0].premises,
                             make_cond(Formula::disjunction(a.antecedent(), b.antecedent()), a.consequent(), level)};
      } else {
        if (!same(a.antecedent(), b.antecedent())) fail(E::Shape, name + " needs a common antecedent");
        result.conclusion = {inputs[0].premises,
                             rule == Rule::AND
                                 ? make_cond(a.antecedent(), Formula::conjunction(a.consequent(), b.consequent()), level)
                                 : make_cond(Formula::conjunction(a.antecedent(), a.consequent()), b.consequent(), level)};
      }
      break;
    }
    case Rule::F1: {
      need(1);
      const Formula& in = inputs[0].conclusion;
      if (in.kind() != Formula::Kind::Forall) fail(E::Shape, "F1 instantiates a universal formula, got " + show(in));
      const std::string& x = in.variable();
      std::string z;
      if (!params.variables.empty()) {
        z = params.variables.front();
      } else {
        const auto m = match_instance(in.body(), x, target().conclusion);
        if (!m) fail(E::ConclusionMismatch, show(target().conclusion) + " is not an instance of " + show(in));
        if (!m->is_variable()) fail(E::Shape, "F1 instantiates with a variable, not " + print_term(*m));
        z = m->name();
      }
      if (z != x && variables(in.body()).count(z))
        fail(E::Freshness, "F1: variable " + z + " already appears in " + show(in.body()));
      result.conclusion = {inputs[0].premises, substitute(in.body(), x, Term::variable(z))};
      break;
    }
    case Rule::F3: {
      need(1);
      std::string x;
      if (!params.variables.empty())
        x = params.variables.front();
      else if (target().conclusion.kind() == Formula::Kind::Forall)
        x = target().conclusion.variable();
      else
        fail(E::Shape, "F3 concludes a universal formula");
      for (const auto& f : inputs[0].premises.all())
        if (occurs_free(f, x)) fail(E::Freshness, "F3: " + x + " is free in the premise " + show(f));
      result.conclusion = {inputs[0].premises, Formula::forall(x, inputs[0].conclusion)};
      break;
    }
    case Rule::REN: {
      need(1);
      const auto [in_vars, in_body] = strip_universal(inputs[0].conclusion);
      std::vector<std::string> ys = params.variables;
      if (ys.empty()) {
        const auto tvars = strip_universal(target().conclusion).first;
        if (tvars.size() < in_vars.size()) fail(E::Shape, "REN keeps the length of the universal prefix");
        ys.assign(tvars.begin(), tvars.begin() + static_cast<long>(in_vars.size()));
      }
      if (ys.empty() || ys.size() > in_vars.size()) fail(E::Shape, "REN renames a nonempty universal prefix");
      const std::vector<std::string> xs(in_vars.begin(), in_vars.begin() + static_cast<long>(ys.size()));
      const std::vector<std::string> rest(in_vars.begin() + static_cast<long>(ys.size()), in_vars.end());
      const Formula body = add_universal(rest, in_body);
      const auto used = variables(body);
      std::map<std::string, Term> sigma;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if (std::count(ys.begin(), ys.end(), ys[i]) > 1) fail(E::Freshness, "REN: " + ys[i] + " used twice");
        if (ys[i] != xs[i] && used.count(ys[i])) fail(E::Freshness, "REN: " + ys[i] + " already appears in " + show(body));
        sigma.emplace(xs[i], Term::variable(ys[i]));
      }
      result.conclusion = {inputs[0].premises, add_universal(ys, substitute(body, sigma))};
      break;
    }
    case Rule::EQ: {
      need(1);
      const Judgment& t = target();
      if (!set_equal(inputs[0].premises.cond, t.premises.cond))
        fail(E::PremiseMismatch, "EQ leaves the conditional premises unchanged");
      const auto added = minus(t.premises.fo, inputs[0].premises.fo);
      const auto removed = minus(inputs[0].premises.fo, t.premises.fo);
      if (added.size() != 1 || added[0].kind() != Formula::Kind::Exists || removed.size() != 1 ||
          !same(removed[0], added[0].body()))
        fail(E::PremiseMismatch, "EQ replaces one premise sigma by exists x sigma");
      const std::string& x = added[0].variable();
      for (const auto& f : t.premises.all())
        if (!same(f, added[0]) && occurs_free(f, x)) fail(E::Freshness, "EQ: " + x + " is free in the premise " + show(f));
      if (occurs_free(inputs[0].conclusion, x)) fail(E::Freshness, "EQ: " + x + " is free in the conclusion");
      result.conclusion = {t.premises, inputs[0].conclusion};
      break;
    }
    case Rule::II: {
      need(2);
      const Judgment& t = target();
      const Formula& c1 = inputs[0].conclusion;
      const Formula& c2 = inputs[1].conclusion;
      if (!alpha_equivalent(c1, c2, quant)) fail(E::Shape, "II needs the same conclusion in both cases");
      for (const auto* in : {&inputs[0], &inputs[1]})
        if (!set_equal(in->premises.cond, t.premises.cond))
          fail(E::PremiseMismatch, "II leaves the conditional premises unchanged");
      std::optional<Formula> split;
      for (const auto& d : t.premises.fo) {
        if (d.kind() != Formula::Kind::Or) continue;
        std::vector<Formula> rest;
        for (const auto& f : t.premises.fo)
          if (!same(f, d)) rest.push_back(f);
        auto with = [&](const Formula& s) {
          auto r = rest;
          if (!member(r, s)) r.push_back(s);
          return r;
        };
        if (set_equal(inputs[0].premises.fo, with(d.lhs())) && set_equal(inputs[1].premises.fo, with(d.rhs()))) {
          split = d;
          break;
        }
      }
      if (!split) fail(E::PremiseMismatch, "II joins premise sets D + {s1} and D + {s2} into D + {s1 | s2}");
      for (const Formula& s : {split->lhs(), split->rhs()})
        if (!is_interpretation_independent(s))
          fail(E::NotInterpretationIndependent, "II: " + show(s) + " is not interpretation-independent");
      Formula conclusion = c1;
      if (quant) {
        const auto l1 = level_of(c1), l2 = level_of(c2);
        if (l1 && l2) conclusion = with_level(c1, std::max(*l1, *l2));
      }
      result.conclusion = {t.premises, conclusion};
      break;
    }
    case Rule::INC: {
      need(1);
      const Judgment& t = target();
      if (!alpha_equivalent(inputs[0].conclusion, t.conclusion, true))
        fail(E::ConclusionMismatch, "INC changes only the level");
      const auto from = level_of(inputs[0].conclusion), to = level_of(t.conclusion);
      if (!from || !to) fail(E::Level, "INC needs leveled conditionals");
      if (*to < *from) fail(E::Level, "INC only weakens: " + to->to_string() + " < " + from->to_string());
      result.conclusion = {inputs[0].premises, t.conclusion};
      break;
    }
  }

  if (params.target) {
    const Judgment& t = *params.target;
    if (!(result.conclusion.premises == t.premises))
      fail(E::PremiseMismatch, name + " yields a different premise set than claimed");
    if (!alpha_equivalent(result.conclusion.conclusion, t.conclusion, quant))
      fail(E::ConclusionMismatch, name + " yields " + show(result.conclusion.conclusion) + ", claimed " + show(t.conclusion));
    if (quant) {
      const auto derived = level_of(result.conclusion.conclusion), claimed = level_of(t.conclusion);
      if (derived && claimed && *claimed < *derived)
        fail(E::Level, name + " supports level " + derived->to_string() + " at best, claimed " + claimed->to_string());
      if (derived && !claimed) fail(E::Level, "claimed conclusion lacks a level");
    }
    result.conclusion = t;
  }

  if (side_premises) {
    bool failed = false;
    std::string why;
    for (const auto& [description, goal] : side) {
      Obligation o = oracle.run(description, side_premises->fo, goal);
      if (!o.ok() && !failed) {
        failed = true;
        why = description + " " + show(goal) + ": " + to_string(o.verdict) + (o.detail.empty() ? "" : " (" + o.detail + ")");
      }
      result.obligations.push_back(std::move(o));
    }
    if (failed) throw RuleError(E::SideCondition, "side condition not established: " + why, result.obligations);
  }
  return result;
}

}  // namespace

RuleResult apply_rule(Rule rule, std::span<const Judgment> inputs, const RuleParams& params, const Theory& theory,
                      System system, const CheckPolicy& policy) {
  Discharger oracle(theory, policy);
  return apply_impl(rule, inputs, params, system, oracle);
}

const StepVerdict* CheckReport::first_failure() const {
  for (const auto& s : steps)
    if (!s.ok) return &s;
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& s : steps) {
    out += "step " + std::to_string(s.id) + " " + s.rule + ": ";
    if (s.ok)
      out += "OK";
    else
      out += std::string("FAILED") + (s.error ? " [" + std::string(to_string(*s.error)) + "]" : "") + " " + s.message;
    out += "\n";
    for (const auto& o : s.obligations)
      out += "  " + o.description + ": " + print_formula(o.goal) + " -- " + to_string(o.verdict) +
             (o.assumed ? " (assumed)" : "") + "\n";
  }
  for (const auto& e : script_errors) out += "error: " + e + "\n";
  for (const auto& a : assumptions) out += "assumption: " + a + "\n";
  out += accepted ? "accepted\n" : "rejected\n";
  return out;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json obligations = nlohmann::json::array();
    for (const auto& o : s.obligations) {
      std::vector<std::string> hyps;
      for (const auto& h : o.hypotheses) hyps.push_back(print_formula(h));
      obligations.push_back({{"description", o.description},
                             {"hypotheses", hyps},
                             {"goal", print_formula(o.goal)},
                             {"verdict", to_string(o.verdict)},
                             {"detail", o.detail},
                             {"assumed", o.assumed}});
    }
    nlohmann::json j = {{"id", s.id}, {"rule", s.rule}, {"ok", s.ok}, {"obligations", obligations}};
    if (!s.ok) {
      j["message"] = s.message;
      if (s.error) j["error"] = to_string(*s.error);
    }
    steps_json.push_back(std::move(j));
  }
  return {{"accepted", accepted}, {"steps", steps_json}, {"errors", script_errors}, {"assumptions", assumptions}};
}

CheckReport check_script(const ProofScript& script, System system, const CheckPolicy& policy) {
  CheckReport report;
  Discharger oracle(script.theory, policy);
  std::map<int, const ProofStep*> seen;

  for (const auto& step : script.steps) {
    StepVerdict v;
    v.id = step.id;
    v.rule = step.rule;
    auto judgment_of = [&](const ProofStep& s) { return Judgment{s.premises.value_or(script.premises), s.conclusion}; };
    try {
      if (seen.count(step.id)) throw RuleError(E::Shape, "duplicate step id " + std::to_string(step.id));
      const auto rule = parse_rule(step.rule);
      if (!rule) throw RuleError(E::UnknownRule, "unknown rule " + step.rule);
      std::vector<Judgment> inputs;
      for (int id : step.from) {
        auto it = seen.find(id);
        if (it == seen.end()) throw RuleError(E::Shape, "step " + std::to_string(id) + " is not an earlier step");
        inputs.push_back(judgment_of(*it->second));
      }
      RuleParams params = step.params;
      params.target = judgment_of(step);
      RuleResult r = apply_impl(*rule, inputs, params, system, oracle);
      v.ok = true;
      v.obligations = std::move(r.obligations);
      for (const auto& o : v.obligations)
        if (o.assumed)
          report.assumptions.push_back("step " + std::to_string(step.id) + ": " + o.description + " " +
                                       print_formula(o.goal));
    } catch (const RuleError& e) {
      v.ok = false;
      v.error = e.kind();
      v.message = e.what();
      v.obligations = e.obligations();
    } catch (const std::exception& e) {
      v.ok = false;
      v.error = E::Shape;
      v.message = e.what();
    }
    seen.emplace(step.id, &step);
    report.steps.push_back(std::move(v));
  }

  auto goal = seen.find(script.goal);
  if (goal == seen.end())
    report.script_errors.push_back("goal step " + std::to_string(script.goal) + " does not exist");
  else if (!(goal->second->premises.value_or(script.premises) == script.premises))
    report.script_errors.push_back("goal step does not use the script's premises");

  report.accepted = report.script_errors.empty() &&
                    std::all_of(report.steps.begin(), report.steps.end(), [](const StepVerdict& s) { return s.ok; });
  return report;
}

CheckReport check_proof(const ProofScript& script, const CheckPolicy& policy) {
  return check_script(script, System::Qualitative, policy);
}

CheckReport check_quant_proof(const ProofScript& script, const CheckPolicy& policy) {
  return check_script(script, System::Quantitative, policy);
}

}  // namespace condlog
