#include "condlog/eval.hpp"

#include "condlog/parse.hpp"

namespace condlog {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Limit: return "limit";
    case Mode::SP: return "sp";
    case Mode::AsWritten: return "level";
  }
  return "?";
}

namespace {

Element eval_term(const PSStructure& m, const Valuation& v, const World& w, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = v.find(t.name());
      if (it == v.end()) throw EvalError("variable " + t.name() + " has no value");
      return it->second;
    }
    case Term::Kind::Constant: {
      auto it = w.interp.constants.find(t.name());
      if (it == w.interp.constants.end())
        throw EvalError("constant " + t.name() + " has no denotation in world " + w.name);
      return it->second;
    }
    case Term::Kind::Apply: {
      Tuple args;
      for (const auto& a : t.args()) args.push_back(eval_term(m, v, w, a));
      auto fit = w.interp.functions.find(t.name());
      if (fit == w.interp.functions.end())
        throw EvalError("function " + t.name() + " has no table in world " + w.name);
      auto it = fit->second.find(args);
      if (it == fit->second.end()) throw EvalError("function " + t.name() + " undefined on an argument in world " + w.name);
      return it->second;
    }
  }
  return 0;
}

class Evaluator {
 public:
  Evaluator(const PSStructure& m, Mode mode, bool allow_conditionals)
      : m_(m), mode_(mode), allow_conditionals_(allow_conditionals) {}

  bool eval(Valuation& v, std::size_t wi, const Formula& f) {
    using K = Formula::Kind;
    const World& w = m_.worlds[wi];
    switch (f.kind()) {
      case K::True: return true;
      case K::False: return false;
      case K::Atom: {
        Tuple args;
        for (const auto& a : f.args()) args.push_back(eval_term(m_, v, w, a));
        auto it = w.interp.predicates.find(f.predicate());
        return it != w.interp.predicates.end() && it->second.count(args) > 0;
      }
      case K::Equal: return eval_term(m_, v, w, f.args()[0]) == eval_term(m_, v, w, f.args()[1]);
      case K::Not: return !eval(v, wi, f.operand());
      case K::And: return eval(v, wi, f.lhs()) && eval(v, wi, f.rhs());
      case K::Or: return eval(v, wi, f.lhs()) || eval(v, wi, f.rhs());
      case K::Implies: return !eval(v, wi, f.lhs()) || eval(v, wi, f.rhs());
      case K::Iff: return eval(v, wi, f.lhs()) == eval(v, wi, f.rhs());
      case K::Forall:
      case K::Exists: {
        const bool universal = f.kind() == K::Forall;
        auto saved = v.find(f.variable()) == v.end() ? std::optional<Element>() : std::optional<Element>(v[f.variable()]);
        bool result = universal;
        for (Element d = 0; d < m_.domain_size(); ++d) {
          v[f.variable()] = d;
          if (eval(v, wi, f.body()) != universal) {
            result = !universal;
            break;
          }
        }
        if (saved)
          v[f.variable()] = *saved;
        else
          v.erase(f.variable());
        return result;
      }
      case K::Cond:
      case K::CondLevel:
        if (!allow_conditionals_) throw EvalError("conditional in a first-order position: " + print_formula(f));
        return conditional(v, f).value;
    }
    return false;
  }

  // World-independent: consults only extensions and weights.
  CondVerdict conditional(Valuation& v, const Formula& f) {
    std::optional<Level> level;
    if (f.kind() == Formula::Kind::CondLevel) {
      if (mode_ != Mode::AsWritten)
        throw EvalError("leveled conditional evaluated in " + std::string(to_string(mode_)) + " mode");
      level = f.level();
    } else if (mode_ == Mode::AsWritten) {
      throw EvalError("unleveled conditional evaluated in level mode");
    }
    CondProb p;
    for (std::size_t i = 0; i < m_.worlds.size(); ++i) {
      if (!eval(v, i, f.antecedent())) continue;
      p.denominator += m_.worlds[i].weight;
      if (eval(v, i, f.consequent())) p.numerator += m_.worlds[i].weight;
    }
    return eval_conditional(p, mode_, level);
  }

 private:
  const PSStructure& m_;
  Mode mode_;
  bool allow_conditionals_;
};

}  // namespace

bool eval_fo(const PSStructure& m, const Valuation& v, std::size_t world, const Formula& f) {
  if (world >= m.worlds.size()) throw EvalError("world index out of range");
  Valuation copy = v;
  return Evaluator(m, Mode::Limit, false).eval(copy, world, f);
}

std::vector<std::size_t> extension(const PSStructure& m, const Valuation& v, const Formula& f) {
  std::vector<std::size_t> out;
  Valuation copy = v;
  Evaluator e(m, Mode::Limit, false);
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    if (e.eval(copy, i, f)) out.push_back(i);
  return out;
}

Rational CondProb::at(std::uint64_t n) const {
  const Rational den = denominator.evaluate(n);
  if (den == 0) return 1;
  return numerator.evaluate(n) / den;
}

CondProb cond_prob(const PSStructure& m, const Valuation& v, const Formula& antecedent, const Formula& consequent) {
  CondProb p;
  Valuation copy = v;
  Evaluator e(m, Mode::Limit, false);
  for (std::size_t i = 0; i < m.worlds.size(); ++i) {
    if (!e.eval(copy, i, antecedent)) continue;
    p.denominator += m.worlds[i].weight;
    if (e.eval(copy, i, consequent)) p.numerator += m.worlds[i].weight;
  }
  return p;
}

CondVerdict eval_conditional(const CondProb& p, Mode mode, const std::optional<Level>& level) {
  if (mode == Mode::AsWritten) {
    if (!level) throw EvalError("unleveled conditional evaluated in level mode");
    if (p.denominator.is_zero()) return {true, 0};
    const auto c = compare_eventually(p.numerator, ExpPoly(1 - level->value()) * p.denominator);
    return {c.verdict != EventualComparison::Verdict::LT, c.witness_n0};
  }
  if (level) throw EvalError("leveled conditional evaluated in " + std::string(to_string(mode)) + " mode");
  const ExpPoly deficit = p.denominator - p.numerator;
  if (deficit.is_zero() || p.denominator.is_zero()) return {true, std::nullopt};
  const ExpTerm& d = deficit.leading();
  const ExpTerm& q = p.denominator.leading();
  if (mode == Mode::Limit) return {compare_growth(d, q) < 0, std::nullopt};
  return {d.base < q.base, std::nullopt};
}

bool holds(const PSStructure& m, const Valuation& v, const Formula& f, Mode mode) {
  Valuation copy = v;
  Evaluator e(m, mode, true);
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    if (!e.eval(copy, i, f)) return false;
  return true;
}

CondVerdict evaluate(const PSStructure& m, const Valuation& v, const Formula& f, Mode mode) {
  if (f.is_conditional()) {
    Valuation copy = v;
    return Evaluator(m, mode, true).conditional(copy, f);
  }
  return {holds(m, v, f, mode), std::nullopt};
}

}  // namespace condlog
