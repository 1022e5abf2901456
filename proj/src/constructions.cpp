#include "condlog/constructions.hpp"

#include <stdexcept>

#include "condlog/substitution.hpp"

namespace condlog {

const char* to_string(FormulaClass c) {
  switch (c) {
    case FormulaClass::FO: return "FO";
    case FormulaClass::CondClosed: return "CondClosed";
    case FormulaClass::CondUniversal: return "CondUniversal";
    case FormulaClass::Full: return "Full";
    case FormulaClass::QuantUniversal: return "QuantUniversal";
  }
  return "?";
}

std::pair<std::vector<std::string>, Formula> strip_universal(const Formula& f) {
  std::vector<std::string> vars;
  const Formula* cur = &f;
  while (cur->kind() == Formula::Kind::Forall) {
    vars.push_back(cur->variable());
    cur = &cur->body();
  }
  return {vars, *cur};
}

Formula add_universal(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, std::move(body));
  return body;
}

FormulaClass classify(const Formula& f) {
  if (!contains_conditional(f)) return FormulaClass::FO;
  const auto [vars, body] = strip_universal(f);
  if (!body.is_conditional() || contains_conditional(body.antecedent()) || contains_conditional(body.consequent()))
    return FormulaClass::Full;
  if (body.kind() == Formula::Kind::CondLevel) return FormulaClass::QuantUniversal;
  if (vars.empty() && free_variables(body).empty()) return FormulaClass::CondClosed;
  return FormulaClass::CondUniversal;
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::truth();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::conjunction(out, parts[i]);
  return out;
}

Formula dist_formula(int k) {
  if (k < 1) throw std::invalid_argument("dist_formula needs k >= 1");
  std::vector<std::string> xs;
  for (int i = 1; i <= k; ++i) xs.push_back("x" + std::to_string(i));
  std::vector<Formula> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      pairs.push_back(Formula::negation(Formula::equal(Term::variable(xs[i]), Term::variable(xs[j]))));
  Formula body = conjoin(pairs);
  for (int i = k - 1; i >= 0; --i) body = Formula::exists(xs[i], body);
  return body;
}

bool is_interpretation_independent(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Cond:
    case K::CondLevel:
      return false;
    case K::Equal:
      return f.args()[0].is_variable() && f.args()[1].is_variable();
    default:
      for (const auto& c : f.children())
        if (!is_interpretation_independent(c)) return false;
      return true;
  }
}

namespace {

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
void partitions(std::size_t n, std::vector<int>& block, int max_block, std::vector<std::vector<int>>& out) {
  if (block.size() == n) {
    out.push_back(block);
    return;
  }
  for (int b = 0; b <= max_block + 1; ++b) {
    block.push_back(b);
    partitions(n, block, std::max(max_block, b), out);
    block.pop_back();
  }
}

}  // namespace

std::vector<Formula> equality_statements(const std::vector<std::string>& vars) {
  if (vars.empty()) throw std::invalid_argument("equality_statements needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("equality_statements needs distinct variables");
  std::vector<std::vector<int>> all;
  std::vector<int> block;
  partitions(vars.size(), block, -1, all);
  std::vector<Formula> out;
  for (const auto& p : all) {
    std::vector<Formula> conj;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        Formula eq = Formula::equal(Term::variable(vars[i]), Term::variable(vars[j]));
        conj.push_back(p[i] == p[j] ? eq : Formula::negation(eq));
      }
    out.push_back(conjoin(conj));
  }
  return out;
}

}  // namespace condlog
