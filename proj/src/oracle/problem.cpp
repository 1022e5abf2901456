#include <set>

#include "condlog/constructions.hpp"
#include "condlog/substitution.hpp"
#include "oracle/internal.hpp"

namespace condlog::oracle {

Problem make_problem(const Theory& theory, std::span<const Formula> premises, const Formula& goal) {
  if (classify(goal) != FormulaClass::FO) throw std::invalid_argument("oracle goal must be first-order");
  for (const auto& p : premises)
    if (classify(p) != FormulaClass::FO) throw std::invalid_argument("oracle premises must be first-order");

  std::set<std::string> fv = free_variables(goal);
  for (const auto& p : premises)
    for (const auto& x : free_variables(p)) fv.insert(x);
  std::map<std::string, Term> sigma;
  Problem out;
  for (const auto& x : fv) {
    sigma.emplace(x, Term::constant("$" + x));
    out.free_vars.push_back(x);
  }
  out.hypotheses = theory.sentences;
  for (const auto& p : premises) out.hypotheses.push_back(substitute(p, sigma));
  out.goal = substitute(goal, sigma);
  out.vocab = Vocabulary::of(out.goal);
  for (const auto& h : out.hypotheses) out.vocab.merge(Vocabulary::of(h));
  for (const auto& x : fv) out.vocab.declare_constant("$" + x);
  return out;
}

Countermodel to_countermodel(const Problem& p, PSStructure m) {
  Valuation v;
  for (const auto& x : p.free_vars) {
    auto& consts = m.worlds.at(0).interp.constants;
    auto it = consts.find("$" + x);
    v[x] = it == consts.end() ? 0 : it->second;
    if (it != consts.end()) consts.erase(it);
  }
  return {std::move(m), std::move(v)};
}

}  // namespace condlog::oracle
