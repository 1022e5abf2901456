#include "condlog/eval.hpp"
#include "oracle/internal.hpp"

namespace condlog {

const char* to_string(OracleVerdict::Kind k) {
  switch (k) {
    case OracleVerdict::Kind::Proved: return "proved";
    case OracleVerdict::Kind::Refuted: return "refuted";
    case OracleVerdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Re-checks a candidate countermodel with the structure evaluator.
bool confirms(const Theory& theory, std::span<const Formula> premises, const Formula& goal, const Countermodel& cm) {
  try {
    for (const auto& s : theory.sentences)
      if (!eval_fo(cm.structure, cm.valuation, 0, s)) return false;
    for (const auto& p : premises)
      if (!eval_fo(cm.structure, cm.valuation, 0, p)) return false;
    return !eval_fo(cm.structure, cm.valuation, 0, goal);
  } catch (const EvalError&) {
    return false;
  }
}

}  // namespace

OracleVerdict entails(const Theory& theory, std::span<const Formula> premises, const Formula& goal,
                      const OracleBudget& budget) {
  using oracle::Outcome;
  const oracle::Problem problem = oracle::make_problem(theory, premises, goal);

  Formula hyp = Formula::truth();
  for (const auto& h : problem.hypotheses) hyp = Formula::conjunction(hyp, h);
  if (auto taut = oracle::propositional_validity(Formula::implication(hyp, problem.goal), 24); taut && *taut)
    return {OracleVerdict::Kind::Proved, std::nullopt, "propositional tautology"};

  auto refuted = [&](PSStructure m, const std::string& how) -> std::optional<OracleVerdict> {
    Countermodel cm = oracle::to_countermodel(problem, std::move(m));
    if (!confirms(theory, premises, goal, cm)) return std::nullopt;
    return OracleVerdict{OracleVerdict::Kind::Refuted, std::move(cm), how};
  };

  const auto ground = oracle::decide_ground(problem, budget.max_model_size);
  if (ground.outcome == Outcome::Proved) return {OracleVerdict::Kind::Proved, std::nullopt, ground.detail};
  if (ground.outcome == Outcome::Refuted)
    if (auto v = refuted(*ground.model, ground.detail)) return *v;

  std::vector<Formula> sentences = problem.hypotheses;
  sentences.push_back(Formula::negation(problem.goal));
  const std::uint64_t nodes = static_cast<std::uint64_t>(budget.max_steps) * 50;
  const int quick = std::min(2, budget.max_model_size);
  if (auto m = oracle::find_model(sentences, problem.vocab, 1, quick, nodes))
    if (auto v = refuted(*m, "finite countermodel")) return *v;

  const auto res = oracle::refute_by_resolution(problem, budget);
  if (res.outcome == Outcome::Proved) return {OracleVerdict::Kind::Proved, std::nullopt, res.detail};

  if (budget.max_model_size > quick)
    if (auto m = oracle::find_model(sentences, problem.vocab, quick + 1, budget.max_model_size, nodes))
      if (auto v = refuted(*m, "finite countermodel")) return *v;

  return {OracleVerdict::Kind::Unknown, std::nullopt, res.detail};
}

}  // namespace condlog
