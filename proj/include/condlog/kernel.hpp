#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "condlog/formula.hpp"
#include "condlog/oracle.hpp"

namespace condlog {

enum class Rule { Premise, REF, LLE, RW, AND, OR, CM, LAX, F1, F3, EQ, REN, II, INC };

const char* rule_name(Rule r);
// Accepts the canonical names plus decorated spellings ("AND^q", "LLE+",
// "Lambda-AX", ...).
std::optional<Rule> parse_rule(std::string_view name);

// Delta = Delta_cond + Delta_fo, each a set up to renaming of bound variables.
struct PremiseSet {
  std::vector<Formula> cond;
  std::vector<Formula> fo;

  // Sorts each formula into cond or fo by its class.
  static PremiseSet of(std::span<const Formula> formulas);

  void add(const Formula& f);
  bool contains(const Formula& f) const;
  std::vector<Formula> all() const;

  friend bool operator==(const PremiseSet& a, const PremiseSet& b);
};

struct Judgment {
  PremiseSet premises;
  Formula conclusion;
};

enum class System { Qualitative, Quantitative };

struct CheckPolicy {
  // Unknown oracle verdicts become recorded assumptions instead of failures.
  bool assume_side_conditions = false;
  OracleBudget budget;
};

// A first-order side condition: theory + hypotheses |- goal.
struct Obligation {
  std::string description;
  std::vector<Formula> hypotheses;
  Formula goal;
  OracleVerdict::Kind verdict = OracleVerdict::Kind::Unknown;
  std::string detail;
  bool assumed = false;

  bool ok() const { return verdict == OracleVerdict::Kind::Proved || assumed; }
};

enum class RuleErrorKind {
  UnknownRule,
  Arity,
  Shape,
  ConclusionMismatch,
  PremiseMismatch,
  SideCondition,
  NotInterpretationIndependent,
  Freshness,
  Level,
  Class,
};

const char* to_string(RuleErrorKind k);

class RuleError : public std::runtime_error {
 public:
  RuleError(RuleErrorKind kind, const std::string& message, std::vector<Obligation> obligations = {})
      : std::runtime_error(message), kind_(kind), obligations_(std::move(obligations)) {}
  RuleErrorKind kind() const { return kind_; }
  const std::vector<Obligation>& obligations() const { return obligations_; }

 private:
  RuleErrorKind kind_;
  std::vector<Obligation> obligations_;
};

struct RuleParams {
  // The claimed result. Needed by rules whose conclusion is not determined by
  // their inputs (Premise, REF, LLE, RW, LAX, INC) and used to infer
  // variables and case formulas when the parameters below are absent.
  std::optional<Judgment> target;
  std::optional<Term> term;
  std::vector<std::string> variables;  // F1: z; F3: x; REN: y1..yn
};

struct RuleResult {
  Judgment conclusion;
  std::vector<Obligation> obligations;
};

// One rule application. Throws RuleError when the rule does not apply or a
// side condition fails.
RuleResult apply_rule(Rule rule, std::span<const Judgment> inputs, const RuleParams& params, const Theory& theory,
                      System system = System::Qualitative, const CheckPolicy& policy = {});

// Level combinators: AND, CM: min(r1 + r2, 1); OR: min(max(2 r1, 2 r2), 1);
// REF: 0; II: max(r1, r2); single-input rules pass the level through.
// Throws RuleError (Arity) on the wrong number of levels.
Level quant_level(Rule rule, std::span<const Level> inputs);

struct ProofStep {
  int id = 0;
  std::string rule;
  std::vector<int> from;
  Formula conclusion;
  std::optional<PremiseSet> premises;  // defaults to the script's premises
  RuleParams params;                   // target is filled in by the checker
};

struct ProofScript {
  Theory theory;
  PremiseSet premises;
  std::vector<ProofStep> steps;
  int goal = 0;
  Vocabulary vocabulary;
};

struct StepVerdict {
  int id = 0;
  std::string rule;
  bool ok = false;
  std::string message;
  std::optional<RuleErrorKind> error;
  std::vector<Obligation> obligations;
};

struct CheckReport {
  bool accepted = false;
  std::vector<StepVerdict> steps;
  std::vector<std::string> script_errors;
  std::vector<std::string> assumptions;

  // First failing step, if any.
  const StepVerdict* first_failure() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

CheckReport check_proof(const ProofScript& script, const CheckPolicy& policy = {});
CheckReport check_quant_proof(const ProofScript& script, const CheckPolicy& policy = {});
CheckReport check_script(const ProofScript& script, System system, const CheckPolicy& policy = {});

}  // namespace condlog
