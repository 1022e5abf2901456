#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "condlog/formula.hpp"
#include "condlog/search.hpp"

namespace condlog {

struct OracleBudget {
  int max_clauses = 5000;    // retained clauses during saturation
  int max_steps = 10000;     // given-clause iterations
  int max_model_size = 4;    // largest domain tried by the model finder
};

struct OracleVerdict {
  enum class Kind { Proved, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  // Refuted: a one-world structure where the premises hold and the goal fails.
  // Free variables of the query are assigned by the valuation.
  std::optional<Countermodel> countermodel;
  std::string detail;  // which stage decided, or why nothing did
};

const char* to_string(OracleVerdict::Kind k);

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Propositional validity after replacing every maximal atom, quantified
// formula or conditional by a letter. Throws ResourceError past 24 letters.
bool check_tautology(const Formula& f);

// Does theory + premises entail goal in first-order logic with equality?
// Free variables are read as fixed (arbitrary) elements shared by premises and
// goal. Throws std::invalid_argument if a premise or the goal has conditionals.
OracleVerdict entails(const Theory& theory, std::span<const Formula> premises, const Formula& goal,
                      const OracleBudget& budget = {});

}  // namespace condlog
