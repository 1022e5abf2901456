#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "condlog/kernel.hpp"

namespace condlog {

// How AND and CM steps split their budget b: the first input gets w * b, the
// second (1 - w) * b. Weights lie strictly between 0 and 1.
struct SplitPolicy {
  Rational default_weight{1, 2};
  std::map<int, Rational> weights;  // by step id

  Rational weight(int step) const;
};

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"default":"1/2", "steps":{"3":"1/3"}}. Throws CompileError.
SplitPolicy split_policy_from_json(const nlohmann::json& j);

struct CompileResult {
  // One level per conditional premise; premises no step uses get level 1.
  std::vector<std::pair<Formula, Level>> instantiation;
  ProofScript script;                                      // the quantitative derivation
  std::map<int, Rational> budgets;                         // error budget per used step
  std::map<int, std::pair<Rational, Rational>> splits;     // AND/CM children's shares

  nlohmann::json to_json() const;
};

// Instantiates the premises of a qualitative derivation so that the goal holds
// at level `target`. Budgets flow backwards from the goal; a step used more
// than once takes the smallest budget asked of it. Steps the goal does not
// depend on are dropped. The input is checked first (CompileError when it is
// rejected).
CompileResult compile(const ProofScript& proof, const Level& target, const SplitPolicy& split = {},
                      const CheckPolicy& policy = {});

}  // namespace condlog
