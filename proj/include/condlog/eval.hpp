#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "condlog/structure.hpp"

namespace condlog {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode {
  Limit,      // conditional probability tends to 1
  SP,         // ... faster than every inverse polynomial
  AsWritten,  // leveled conditionals: eventually at least 1 - r
};

const char* to_string(Mode m);

// (M, V, w) |= f for first-order f. Throws EvalError on conditionals, missing
// denotations, or variables V does not cover.
bool eval_fo(const PSStructure& m, const Valuation& v, std::size_t world, const Formula& f);

// Indices of the worlds where f holds.
std::vector<std::size_t> extension(const PSStructure& m, const Valuation& v, const Formula& f);

// Unnormalized Pr_n(consequent | antecedent): numerator sums the weights of
// worlds satisfying both, denominator those satisfying the antecedent. A zero
// denominator means probability 1.
struct CondProb {
  ExpPoly numerator;
  ExpPoly denominator;

  // Exact value at n, 1 where the denominator vanishes.
  Rational at(std::uint64_t n) const;
};
CondProb cond_prob(const PSStructure& m, const Valuation& v, const Formula& antecedent, const Formula& consequent);

// Truth of one conditional. witness_n0 is set for leveled conditionals.
struct CondVerdict {
  bool value;
  std::optional<std::uint64_t> witness_n0;
};
CondVerdict eval_conditional(const CondProb& p, Mode mode, const std::optional<Level>& level);

// (M, V) |= f: f holds at every world; conditionals are world-independent.
// Throws EvalError for a leveled conditional in Limit/SP mode or an unleveled
// one in AsWritten mode.
bool holds(const PSStructure& m, const Valuation& v, const Formula& f, Mode mode);

// holds() plus the threshold of f when f is itself a leveled conditional.
CondVerdict evaluate(const PSStructure& m, const Valuation& v, const Formula& f, Mode mode);

}  // namespace condlog
