#pragma once

// Stages of the first-order oracle. Every stage works on closed sentences:
// free variables of the query are replaced by constants "$x".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condlog/oracle.hpp"

namespace condlog::oracle {

struct Problem {
  std::vector<Formula> hypotheses;  // theory and premises, closed
  Formula goal;                     // closed
  std::vector<std::string> free_vars;  // original names, each renamed to "$" + name
  Vocabulary vocab;                 // includes the "$" constants
};

Problem make_problem(const Theory& theory, std::span<const Formula> premises, const Formula& goal);

// Turns a one-world model of the problem's sentences into a countermodel over
// the original query, moving "$x" constants into the valuation.
Countermodel to_countermodel(const Problem& p, PSStructure m);

// Propositional validity of f, or nullopt past `max_letters` letters.
std::optional<bool> propositional_validity(const Formula& f, int max_letters);

enum class Outcome { Proved, Refuted, Open };

struct StageResult {
  Outcome outcome = Outcome::Open;
  std::optional<PSStructure> model;  // with Refuted
  std::string detail;
};

// Quantifier-free problems: congruence closure with case splitting.
StageResult decide_ground(const Problem& p, int max_model_size);

// Bounded saturation of hypotheses + not goal.
StageResult refute_by_resolution(const Problem& p, const OracleBudget& budget);

// A model of all sentences with domain size in [min_size, max_size].
std::optional<PSStructure> find_model(const std::vector<Formula>& sentences, const Vocabulary& vocab, int min_size,
                                      int max_size, std::uint64_t node_budget);

}  // namespace condlog::oracle
