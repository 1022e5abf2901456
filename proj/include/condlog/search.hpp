#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "condlog/eval.hpp"

namespace condlog {

struct SearchBounds {
  int max_worlds = 2;
  int max_domain = 2;
  std::vector<ExpPoly> templates = default_templates();
  // Upper limit on (structure, valuation) candidates.
  std::uint64_t enumeration_cap = 5'000'000;

  // 1, n, n - 1, 2^n, 2^n - 1, (1/2)^n
  static std::vector<ExpPoly> default_templates();
};

struct BoundsTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Countermodel {
  PSStructure structure;
  Valuation valuation;
};

// First structure and valuation (smallest domain, then fewest worlds, then
// enumeration order) where every premise holds and the goal fails. Worlds all
// satisfy the theory. Premises and goal may be arbitrary formulas of the mode.
std::optional<Countermodel> search_counterexample(std::span<const Formula> premises, const Formula& goal,
                                                  const SearchBounds& bounds, Mode mode,
                                                  const Theory& theory = {});

}  // namespace condlog
