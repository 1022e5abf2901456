#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "condlog/expoly.hpp"
#include "condlog/formula.hpp"

namespace condlog {

// Domain elements are indices into PSStructure::domain.
using Element = int;
using Tuple = std::vector<Element>;

// Symbols of one world. A predicate without an entry has the empty extension.
struct Interpretation {
  std::map<std::string, std::set<Tuple>> predicates;
  std::map<std::string, std::map<Tuple, Element>> functions;
  std::map<std::string, Element> constants;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

struct World {
  std::string name;
  ExpPoly weight;  // unnormalized; Pr_n(w) = weight(n) / total(n)
  Interpretation interp;
};

// Finite worlds over one shared finite domain.
struct PSStructure {
  std::vector<std::string> domain;
  std::vector<World> worlds;

  int domain_size() const { return static_cast<int>(domain.size()); }
  ExpPoly total_weight() const;
};

using Valuation = std::map<std::string, Element>;

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;
};

// Structural invariants (nonempty domain and worlds, element ranges,
// consistent arities, total function tables, eventually nonnegative weights,
// eventually positive total) plus every theory sentence at every world.
ValidationReport validate_structure(const PSStructure& m, const Theory& theory = {});

}  // namespace condlog
