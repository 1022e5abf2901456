#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condlog/formula.hpp"

namespace condlog {

enum class FormulaClass {
  FO,              // no conditionals
  CondClosed,      // phi ~> psi, phi and psi closed first-order
  CondUniversal,   // forall x1 .. forall xn (phi ~> psi), phi and psi first-order
  Full,            // anything else
  QuantUniversal,  // forall x1 .. forall xn (phi ~>[r] psi)
};

const char* to_string(FormulaClass c);

// Smallest class containing f.
FormulaClass classify(const Formula& f);

// Splits off the maximal universal prefix.
std::pair<std::vector<std::string>, Formula> strip_universal(const Formula& f);
Formula add_universal(const std::vector<std::string>& vars, Formula body);

// exists x1 .. exists xk, conjunction of xi != xj over i < j. Throws on k == 0.
Formula dist_formula(int k);

// First-order and every atom is an equality between variables.
bool is_interpretation_independent(const Formula& f);

// One complete equality statement per partition of vars.
std::vector<Formula> equality_statements(const std::vector<std::string>& vars);

// Left-nested conjunction; true for an empty list.
Formula conjoin(const std::vector<Formula>& parts);

}  // namespace condlog
