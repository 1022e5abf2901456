#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>

#include "condlog/formula.hpp"

namespace condlog {

std::set<std::string> free_variables(const Term& t);
std::set<std::string> free_variables(const Formula& f);
// Every variable name occurring in f, bound or free, including quantifier binders.
std::set<std::string> variables(const Formula& f);
bool occurs_free(const Formula& f, const std::string& x);
bool contains_conditional(const Formula& f);

struct SubstitutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A free variable of the substituted term would be captured by a quantifier.
struct CaptureError : SubstitutionError {
  using SubstitutionError::SubstitutionError;
};
// A non-variable term substituted into a formula with conditionals.
struct NotRigidError : SubstitutionError {
  using SubstitutionError::SubstitutionError;
};

// f[x/t]: replace the free occurrences of x. Returns f unchanged when x is not
// free in f. Throws CaptureError or NotRigidError when t is not substitutable.
Formula substitute(const Formula& f, const std::string& x, const Term& t);
Term substitute(const Term& t, const std::string& x, const Term& s);
// Simultaneous substitution.
Formula substitute(const Formula& f, const std::map<std::string, Term>& sigma);

// Equality up to renaming of bound variables. With ignore_levels, leveled and
// unleveled conditionals are compared by their operands only.
bool alpha_equivalent(const Formula& a, const Formula& b, bool ignore_levels = false);

// `base` if it occurs in none of the formulas, else base1, base2, ...
std::string fresh_variable(const std::string& base, std::span<const Formula> avoid);

// The term t with pattern[x/t] == target structurally, if one exists. When x
// is not free in pattern, returns the variable x itself iff pattern == target.
std::optional<Term> match_instance(const Formula& pattern, const std::string& x, const Formula& target);

}  // namespace condlog
