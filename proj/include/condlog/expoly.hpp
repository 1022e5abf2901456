#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "condlog/rational.hpp"

namespace condlog {

// a * n^k * c^n
struct ExpTerm {
  Rational coeff;
  unsigned degree = 0;
  Rational base{1};

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

// Finite sum of ExpTerms, kept canonical: sorted by (base desc, degree desc),
// no two terms with the same (degree, base), no zero coefficients.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(const Rational& constant);  // NOLINT: implicit on purpose
  ExpPoly(long constant) : ExpPoly(Rational(constant)) {}  // NOLINT
  explicit ExpPoly(std::vector<ExpTerm> terms);  // throws std::invalid_argument if a base is <= 0

  static ExpPoly term(const Rational& coeff, unsigned degree, const Rational& base);
  static ExpPoly n() { return term(1, 1, 1); }

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational evaluate(std::uint64_t n) const;

  // Dominant term; throws std::logic_error on the zero polynomial.
  const ExpTerm& leading() const;
  // Sign (-1, 0, 1) for all sufficiently large n.
  int eventual_sign() const;

  std::string to_string() const;

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly& operator+=(const ExpPoly& b) { return *this = *this + b; }

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  std::vector<ExpTerm> terms_;
};

// Orders terms by asymptotic growth: base first, then degree.
int compare_growth(const ExpTerm& a, const ExpTerm& b);

struct EventualComparison {
  enum class Verdict { GE, LT, Equal };
  Verdict verdict;
  // Smallest n0 (up to a bounded downward scan) with the verdict holding for all n >= n0.
  std::uint64_t witness_n0;
};

const char* to_string(EventualComparison::Verdict v);

// Decides the sign of a - b for all large n and computes a threshold.
EventualComparison compare_eventually(const ExpPoly& a, const ExpPoly& b);

// Rigorous N >= 1 such that sign(p(n)) equals the sign of the leading term for
// every n >= N. p must be nonzero.
std::uint64_t sign_threshold(const ExpPoly& p);

}  // namespace condlog
