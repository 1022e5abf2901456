#include "condlog/expoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace condlog {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational npow(std::uint64_t n, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
  return Rational(r);
}

// Scan ceiling for the downward minimal-threshold search.
constexpr std::uint64_t kScanLimit = 4096;

}  // namespace

int compare_growth(const ExpTerm& a, const ExpTerm& b) {
  if (const int c = cmp(a.base, b.base); c != 0) return c < 0 ? -1 : 1;
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  return 0;
}

ExpPoly::ExpPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({constant, 0, 1});
}

ExpPoly::ExpPoly(std::vector<ExpTerm> terms) {
  for (auto& t : terms) {
    t.coeff.canonicalize();
    t.base.canonicalize();
    if (t.base <= 0) throw std::invalid_argument("exp-poly base must be positive, got " + condlog::to_string(t.base));
  }
  std::sort(terms.begin(), terms.end(), [](const ExpTerm& a, const ExpTerm& b) { return compare_growth(a, b) > 0; });
  for (const auto& t : terms) {
    if (!terms_.empty() && compare_growth(terms_.back(), t) == 0)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(t);
  }
  std::erase_if(terms_, [](const ExpTerm& t) { return t.coeff == 0; });
}

ExpPoly ExpPoly::term(const Rational& coeff, unsigned degree, const Rational& base) {
  return ExpPoly(std::vector<ExpTerm>{{coeff, degree, base}});
}

Rational ExpPoly::evaluate(std::uint64_t n) const {
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.coeff * npow(n, t.degree) * pow(t.base, n);
  return sum;
}

const ExpTerm& ExpPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("zero exp-poly has no leading term");
  return terms_.front();
}

int ExpPoly::eventual_sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational a = t.coeff;
    if (i) {
      out += a < 0 ? " - " : " + ";
      a = abs_q(a);
    } else if (a < 0) {
      out += "-";
      a = -a;
    }
    std::vector<std::string> factors;
    if (a != 1 || (t.degree == 0 && t.base == 1)) factors.push_back(condlog::to_string(a));
    if (t.degree == 1) factors.push_back("n");
    if (t.degree > 1) factors.push_back("n^" + std::to_string(t.degree));
    if (t.base != 1) factors.push_back(t.base.get_den() == 1 ? condlog::to_string(t.base) + "^n"
                                                             : "(" + condlog::to_string(t.base) + ")^n");
    for (std::size_t j = 0; j < factors.size(); ++j) out += (j ? "*" : "") + factors[j];
  }
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return ExpPoly(std::move(all));
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> all;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) all.push_back({s.coeff * t.coeff, s.degree + t.degree, s.base * t.base});
  return ExpPoly(std::move(all));
}

const char* to_string(EventualComparison::Verdict v) {
  switch (v) {
    case EventualComparison::Verdict::GE: return "GE";
    case EventualComparison::Verdict::LT: return "LT";
    case EventualComparison::Verdict::Equal: return "Equal";
  }
  return "?";
}

namespace {

// |t(n)| / |lead(n)| for n >= 1.
Rational ratio(const ExpTerm& t, const ExpTerm& lead, std::uint64_t n) {
  return abs_q(t.coeff) * npow(n, t.degree) * pow(t.base, n) / (abs_q(lead.coeff) * npow(n, lead.degree) * pow(lead.base, n));
}

// Smallest n >= lo with pred(n), pred monotone (false...true) and true somewhere.
template <class Pred>
std::uint64_t first_true(std::uint64_t lo, Pred pred) {
  if (pred(lo)) return lo;
  std::uint64_t bad = lo, step = 1;
  std::uint64_t good = lo + step;
  while (!pred(good)) {
    bad = good;
    step *= 2;
    good = lo + step;
  }
  while (good - bad > 1) {
    const std::uint64_t mid = bad + (good - bad) / 2;
    (pred(mid) ? good : bad) = mid;
  }
  return good;
}

}  // namespace

std::uint64_t sign_threshold(const ExpPoly& p) {
  const auto& terms = p.terms();
  if (terms.empty()) throw std::logic_error("sign_threshold of the zero exp-poly");
  const ExpTerm& lead = terms.front();
  const Rational bound(1, static_cast<unsigned long>(std::max<std::size_t>(terms.size() - 1, 1)));
  std::uint64_t N = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const ExpTerm& t = terms[i];
    // The ratio t/lead is nonincreasing from `mono` on: its step factor
    // (1+1/n)^(k_t - k_lead) * c_t / c_lead is then at most 1.
    std::uint64_t mono = 1;
    if (t.degree > lead.degree) {
      const Rational c = t.base / lead.base;
      const unsigned e = t.degree - lead.degree;
      mono = first_true(1, [&](std::uint64_t n) { return pow(Rational(n + 1, n), e) * c <= 1; });
    }
    const std::uint64_t ni = first_true(mono, [&](std::uint64_t n) { return ratio(t, lead, n) < bound; });
    N = std::max(N, ni);
  }
  return N;
}

EventualComparison compare_eventually(const ExpPoly& a, const ExpPoly& b) {
  const ExpPoly d = a - b;
  if (d.is_zero()) return {EventualComparison::Verdict::Equal, 0};
  const bool ge = d.eventual_sign() > 0;
  const std::uint64_t N = sign_threshold(d);
  auto ok = [&](std::uint64_t n) {
    const int s = sgn(d.evaluate(n));
    return ge ? s >= 0 : s < 0;
  };
  std::uint64_t n0 = N;
  const std::uint64_t floor = N > kScanLimit ? N - kScanLimit : 0;
  while (n0 > floor && ok(n0 - 1)) --n0;
  return {ge ? EventualComparison::Verdict::GE : EventualComparison::Verdict::LT, n0};
}

}  // namespace condlog
