#include "condlog/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace condlog {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpz_class ten_to(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational literal: '" + original + "'"); };
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) return fail();
    r = Rational(mpz_class(std::string(num), 10), d);
    r.canonicalize();
  } else {
    std::string_view mantissa = text, exponent;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      exponent = text.substr(e + 1);
    }
    std::string_view whole = mantissa, frac;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      whole = mantissa.substr(0, dot);
      frac = mantissa.substr(dot + 1);
    }
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    r = Rational(digits, ten_to(frac.size()));
    if (!exponent.empty()) {
      bool neg_exp = false;
      if (exponent[0] == '-' || exponent[0] == '+') {
        neg_exp = exponent[0] == '-';
        exponent.remove_prefix(1);
      }
      if (!all_digits(exponent) || exponent.size() > 6) return fail();
      const unsigned long e = std::stoul(std::string(exponent));
      if (neg_exp)
        r /= Rational(ten_to(e));
      else
        r *= Rational(ten_to(e));
    }
    r.canonicalize();
  }
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Level::Level(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1)
    throw std::out_of_range("level " + value_.get_str() + " outside [0,1]");
}

Level Level::parse(std::string_view text) { return Level(parse_rational(text)); }

Level capped(const Rational& x) { return x >= 1 ? Level::one() : Level(x); }

}  // namespace condlog
