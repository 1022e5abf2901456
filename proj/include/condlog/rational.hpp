#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace condlog {

using Rational = mpq_class;

// Accepts integers, "p/q", decimals ("0.25") and scientific notation ("1e-6").
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

Rational pow(const Rational& base, unsigned long exponent);

// An error bound r in [0,1] attached to a leveled conditional.
class Level {
 public:
  Level() = default;
  explicit Level(Rational value);

  static Level parse(std::string_view text);
  static Level zero() { return Level(); }
  static Level one() { return Level(Rational(1)); }

  const Rational& value() const { return value_; }
  std::string to_string() const { return condlog::to_string(value_); }

  friend bool operator==(const Level& a, const Level& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Level& a, const Level& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

// min(x, 1) clamped into a Level; x must be nonnegative.
Level capped(const Rational& x);

}  // namespace condlog
