#include <map>

#include "oracle/internal.hpp"

namespace condlog {

namespace oracle {

namespace {

// Truth-functional skeleton over letters.
struct Skeleton {
  std::map<Formula, int> letters;

  bool too_many(int max) const { return static_cast<int>(letters.size()) > max; }

  void collect(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: case K::False: return;
      case K::Not: case K::And: case K::Or: case K::Implies: case K::Iff:
        for (const auto& c : f.children()) collect(c);
        return;
      default:
        letters.emplace(f, static_cast<int>(letters.size()));
    }
  }

  bool eval(const Formula& f, std::uint32_t assignment) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return true;
      case K::False: return false;
      case K::Not: return !eval(f.operand(), assignment);
      case K::And: return eval(f.lhs(), assignment) && eval(f.rhs(), assignment);
      case K::Or: return eval(f.lhs(), assignment) || eval(f.rhs(), assignment);
      case K::Implies: return !eval(f.lhs(), assignment) || eval(f.rhs(), assignment);
      case K::Iff: return eval(f.lhs(), assignment) == eval(f.rhs(), assignment);
      default: return (assignment >> letters.at(f)) & 1u;
    }
  }
};

}  // namespace

std::optional<bool> propositional_validity(const Formula& f, int max_letters) {
  Skeleton s;
  s.collect(f);
  if (s.too_many(max_letters)) return std::nullopt;
  const std::uint32_t count = 1u << s.letters.size();
  for (std::uint32_t a = 0; a < count; ++a)
    if (!s.eval(f, a)) return false;
  return true;
}

}  // namespace oracle

bool check_tautology(const Formula& f) {
  auto r = oracle::propositional_validity(f, 24);
  if (!r) throw ResourceError("more than 24 propositional letters in tautology check");
  return *r;
}

}  // namespace condlog
