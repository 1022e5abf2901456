#include "condlog/substitution.hpp"

#include <vector>

#include "condlog/parse.hpp"

namespace condlog {

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) term_vars(a, out);
}

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  for (const auto& t : f.args()) {
    std::set<std::string> vs;
    term_vars(t, vs);
    for (const auto& v : vs)
      if (!bound.count(v)) out.insert(v);
  }
  if (f.is_quantifier()) {
    const bool fresh = bound.insert(f.variable()).second;
    free_vars(f.body(), bound, out);
    if (fresh) bound.erase(f.variable());
    return;
  }
  for (const auto& c : f.children()) free_vars(c, bound, out);
}

void all_vars(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.args()) term_vars(t, out);
  if (f.is_quantifier()) out.insert(f.variable());
  for (const auto& c : f.children()) all_vars(c, out);
}

Term subst_term(const Term& t, const std::map<std::string, Term>& sigma) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Apply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(subst_term(a, sigma));
      return Term::apply(t.name(), std::move(args));
    }
  }
  return t;
}

// sigma holds only the entries whose variable is free in f.
Formula subst(const Formula& f, const std::map<std::string, Term>& sigma) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
      return f;
    case K::Atom: {
      std::vector<Term> args;
      for (const auto& a : f.args()) args.push_back(subst_term(a, sigma));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case K::Equal:
      return Formula::equal(subst_term(f.args()[0], sigma), subst_term(f.args()[1], sigma));
    case K::Not:
      return Formula::negation(subst(f.operand(), sigma));
    case K::Forall:
    case K::Exists: {
      std::map<std::string, Term> inner;
      for (const auto& [x, t] : sigma)
        if (x != f.variable() && occurs_free(f.body(), x)) inner.emplace(x, t);
      if (inner.empty()) return f;
      for (const auto& [x, t] : inner)
        if (free_variables(t).count(f.variable()))
          throw CaptureError("substituting " + print_term(t) + " for " + x + " would be captured by the quantifier on " +
                             f.variable());
      return Formula::quantifier(f.kind(), f.variable(), subst(f.body(), inner));
    }
    case K::CondLevel:
      return Formula::cond(subst(f.lhs(), sigma), subst(f.rhs(), sigma), f.level());
    default:
      return Formula::binary(f.kind(), subst(f.lhs(), sigma), subst(f.rhs(), sigma));
  }
}

using Scope = std::vector<std::pair<std::string, std::string>>;

// Index of the innermost binder for v in scope, or -1 when free.
long lookup(const Scope& scope, const std::string& v, bool left) {
  for (long i = static_cast<long>(scope.size()) - 1; i >= 0; --i)
    if ((left ? scope[i].first : scope[i].second) == v) return i;
  return -1;
}

bool alpha_term(const Term& a, const Term& b, const Scope& scope) {
  if (a.kind() != b.kind()) return false;
  if (a.is_variable()) {
    const long ia = lookup(scope, a.name(), true);
    const long ib = lookup(scope, b.name(), false);
    return ia == ib && (ia >= 0 || a.name() == b.name());
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], scope)) return false;
  return true;
}

bool alpha(const Formula& a, const Formula& b, Scope& scope, bool ignore_levels) {
  using K = Formula::Kind;
  K ka = a.kind(), kb = b.kind();
  if (ignore_levels) {
    if (ka == K::CondLevel) ka = K::Cond;
    if (kb == K::CondLevel) kb = K::Cond;
  }
  if (ka != kb) return false;
  if (ka == K::CondLevel && !(a.level() == b.level())) return false;
  if (ka == K::Atom && a.predicate() != b.predicate()) return false;
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], scope)) return false;
  if (a.is_quantifier()) {
    scope.emplace_back(a.variable(), b.variable());
    const bool ok = alpha(a.body(), b.body(), scope, ignore_levels);
    scope.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!alpha(a.children()[i], b.children()[i], scope, ignore_levels)) return false;
  return true;
}

struct Matcher {
  const std::string& x;
  std::optional<Term> binding;
  std::vector<std::string> bound;

  bool is_bound(const std::string& v) const {
    for (const auto& b : bound)
      if (b == v) return true;
    return false;
  }

  bool term(const Term& p, const Term& t) {
    if (p.is_variable() && p.name() == x && !is_bound(x)) {
      if (binding) return *binding == t;
      binding = t;
      return true;
    }
    if (p.kind() != t.kind() || p.name() != t.name() || p.args().size() != t.args().size()) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i)
      if (!term(p.args()[i], t.args()[i])) return false;
    return true;
  }

  bool formula(const Formula& p, const Formula& t) {
    if (p.kind() != t.kind() || p.args().size() != t.args().size() || p.children().size() != t.children().size())
      return false;
    if (p.kind() == Formula::Kind::Atom && p.predicate() != t.predicate()) return false;
    if (p.is_quantifier() && p.variable() != t.variable()) return false;
    if (p.kind() == Formula::Kind::CondLevel && !(p.level() == t.level())) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i)
      if (!term(p.args()[i], t.args()[i])) return false;
    if (p.is_quantifier()) bound.push_back(p.variable());
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.children().size(); ++i) ok = formula(p.children()[i], t.children()[i]);
    if (p.is_quantifier()) bound.pop_back();
    return ok;
  }
};

}  // namespace

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  term_vars(t, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars(f, bound, out);
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  all_vars(f, out);
  return out;
}

bool occurs_free(const Formula& f, const std::string& x) { return free_variables(f).count(x) > 0; }

bool contains_conditional(const Formula& f) {
  if (f.is_conditional()) return true;
  for (const auto& c : f.children())
    if (contains_conditional(c)) return true;
  return false;
}

Term substitute(const Term& t, const std::string& x, const Term& s) { return subst_term(t, {{x, s}}); }

Formula substitute(const Formula& f, const std::string& x, const Term& t) {
  return substitute(f, std::map<std::string, Term>{{x, t}});
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& sigma) {
  const auto fv = free_variables(f);
  std::map<std::string, Term> live;
  for (const auto& [x, t] : sigma)
    if (fv.count(x) && !(t.is_variable() && t.name() == x)) live.emplace(x, t);
  if (live.empty()) return f;
  if (contains_conditional(f))
    for (const auto& [x, t] : live)
      if (!t.is_variable())
        throw NotRigidError("only variables may be substituted for " + x +
                            " in a formula with conditionals, not " + print_term(t));
  return subst(f, live);
}

bool alpha_equivalent(const Formula& a, const Formula& b, bool ignore_levels) {
  Scope scope;
  return alpha(a, b, scope, ignore_levels);
}

std::string fresh_variable(const std::string& base, std::span<const Formula> avoid) {
  std::set<std::string> used;
  for (const auto& f : avoid) all_vars(f, used);
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

std::optional<Term> match_instance(const Formula& pattern, const std::string& x, const Formula& target) {
  Matcher m{x, std::nullopt, {}};
  if (!m.formula(pattern, target)) return std::nullopt;
  if (!m.binding) return Term::variable(x);
  return m.binding;
}

}  // namespace condlog
