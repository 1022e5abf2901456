#include "condlog/formula.hpp"

#include <utility>

#include "condlog/constructions.hpp"
#include "condlog/parse.hpp"
#include "condlog/substitution.hpp"

namespace condlog {

namespace {

template <class T>
std::strong_ordering lex(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return a.size() <=> b.size();
}

}  // namespace

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Constant, std::move(name), {}}));
}

Term Term::apply(std::string function, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("function application needs arguments: " + function);
  return Term(std::make_shared<const Node>(Node{Kind::Apply, std::move(function), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.args() == b.args();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  return lex(a.args(), b.args());
}

Formula::Formula() : Formula(truth()) {}

Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::True, {}, {}, {}, {}}));
  return t;
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}, {}}));
  return f;
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(args), {}, {}}));
}

Formula Formula::equal(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Equal, {}, {std::move(lhs), std::move(rhs)}, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}, {}}));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{kind, {}, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::conjunction(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disjunction(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implication(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }
Formula Formula::equivalence(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }
Formula Formula::cond(Formula a, Formula b) { return binary(Kind::Cond, std::move(a), std::move(b)); }

Formula Formula::cond(Formula a, Formula b, Level level) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::CondLevel, {}, {}, {std::move(a), std::move(b)}, std::move(level)}));
}

Formula Formula::quantifier(Kind kind, std::string variable, Formula body) {
  return Formula(std::make_shared<const Node>(Node{kind, std::move(variable), {}, {std::move(body)}, {}}));
}

Formula Formula::forall(std::string variable, Formula body) {
  return quantifier(Kind::Forall, std::move(variable), std::move(body));
}

Formula Formula::exists(std::string variable, Formula body) {
  return quantifier(Kind::Exists, std::move(variable), std::move(body));
}

const Level& Formula::level() const {
  if (!node_->level) throw std::logic_error("formula has no level");
  return *node_->level;
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff: case Kind::Cond: case Kind::CondLevel:
      return true;
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->name == b.node_->name && a.args() == b.args() &&
         a.children() == b.children() && a.node_->level == b.node_->level;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  if (auto c = lex(a.args(), b.args()); c != 0) return c;
  if (auto c = lex(a.children(), b.children()); c != 0) return c;
  if (a.node_->level && b.node_->level) return *a.node_->level <=> *b.node_->level;
  return a.node_->level.has_value() <=> b.node_->level.has_value();
}

Formula almost_surely(Formula f) { return Formula::cond(Formula::negation(std::move(f)), Formula::falsum()); }

Formula with_level(const Formula& f, std::optional<Level> level) {
  if (f.kind() == Formula::Kind::Forall) return Formula::forall(f.variable(), with_level(f.body(), std::move(level)));
  if (!f.is_conditional()) return f;
  if (level) return Formula::cond(f.antecedent(), f.consequent(), *level);
  return Formula::cond(f.antecedent(), f.consequent());
}

void Vocabulary::declare_predicate(const std::string& name, int arity) {
  if (functions.count(name) || constants.count(name))
    throw VocabularyError("symbol '" + name + "' used both as predicate and as another symbol class");
  auto [it, inserted] = predicates.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw VocabularyError("predicate '" + name + "' used with arity " + std::to_string(arity) + " and " +
                          std::to_string(it->second));
}

void Vocabulary::declare_function(const std::string& name, int arity) {
  if (arity < 1) throw VocabularyError("function '" + name + "' must have arity >= 1");
  if (predicates.count(name) || constants.count(name))
    throw VocabularyError("symbol '" + name + "' used both as function and as another symbol class");
  auto [it, inserted] = functions.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw VocabularyError("function '" + name + "' used with arity " + std::to_string(arity) + " and " +
                          std::to_string(it->second));
}

void Vocabulary::declare_constant(const std::string& name) {
  if (predicates.count(name) || functions.count(name))
    throw VocabularyError("symbol '" + name + "' used both as constant and as another symbol class");
  constants.insert(name);
}

void Vocabulary::merge(const Vocabulary& other) {
  for (const auto& [name, arity] : other.predicates) declare_predicate(name, arity);
  for (const auto& [name, arity] : other.functions) declare_function(name, arity);
  for (const auto& name : other.constants) declare_constant(name);
}

bool Vocabulary::declares(const std::string& name) const {
  return predicates.count(name) || functions.count(name) || constants.count(name);
}

namespace {

void collect(const Term& t, Vocabulary& v) {
  switch (t.kind()) {
    case Term::Kind::Variable: break;
    case Term::Kind::Constant: v.declare_constant(t.name()); break;
    case Term::Kind::Apply:
      v.declare_function(t.name(), static_cast<int>(t.args().size()));
      for (const auto& a : t.args()) collect(a, v);
      break;
  }
}

void collect(const Formula& f, Vocabulary& v) {
  if (f.kind() == Formula::Kind::Atom) v.declare_predicate(f.predicate(), static_cast<int>(f.args().size()));
  for (const auto& t : f.args()) collect(t, v);
  for (const auto& c : f.children()) collect(c, v);
}

}  // namespace

Vocabulary Vocabulary::of(const Formula& f) {
  Vocabulary v;
  collect(f, v);
  return v;
}

Vocabulary Vocabulary::of(const Term& t) {
  Vocabulary v;
  collect(t, v);
  return v;
}

bool is_variable_name(std::string_view name) { return !name.empty() && name[0] >= 'u' && name[0] <= 'z'; }

Theory::Theory(std::vector<Formula> s) : sentences(std::move(s)) {
  for (const auto& f : sentences) {
    if (classify(f) != FormulaClass::FO)
      throw std::invalid_argument("theory sentence is not first-order: " + print_formula(f));
    if (!free_variables(f).empty())
      throw std::invalid_argument("theory sentence is not closed: " + print_formula(f));
  }
}

}  // namespace condlog
