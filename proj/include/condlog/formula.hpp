#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "condlog/rational.hpp"

namespace condlog {

// Immutable first-order term. Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Constant, Apply };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  bool is_variable() const { return kind() == Kind::Variable; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Immutable formula of the conditional language: first-order connectives and
// quantifiers, the conditional `a ~> b` and its leveled form `a ~>[r] b`.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    True, False, Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists, Cond, CondLevel
  };

  Formula();  // true

  static Formula truth();
  static Formula falsum();
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equal(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula forall(std::string variable, Formula body);
  static Formula exists(std::string variable, Formula body);
  static Formula cond(Formula antecedent, Formula consequent);
  static Formula cond(Formula antecedent, Formula consequent, Level level);
  static Formula binary(Kind kind, Formula a, Formula b);
  static Formula quantifier(Kind kind, std::string variable, Formula body);

  Kind kind() const { return node_->kind; }

  // Atom: predicate symbol. Forall/Exists: the bound variable.
  const std::string& predicate() const { return node_->name; }
  const std::string& variable() const { return node_->name; }
  // Atom arguments; for Equal the two sides.
  const std::vector<Term>& args() const { return node_->args; }
  const Formula& operand() const { return node_->children.at(0); }
  const Formula& lhs() const { return node_->children.at(0); }
  const Formula& rhs() const { return node_->children.at(1); }
  const Formula& body() const { return node_->children.at(0); }
  const Formula& antecedent() const { return lhs(); }
  const Formula& consequent() const { return rhs(); }
  const Level& level() const;
  const std::vector<Formula>& children() const { return node_->children; }

  bool is_binary() const;
  bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
  bool is_conditional() const { return kind() == Kind::Cond || kind() == Kind::CondLevel; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
    std::vector<Formula> children;
    std::optional<Level> level;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// N f, read "f is almost surely true": (~f ~> false).
Formula almost_surely(Formula f);

// Same formula with the level of a top-level (possibly universally prefixed)
// conditional replaced or removed.
Formula with_level(const Formula& f, std::optional<Level> level);

struct VocabularyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite vocabulary. Predicates may be 0-ary; functions have arity >= 1.
// A name belongs to at most one of the three classes.
struct Vocabulary {
  std::map<std::string, int> predicates;
  std::map<std::string, int> functions;
  std::set<std::string> constants;

  void declare_predicate(const std::string& name, int arity);
  void declare_function(const std::string& name, int arity);
  void declare_constant(const std::string& name);
  void merge(const Vocabulary& other);

  bool declares(const std::string& name) const;

  // Every symbol occurring in f (variables excluded).
  static Vocabulary of(const Formula& f);
  static Vocabulary of(const Term& t);
};

// Identifiers beginning with u..z are read as variables unless declared.
bool is_variable_name(std::string_view name);

// A first-order theory: closed first-order sentences every world satisfies.
struct Theory {
  std::vector<Formula> sentences;

  Theory() = default;
  // Throws std::invalid_argument if a sentence is not closed first-order.
  explicit Theory(std::vector<Formula> sentences);
};

}  // namespace condlog
