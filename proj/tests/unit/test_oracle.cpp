#include <doctest.h>

#include <functional>
#include <set>

#include "condlog/oracle.hpp"
#include "condlog/parse.hpp"
#include "condlog/substitution.hpp"
#include "testkit.hpp"

using namespace condlog;
using testkit::Rng;

namespace {

Formula parse(const std::string& s) {
  Vocabulary v;
  v.declare_constant("a");
  v.declare_constant("b");
  v.declare_constant("c");
  v.declare_function("f", 1);
  return parse_formula(s, v, SymbolPolicy::Declare);
}

OracleVerdict::Kind verdict(const std::vector<std::string>& theory, const std::vector<std::string>& premises,
                            const std::string& goal) {
  std::vector<Formula> t, p;
  for (const auto& s : theory) t.push_back(parse(s));
  for (const auto& s : premises) p.push_back(parse(s));
  return entails(Theory(t), p, parse(goal)).kind;
}

constexpr auto Proved = OracleVerdict::Kind::Proved;
constexpr auto Refuted = OracleVerdict::Kind::Refuted;

// Brute force over every one-world structure with at most `max_domain`
// elements: is there one where the premises hold and the goal fails under
// some valuation?
bool brute_countermodel(const Vocabulary& vocab, const std::vector<Formula>& premises, const Formula& goal,
                        int max_domain) {
  std::set<std::string> free = free_variables(goal);
  for (const auto& p : premises)
    for (const auto& x : free_variables(p)) free.insert(x);
  bool found = false;
  for (int d = 1; d <= max_domain && !found; ++d)
    testkit::for_each_model(vocab, d, [&](const PSStructure& m) {
      if (found) return;
      for (const auto& v : testkit::all_valuations(m, {free.begin(), free.end()})) {
        bool ok = true;
        for (const auto& p : premises) ok = ok && testkit::naive_eval(m, v, 0, p);
        if (ok && !testkit::naive_eval(m, v, 0, goal)) {
          found = true;
          return;
        }
      }
    });
  return found;
}

}  // namespace

TEST_CASE("propositional tautologies") {
  CHECK(check_tautology(parse("(p => q) | (q => p)")));
  CHECK(check_tautology(parse("(P(c) ~> Q) | ~(P(c) ~> Q)")));
  CHECK_FALSE(check_tautology(parse("p => q")));
  CHECK(check_tautology(parse("(forall x P(x)) => (forall x P(x))")));
  CHECK_FALSE(check_tautology(parse("forall x P(x) => forall x P(x)")));
  CHECK_FALSE(check_tautology(parse("(P(c) ~> Q(c)) => (P(c) ~> (Q(c) | R(c)))")));
  std::string wide = "A0";
  for (int i = 1; i < 25; ++i) wide += " | A" + std::to_string(i);
  CHECK_THROWS_AS(check_tautology(parse(wide)), ResourceError);
}

TEST_CASE("entailment examples") {
  CHECK(verdict({"forall x P(x)"}, {}, "P(c)") == Proved);
  CHECK(verdict({}, {}, "exists x x = x") == Proved);
  const OracleVerdict all_equal = entails({}, {}, parse("forall x forall y x = y"));
  REQUIRE(all_equal.kind == Refuted);
  REQUIRE(all_equal.countermodel);
  CHECK(all_equal.countermodel->structure.domain_size() == 2);
  CHECK_THROWS_AS(entails({}, {}, parse("(P(c) ~> Q(c))")), std::invalid_argument);
  const std::vector<Formula> cond = {parse("(P(c) ~> Q(c))")};
  CHECK_THROWS_AS(entails({}, cond, parse("P(c)")), std::invalid_argument);
}

TEST_CASE("equality reasoning") {
  CHECK(verdict({}, {"a = b"}, "f(a) = f(b)") == Proved);
  CHECK(verdict({}, {"f(f(f(c))) = c", "f(f(f(f(f(c))))) = c"}, "f(c) = c") == Proved);
  CHECK(verdict({}, {"a = b", "P(a)"}, "P(b)") == Proved);
  CHECK(verdict({}, {"x = y", "P(x)"}, "P(y)") == Proved);
  CHECK(verdict({}, {"P(a)"}, "P(b)") == Refuted);
  CHECK(verdict({}, {}, "forall x forall y (x = y => (P(x) => P(y)))") == Proved);
  CHECK(verdict({}, {"x != y"}, "exists u exists v u != v") == Proved);
}

TEST_CASE("quantified reasoning with a theory") {
  CHECK(verdict({"forall x (P(x) => Q(x))", "forall x (Q(x) => R(x))"}, {}, "forall x (P(x) => R(x))") == Proved);
  CHECK(verdict({"forall x (A(x) <=> B(x))"}, {}, "A(c) <=> B(c)") == Proved);
  CHECK(verdict({}, {"K(x)"}, "B(c) => exists z K(z)") == Proved);
  CHECK(verdict({"forall x exists y L(x, y)"}, {}, "exists y L(c, y)") == Proved);
  CHECK(verdict({"forall x (P(x) | Q(x))"}, {}, "forall x P(x)") == Refuted);
  CHECK(verdict({}, {}, "exists x (D(x) => forall y D(y))") == Proved);  // drinker
}

TEST_CASE("refutations come with checked countermodels") {
  const OracleVerdict v = entails({}, std::vector<Formula>{parse("P(x)")}, parse("P(c)"));
  REQUIRE(v.kind == Refuted);
  const Countermodel& cm = *v.countermodel;
  CHECK(testkit::naive_eval(cm.structure, cm.valuation, 0, parse("P(x)")));
  CHECK_FALSE(testkit::naive_eval(cm.structure, cm.valuation, 0, parse("P(c)")));
}

TEST_CASE("verdicts agree with brute-force model enumeration") {
  Vocabulary vocab;
  vocab.declare_predicate("S", 0);
  vocab.declare_predicate("P", 1);
  vocab.declare_predicate("Q", 1);
  vocab.declare_predicate("R", 1);
  vocab.declare_constant("c");
  testkit::FormulaGen gen;
  gen.functions = false;
  gen.variables = {"x", "y"};
  Rng r(99);
  OracleBudget budget;
  budget.max_steps = 2000;
  budget.max_model_size = 3;
  int proved = 0, refuted = 0;
  for (int i = 0; i < 250; ++i) {
    std::vector<Formula> premises;
    const int np = r.uniform(0, 2);
    for (int k = 0; k < np; ++k) premises.push_back(gen.formula(r, 3));
    // stay inside the enumerated vocabulary
    auto clean = [&](const Formula& f) {
      const Vocabulary used = Vocabulary::of(f);
      return used.predicates.count("L") == 0 && used.constants.count("d") == 0;
    };
    const Formula goal = gen.formula(r, 3);
    bool usable = clean(goal);
    for (const auto& p : premises) usable = usable && clean(p);
    if (!usable) continue;
    const OracleVerdict v = entails({}, premises, goal, budget);
    const bool counter = brute_countermodel(vocab, premises, goal, 3);
    CAPTURE(print_formula(goal));
    if (v.kind == Proved) {
      ++proved;
      CHECK_FALSE(counter);
    }
    if (v.kind == Refuted) {
      ++refuted;
      REQUIRE(v.countermodel);
      const auto& cm = *v.countermodel;
      CHECK(cm.structure.domain_size() <= 3);
      for (const auto& p : premises) CHECK(testkit::naive_eval(cm.structure, cm.valuation, 0, p));
      CHECK_FALSE(testkit::naive_eval(cm.structure, cm.valuation, 0, goal));
    }
    // every small countermodel is found
    if (counter) CHECK(v.kind == Refuted);
  }
  CHECK(proved > 10);
  CHECK(refuted > 20);
}

TEST_CASE("tautology check agrees with entailment on propositional formulas") {
  Vocabulary vocab;
  for (const char* p : {"S", "T", "U"}) vocab.declare_predicate(p, 0);
  Rng r(7);
  for (int i = 0; i < 200; ++i) {
    // formulas over three letters
    std::function<Formula(int)> gen = [&](int depth) -> Formula {
      if (depth == 0 || r.chance(30)) return Formula::atom(r.pick(std::vector<std::string>{"S", "T", "U"}));
      switch (r.uniform(0, 4)) {
        case 0: return Formula::negation(gen(depth - 1));
        case 1: return Formula::conjunction(gen(depth - 1), gen(depth - 1));
        case 2: return Formula::disjunction(gen(depth - 1), gen(depth - 1));
        case 3: return Formula::implication(gen(depth - 1), gen(depth - 1));
        default: return Formula::equivalence(gen(depth - 1), gen(depth - 1));
      }
    };
    Formula f = gen(4);
    if (i % 3 == 0) f = Formula::disjunction(f, Formula::negation(f));
    const bool taut = check_tautology(f);
    const auto kind = entails({}, {}, f).kind;
    CHECK(kind == (taut ? Proved : Refuted));
  }
}
