#include <doctest.h>

#include "condlog/eval.hpp"
#include "condlog/model_io.hpp"
#include "condlog/parse.hpp"
#include "condlog/search.hpp"
#include "condlog/substitution.hpp"
#include "testkit.hpp"

using namespace condlog;
using testkit::Rng;

namespace {

PSStructure data(const std::string& name) { return read_model_file(std::string(CONDLOG_DATA_DIR) + "/" + name); }

Formula parse(const std::string& s) {
  Vocabulary v = testkit::gen_vocabulary();
  v.declare_predicate("Psi", 0);
  v.declare_predicate("A", 1);
  v.declare_predicate("B", 1);
  v.declare_predicate("C", 1);
  return parse_formula(s, v, SymbolPolicy::Declare);
}

// Worlds named by index, weights given, Psi true at the first world only.
PSStructure psi_model(const ExpPoly& w1, const ExpPoly& w2) {
  PSStructure m;
  m.domain = {"d1"};
  m.worlds.push_back({"w1", w1, {}});
  m.worlds.push_back({"w2", w2, {}});
  m.worlds[0].interp.predicates["Psi"] = {Tuple{}};
  m.worlds[1].interp.predicates["Psi"] = {};
  return m;
}

}  // namespace

TEST_CASE("first-order evaluation at a world") {
  const PSStructure m = data("two_world.json");
  CHECK(eval_fo(m, {}, 0, parse("P(c)")));
  CHECK(eval_fo(m, {}, 0, parse("forall x exists y x != y")));
  CHECK(eval_fo(m, {}, 1, parse("true")));
  CHECK_FALSE(eval_fo(m, {{"x", 1}}, 0, parse("P(x)")));
  CHECK_THROWS_AS(eval_fo(m, {}, 0, parse("(P(c) ~> P(c))")), EvalError);
  CHECK_THROWS_AS(eval_fo(m, {}, 0, parse("P(x)")), EvalError);
  PSStructure one = m;
  one.domain = {"d1"};
  one.worlds[1].interp.predicates["P"] = {};
  one.worlds[1].interp.constants["c"] = 0;
  CHECK_FALSE(eval_fo(one, {}, 0, parse("forall x exists y x != y")));
}

TEST_CASE("extensions") {
  const PSStructure m = data("two_world.json");
  CHECK(extension(m, {}, parse("false")).empty());
  CHECK(extension(m, {}, parse("true")) == std::vector<std::size_t>{0, 1});
  CHECK(extension(m, {}, parse("P(c)")) == std::vector<std::size_t>{0, 1});
  CHECK(extension(m, {{"x", 0}}, parse("P(x)")) == std::vector<std::size_t>{0});
}

TEST_CASE("conditional probabilities") {
  const ExpPoly n = ExpPoly::n();
  const PSStructure m = psi_model(n - 1, 1);
  const CondProb p = cond_prob(m, {}, parse("true"), parse("Psi"));
  CHECK(p.numerator == n - 1);
  CHECK(p.denominator == n);
  CHECK(p.at(4) == Rational(3, 4));
  // by hand at n = 4: worlds weigh 3 and 1
  CHECK(p.at(4) == Rational(3) / (Rational(3) + Rational(1)));

  const CondProb empty = cond_prob(m, {}, parse("false"), parse("Psi"));
  CHECK(empty.denominator.is_zero());
  CHECK(empty.at(7) == 1);
  for (Mode mode : {Mode::Limit, Mode::SP}) CHECK(eval_conditional(empty, mode, std::nullopt).value);

  const CondProb same = cond_prob(m, {}, parse("Psi"), parse("Psi"));
  for (std::uint64_t k = 2; k < 20; ++k) CHECK(same.at(k) == 1);
  // n - 1 vanishes at n = 1: the probability is 1 there by convention
  CHECK(same.at(1) == 1);
}

TEST_CASE("limit and super-polynomial semantics separate") {
  const ExpPoly n = ExpPoly::n();
  const PSStructure slow = psi_model(n - 1, 1);
  const PSStructure fast = psi_model(ExpPoly::term(1, 0, 2) - 1, 1);
  const Formula f = parse("(true ~> Psi)");
  CHECK(holds(slow, {}, f, Mode::Limit));
  CHECK_FALSE(holds(slow, {}, f, Mode::SP));
  CHECK(holds(fast, {}, f, Mode::Limit));
  CHECK(holds(fast, {}, f, Mode::SP));
  // exact cross-check of the deficit ratios
  const CondProb ps = cond_prob(slow, {}, Formula::truth(), Formula::atom("Psi"));
  const CondProb pf = cond_prob(fast, {}, Formula::truth(), Formula::atom("Psi"));
  for (std::uint64_t k : {10u, 1000u, 1000000u}) CHECK(1 - ps.at(k) == Rational(1, static_cast<long>(k)));
  for (std::uint64_t k : {10u, 100u, 1000u}) CHECK(1 - pf.at(k) == 1 / testkit::naive_weight(ExpPoly::term(1, 0, 2), k));

  const CondVerdict lv = evaluate(slow, {}, parse("(true ~>[3/10] Psi)"), Mode::AsWritten);
  CHECK(lv.value);
  REQUIRE(lv.witness_n0);
  CHECK(*lv.witness_n0 == 4);
  CHECK(ps.at(3) < Rational(7, 10));
  CHECK(ps.at(4) >= Rational(7, 10));

  CHECK_THROWS_AS(holds(slow, {}, parse("(true ~>[3/10] Psi)"), Mode::SP), EvalError);
  CHECK_THROWS_AS(holds(slow, {}, f, Mode::AsWritten), EvalError);
}

TEST_CASE("the two-world structure with a non-rigid constant") {
  const PSStructure m = data("two_world.json");
  CHECK(validate_structure(m).valid);
  for (Mode mode : {Mode::Limit, Mode::SP}) {
    CHECK(holds(m, {}, parse("N P(c)"), mode));
    CHECK(holds(m, {}, parse("forall x ~N P(x)"), mode));
    CHECK_FALSE(holds(m, {}, parse("(forall x ~N P(x)) => ~N P(c)"), mode));
  }
}

TEST_CASE("structure validation") {
  CHECK(validate_structure(data("two_world.json")).valid);
  const auto neg = validate_structure(data("negative_weight.json"));
  CHECK_FALSE(neg.valid);
  PSStructure m = data("two_world.json");
  const Theory all_p({parse("forall x P(x)")});
  CHECK_FALSE(validate_structure(m, all_p).valid);
  for (auto& w : m.worlds) w.interp.predicates["P"] = {{0}, {1}};
  CHECK(validate_structure(m, all_p).valid);
  PSStructure zero = m;
  for (auto& w : zero.worlds) w.weight = ExpPoly(0);
  CHECK_FALSE(validate_structure(zero).valid);
  PSStructure bad = m;
  bad.worlds[0].interp.constants["c"] = 7;
  CHECK_FALSE(validate_structure(bad).valid);
}

TEST_CASE("structure files round-trip") {
  Rng r(4);
  for (int i = 0; i < 50; ++i) {
    const PSStructure m = testkit::random_structure(r, testkit::gen_vocabulary(), 3, 3);
    const PSStructure back = structure_from_json(structure_to_json(m));
    REQUIRE(back.worlds.size() == m.worlds.size());
    CHECK(back.domain == m.domain);
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
      CHECK(back.worlds[w].weight == m.worlds[w].weight);
      CHECK(back.worlds[w].interp == m.worlds[w].interp);
    }
  }
  CHECK_THROWS_AS(structure_from_json(nlohmann::json::parse(R"({"domain": []})")), FormatError);
}

TEST_CASE("cond_prob matches brute-force summation") {
  Rng r(17);
  testkit::FormulaGen gen;
  gen.variables = {"x"};
  for (int i = 0; i < 40; ++i) {
    const PSStructure m = testkit::random_structure(r, gen.vocab, 4, 2);
    const Formula a = gen.formula(r, 2), b = gen.formula(r, 2);
    const Valuation v = {{"x", r.uniform(0, m.domain_size() - 1)}};
    const CondProb p = cond_prob(m, v, a, b);
    for (std::uint64_t k = 1; k <= 50; ++k) {
      Rational num = 0, den = 0;
      for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        if (!testkit::naive_eval(m, v, w, a)) continue;
        const Rational wk = testkit::naive_weight(m.worlds[w].weight, k);
        den += wk;
        if (testkit::naive_eval(m, v, w, b)) num += wk;
      }
      CHECK(p.at(k) == (den == 0 ? Rational(1) : num / den));
    }
  }
}

TEST_CASE("semantic invariants on random structures") {
  Rng r(23);
  testkit::FormulaGen gen, fo;
  gen.cond_percent = 30;
  for (int i = 0; i < 150; ++i) {
    const PSStructure m = testkit::random_structure(r, gen.vocab, 3, 2);
    REQUIRE(validate_structure(m).valid);
    const Formula f = gen.formula(r, 3);
    for (const auto& v : testkit::all_valuations(m, {"x", "y", "z"})) {
      // SP implies Limit
      if (holds(m, v, f, Mode::SP)) CHECK(holds(m, v, f, Mode::Limit));
      const Formula a = fo.formula(r, 2), b = fo.formula(r, 2);
      // level 1 always, level 0 reflexivity
      CHECK(holds(m, v, Formula::cond(a, b, Level::one()), Mode::AsWritten));
      CHECK(holds(m, v, Formula::cond(a, a, Level::zero()), Mode::AsWritten));
      // conditionals are world-independent: exactly one of c and ~c holds
      for (Mode mode : {Mode::Limit, Mode::SP}) {
        const Formula c = Formula::cond(a, b);
        CHECK(holds(m, v, c, mode) != holds(m, v, Formula::negation(c), mode));
      }
      const Formula lc = Formula::cond(a, b, testkit::random_level(r));
      CHECK(holds(m, v, lc, Mode::AsWritten) != holds(m, v, Formula::negation(lc), Mode::AsWritten));
    }
  }
}

TEST_CASE("counterexample search") {
  SearchBounds bounds;
  bounds.max_worlds = 2;
  bounds.max_domain = 1;
  const std::vector<Formula> mono = {parse("(true ~> Psi)")};
  const auto cm = search_counterexample(mono, parse("(~Psi ~> Psi)"), bounds, Mode::SP);
  REQUIRE(cm);
  CHECK(cm->structure.worlds.size() == 2);
  CHECK(holds(cm->structure, cm->valuation, mono[0], Mode::SP));
  CHECK_FALSE(holds(cm->structure, cm->valuation, parse("(~Psi ~> Psi)"), Mode::SP));

  SearchBounds small;
  small.max_worlds = 3;
  small.max_domain = 1;
  const std::vector<Formula> and_premises = {parse("(A(c) ~> B(c))"), parse("(A(c) ~> C(c))")};
  for (Mode mode : {Mode::Limit, Mode::SP})
    CHECK_FALSE(search_counterexample(and_premises, parse("(A(c) ~> (B(c) & C(c)))"), small, mode));

  SearchBounds two;
  two.max_worlds = 2;
  two.max_domain = 2;
  const std::vector<Formula> rigid = {parse("forall x ~N P(x)")};
  const auto nr = search_counterexample(rigid, parse("~N P(c)"), two, Mode::SP);
  REQUIRE(nr);
  CHECK(nr->structure.domain_size() == 2);
  REQUIRE(nr->structure.worlds.size() == 2);
  CHECK(nr->structure.worlds[0].interp.constants.at("c") != nr->structure.worlds[1].interp.constants.at("c"));

  SearchBounds huge;
  huge.max_worlds = 6;
  huge.max_domain = 4;
  huge.enumeration_cap = 1000;
  CHECK_THROWS_AS(search_counterexample(rigid, parse("~N P(c)"), huge, Mode::SP), BoundsTooLarge);
}
