#include <doctest.h>

#include "condlog/hilbert.hpp"
#include "condlog/parse.hpp"
#include "condlog/script_io.hpp"
#include "testkit.hpp"

using namespace condlog;

namespace {

Formula parse(const std::string& s) {
  Vocabulary v;
  for (const char* p : {"A", "B", "C", "P", "Q"}) v.declare_predicate(p, 1);
  v.declare_constant("c");
  v.declare_function("f", 1);
  return parse_formula(s, v, SymbolPolicy::Declare);
}

struct L {
  std::string formula, by;
  std::vector<int> from = {};
};

CheckReport check(const std::vector<L>& lines, const std::vector<std::string>& theory = {}) {
  HilbertProof p;
  std::vector<Formula> t;
  for (const auto& s : theory) t.push_back(parse(s));
  p.theory = Theory(t);
  for (const auto& l : lines) p.lines.push_back({parse(l.formula), l.by, l.from, std::nullopt});
  return check_hilbert_proof(p);
}

// A one-line proof of an axiom instance.
bool axiom(const std::string& by, const std::string& formula) { return check({{formula, by}}).accepted; }

std::optional<RuleErrorKind> axiom_error(const std::string& by, const std::string& formula) {
  const auto r = check({{formula, by}});
  return r.first_failure() ? r.first_failure()->error : std::nullopt;
}

}  // namespace

TEST_CASE("reflexivity, generalization and instantiation") {
  const auto r = check_hilbert_proof(read_hilbert_file(std::string(CONDLOG_DATA_DIR) + "/hilbert_ok.json"));
  CHECK(r.accepted);
  CHECK(r.steps.size() == 5);
}

TEST_CASE("instantiating a constant under a conditional is rejected") {
  const auto r = check_hilbert_proof(read_hilbert_file(std::string(CONDLOG_DATA_DIR) + "/hilbert_bad_f1.json"));
  CHECK_FALSE(r.accepted);
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->id == 1);
  CHECK(r.first_failure()->message.find("F1-substitutability") != std::string::npos);
  // the same instance is fine without conditionals
  CHECK(axiom("F1", "(forall x P(x)) => P(c)"));
  CHECK(axiom("F1", "(forall x P(x)) => P(f(y))"));
  CHECK(axiom("F1", "(forall x ~N P(x)) => ~N P(y)"));
  CHECK(axiom_error("F1", "(forall x exists y L(x, y)) => exists y L(y, y)") == RuleErrorKind::Freshness);
  CHECK_FALSE(axiom("F1", "(forall x P(x)) => Q(c)"));
}

TEST_CASE("conditional axioms") {
  CHECK(axiom("C0", "(P(c) ~> Q(c)) | ~(P(c) ~> Q(c))"));
  CHECK_FALSE(axiom("C0", "(P(c) ~> Q(c))"));
  CHECK(axiom("C1", "(P(c) ~> P(c))"));
  CHECK_FALSE(axiom("C1", "(P(c) ~> Q(c))"));
  CHECK(axiom("C2", "((A(c) ~> B(c)) & (A(c) ~> C(c))) => (A(c) ~> (B(c) & C(c)))"));
  CHECK_FALSE(axiom("C2", "((A(c) ~> B(c)) & (P(c) ~> C(c))) => (A(c) ~> (B(c) & C(c)))"));
  CHECK(axiom("C3", "((A(c) ~> C(c)) & (B(c) ~> C(c))) => ((A(c) | B(c)) ~> C(c))"));
  CHECK_FALSE(axiom("C3", "((A(c) ~> C(c)) & (B(c) ~> C(c))) => ((A(c) & B(c)) ~> C(c))"));
  CHECK(axiom("C4", "((A(c) ~> B(c)) & (A(c) ~> C(c))) => ((A(c) & B(c)) ~> C(c))"));
  CHECK_FALSE(axiom("C4", "((A(c) ~> B(c)) & (A(c) ~> C(c))) => ((A(c) & C(c)) ~> C(c))"));
  CHECK(axiom("C5", "((A(c) ~> B(c)) => N (A(c) ~> B(c))) & (~(A(c) ~> B(c)) => N ~(A(c) ~> B(c)))"));
  CHECK_FALSE(axiom("C5", "((A(c) ~> B(c)) => N (A(c) ~> B(c))) & (~(A(c) ~> B(c)) => N (A(c) ~> B(c)))"));
  CHECK(axiom("C6", "~(true ~> false)"));
  CHECK_FALSE(axiom("C6", "~(false ~> false)"));
  CHECK(axiom_error("C1", "(P(c) ~>[1/2] P(c))") == RuleErrorKind::Class);
}

TEST_CASE("first-order axioms") {
  CHECK(axiom("F2", "(forall x (P(x) => Q(x))) => ((forall x P(x)) => forall x Q(x))"));
  CHECK_FALSE(axiom("F2", "(forall x (P(x) => Q(x))) => ((forall x Q(x)) => forall x P(x))"));
  CHECK(axiom("F3", "P(c) => forall x P(c)"));
  CHECK(axiom_error("F3", "P(x) => forall x P(x)") == RuleErrorKind::Freshness);
  CHECK(axiom("F4", "x = y => (L(x, x) => L(x, y))"));
  CHECK(axiom("F4", "x = y => ((P(x) ~> Q(x)) => (P(y) ~> Q(x)))"));
  CHECK_FALSE(axiom("F4", "x = y => (L(x, x) => L(y, x) & P(c))"));
  CHECK_FALSE(axiom("F4", "x = y => ((forall z P(x)) => forall z P(y))"));
  CHECK(axiom("F5", "x != y => N (x != y)"));
  CHECK_FALSE(axiom("F5", "x = y => N (x = y)"));
  CHECK(axiom("Lambda-AX", "(forall x P(x)) => P(c)"));
  CHECK(axiom("Lambda-AX", "P(x) | ~P(x)"));
  CHECK_FALSE(axiom("Lambda-AX", "P(c)"));
  CHECK(check({{"A(c) => B(c)", "Lambda-AX"}}, {"forall x (A(x) => B(x))"}).accepted);
  CHECK(axiom_error("Lambda-AX", "(P(c) ~> P(c))") == RuleErrorKind::Class);
}

TEST_CASE("inference rules") {
  CHECK(check({{"A(c) <=> (A(c) & A(c))", "Lambda-AX"},
               {"(A(c) ~> B(c)) <=> ((A(c) & A(c)) ~> B(c))", "R1", {1}}})
            .accepted);
  CHECK_FALSE(check({{"A(c) <=> (A(c) & A(c))", "Lambda-AX"},
                     {"(A(c) ~> B(c)) <=> ((A(c) & A(c)) ~> C(c))", "R1", {1}}})
                  .accepted);
  CHECK(check({{"(B(c) & C(c)) => B(c)", "Lambda-AX"},
               {"(A(c) ~> (B(c) & C(c))) => (A(c) ~> B(c))", "R2", {1}}})
            .accepted);
  CHECK_FALSE(check({{"(B(c) & C(c)) => B(c)", "Lambda-AX"},
                     {"(A(c) ~> B(c)) => (A(c) ~> (B(c) & C(c)))", "R2", {1}}})
                  .accepted);
  // MP in either citation order
  const std::vector<L> mp = {{"(P(c) ~> P(c))", "C1"},
                             {"(P(c) ~> P(c)) | ~(P(c) ~> P(c)) => (P(c) ~> P(c))", "C0"}};
  CHECK_FALSE(check(mp).accepted);
  CHECK(check({{"(P(c) ~> P(c))", "C1"},
               {"(P(c) ~> P(c)) => ((Q(c) ~> Q(c)) => (P(c) ~> P(c)))", "C0"},
               {"(Q(c) ~> Q(c)) => (P(c) ~> P(c))", "MP", {1, 2}},
               {"(Q(c) ~> Q(c)) => (P(c) ~> P(c))", "MP", {2, 1}}})
            .accepted);
  const auto bad = check({{"(P(c) ~> P(c))", "C1"}, {"(Q(c) ~> Q(c))", "MP", {1, 1}}});
  CHECK_FALSE(bad.accepted);
  CHECK(bad.first_failure()->id == 2);
  CHECK(check({{"(P(x) ~> P(x))", "C1"}, {"forall x (P(x) ~> P(x))", "Gen", {1}}}).accepted);
  CHECK_FALSE(check({{"(P(x) ~> P(x))", "C1"}, {"forall x (P(x) ~> Q(x))", "Gen", {1}}}).accepted);
  CHECK_FALSE(check({{"(P(x) ~> P(x))", "C1"}, {"(P(x) ~> P(x))", "Gen", {2}}}).accepted);
  CHECK(axiom_error("C1", "(P(c) ~> Q(c))") == RuleErrorKind::Shape);
  CHECK(check({{"(P(c) ~> P(c))", "C1", {}}}).accepted);
  CHECK(axiom_error("Frobnicate", "P(c) | ~P(c)") == RuleErrorKind::UnknownRule);
  CHECK_FALSE(check({}).accepted);
}

TEST_CASE("hilbert files round-trip") {
  const HilbertProof p = read_hilbert_file(std::string(CONDLOG_DATA_DIR) + "/hilbert_ok.json");
  const HilbertProof back = hilbert_from_json(hilbert_to_json(p));
  REQUIRE(back.lines.size() == p.lines.size());
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    CHECK(back.lines[i].formula == p.lines[i].formula);
    CHECK(back.lines[i].by == p.lines[i].by);
    CHECK(back.lines[i].from == p.lines[i].from);
  }
}
