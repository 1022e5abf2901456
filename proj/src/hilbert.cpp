#include "condlog/hilbert.hpp"

#include <algorithm>

#include "condlog/constructions.hpp"
#include "condlog/parse.hpp"
#include "condlog/substitution.hpp"

namespace condlog {

namespace {

using K = Formula::Kind;
using E = RuleErrorKind;

struct LineError {
  E kind;
  std::string message;
};

[[noreturn]] void fail(E kind, const std::string& msg) { throw LineError{kind, msg}; }

bool same(const Formula& a, const Formula& b) { return alpha_equivalent(a, b); }

bool is(const Formula& f, K k) { return f.kind() == k; }

// N phi is (~phi ~> false); returns phi.
const Formula* unwrap_n(const Formula& f) {
  if (!is(f, K::Cond) || !is(f.consequent(), K::False) || !is(f.antecedent(), K::Not)) return nullptr;
  return &f.antecedent().operand();
}

bool has_level(const Formula& f) {
  if (is(f, K::CondLevel)) return true;
  for (const auto& c : f.children())
    if (has_level(c)) return true;
  return false;
}

bool has_quantifier(const Formula& f) {
  if (f.is_quantifier()) return true;
  for (const auto& c : f.children())
    if (has_quantifier(c)) return true;
  return false;
}

// b is a with zero or more occurrences of variable x replaced by y.
bool replaced(const Term& a, const Term& b, const std::string& x, const std::string& y) {
  if (a == b) return true;
  if (a.is_variable() && b.is_variable()) return a.name() == x && b.name() == y;
  if (a.kind() != Term::Kind::Apply || b.kind() != Term::Kind::Apply || a.name() != b.name() ||
      a.args().size() != b.args().size())
    return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!replaced(a.args()[i], b.args()[i], x, y)) return false;
  return true;
}

bool replaced(const Formula& a, const Formula& b, const std::string& x, const std::string& y) {
  if (a.kind() != b.kind()) return false;
  if (is(a, K::Atom) && a.predicate() != b.predicate()) return false;
  if (is(a, K::CondLevel) && !(a.level() == b.level())) return false;
  if (a.args().size() != b.args().size() || a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!replaced(a.args()[i], b.args()[i], x, y)) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!replaced(a.children()[i], b.children()[i], x, y)) return false;
  return true;
}

void need_shape(bool ok, const std::string& axiom, const std::string& pattern) {
  if (!ok) fail(E::Shape, axiom + " has the form " + pattern);
}

// (A ~> B) & (C ~> D) => (F ~> G), the common frame of C2, C3, C4.
struct Frame {
  const Formula *a, *b, *c, *d, *f, *g;
};

Frame frame(const Formula& line, const std::string& axiom, const std::string& pattern) {
  need_shape(is(line, K::Implies) && is(line.lhs(), K::And) && is(line.lhs().lhs(), K::Cond) &&
                 is(line.lhs().rhs(), K::Cond) && is(line.rhs(), K::Cond),
             axiom, pattern);
  const Formula& l = line.lhs().lhs();
  const Formula& r = line.lhs().rhs();
  return {&l.antecedent(), &l.consequent(), &r.antecedent(), &r.consequent(), &line.rhs().antecedent(),
          &line.rhs().consequent()};
}

class Checker {
 public:
  Checker(const HilbertProof& proof, const CheckPolicy& policy) : proof_(proof), policy_(policy) {}

  std::vector<Obligation> check(std::size_t index) {
    const HilbertLine& line = proof_.lines[index];
    const Formula& f = line.formula;
    obligations_.clear();
    if (has_level(f)) fail(E::Class, "leveled conditionals have no place in the axiom system");
    std::vector<const Formula*> cited;
    for (int id : line.from) {
      if (id < 1 || static_cast<std::size_t>(id) > index)
        fail(E::Shape, "line " + std::to_string(id) + " is not an earlier line");
      cited.push_back(&proof_.lines[static_cast<std::size_t>(id) - 1].formula);
    }
    const std::string& by = line.by;
    const bool is_rule = by == "MP" || by == "Gen" || by == "R1" || by == "R2";
    if (!is_rule && !cited.empty()) fail(E::Arity, by + " is an axiom and cites no lines");

    if (by == "Lambda-AX" || by == "LAX") {
      if (classify(f) != FormulaClass::FO) fail(E::Class, "Lambda-AX covers first-order formulas only");
      const OracleVerdict v = entails(proof_.theory, {}, f, policy_.budget);
      Obligation o{"Lambda-AX", {}, f, v.kind, v.detail, false};
      o.assumed = v.kind == OracleVerdict::Kind::Unknown && policy_.assume_side_conditions;
      obligations_.push_back(o);
      if (!o.ok()) fail(E::SideCondition, std::string("Lambda-AX: theory does not prove it (") + to_string(v.kind) + ")");
    } else if (by == "C0") {
      if (!check_tautology(f)) fail(E::SideCondition, "C0: not an instance of a propositional tautology");
    } else if (by == "C1") {
      need_shape(is(f, K::Cond) && same(f.antecedent(), f.consequent()), by, "phi ~> phi");
    } else if (by == "C2") {
      const std::string p = "((phi ~> psi1) & (phi ~> psi2)) => (phi ~> (psi1 & psi2))";
      const Frame fr = frame(f, by, p);
      need_shape(same(*fr.a, *fr.c) && same(*fr.a, *fr.f) && is(*fr.g, K::And) && same(fr.g->lhs(), *fr.b) &&
                     same(fr.g->rhs(), *fr.d),
                 by, p);
    } else if (by == "C3") {
      const std::string p = "((phi1 ~> psi) & (phi2 ~> psi)) => ((phi1 | phi2) ~> psi)";
      const Frame fr = frame(f, by, p);
      need_shape(same(*fr.b, *fr.d) && same(*fr.b, *fr.g) && is(*fr.f, K::Or) && same(fr.f->lhs(), *fr.a) &&
                     same(fr.f->rhs(), *fr.c),
                 by, p);
    } else if (by == "C4") {
      const std::string p = "((phi1 ~> phi2) & (phi1 ~> psi)) => ((phi1 & phi2) ~> psi)";
      const Frame fr = frame(f, by, p);
      need_shape(same(*fr.a, *fr.c) && same(*fr.d, *fr.g) && is(*fr.f, K::And) && same(fr.f->lhs(), *fr.a) &&
                     same(fr.f->rhs(), *fr.b),
                 by, p);
    } else if (by == "C5") {
      const std::string p = "((phi ~> psi) => N(phi ~> psi)) & (~(phi ~> psi) => N ~(phi ~> psi))";
      need_shape(is(f, K::And) && is(f.lhs(), K::Implies) && is(f.rhs(), K::Implies), by, p);
      const Formula& c = f.lhs().lhs();
      const Formula* n1 = unwrap_n(f.lhs().rhs());
      const Formula* n2 = unwrap_n(f.rhs().rhs());
      need_shape(is(c, K::Cond) && n1 && same(*n1, c) && is(f.rhs().lhs(), K::Not) && same(f.rhs().lhs().operand(), c) &&
                     n2 && is(*n2, K::Not) && same(n2->operand(), c),
                 by, p);
    } else if (by == "C6") {
      need_shape(is(f, K::Not) && is(f.operand(), K::Cond) && is(f.operand().antecedent(), K::True) &&
                     is(f.operand().consequent(), K::False),
                 by, "~(true ~> false)");
    } else if (by == "F1") {
      check_f1(f, line.term);
    } else if (by == "F2") {
      const std::string p = "forall x (phi => psi) => (forall x phi => forall x psi)";
      need_shape(is(f, K::Implies) && is(f.lhs(), K::Forall) && is(f.lhs().body(), K::Implies) &&
                     is(f.rhs(), K::Implies) && is(f.rhs().lhs(), K::Forall) && is(f.rhs().rhs(), K::Forall),
                 by, p);
      const std::string& x = f.lhs().variable();
      need_shape(f.rhs().lhs().variable() == x && f.rhs().rhs().variable() == x &&
                     same(f.lhs().body().lhs(), f.rhs().lhs().body()) && same(f.lhs().body().rhs(), f.rhs().rhs().body()),
                 by, p);
    } else if (by == "F3") {
      need_shape(is(f, K::Implies) && is(f.rhs(), K::Forall) && same(f.lhs(), f.rhs().body()), by, "phi => forall x phi");
      if (occurs_free(f.lhs(), f.rhs().variable()))
        fail(E::Freshness, "F3: " + f.rhs().variable() + " occurs free in " + print_formula(f.lhs()));
    } else if (by == "F4") {
      const std::string p = "x = y => (phi1 => phi2)";
      need_shape(is(f, K::Implies) && is(f.lhs(), K::Equal) && f.lhs().args()[0].is_variable() &&
                     f.lhs().args()[1].is_variable() && is(f.rhs(), K::Implies),
                 by, p);
      const Formula& phi1 = f.rhs().lhs();
      if (has_quantifier(phi1)) fail(E::Shape, "F4: phi1 must be quantifier-free");
      if (!replaced(phi1, f.rhs().rhs(), f.lhs().args()[0].name(), f.lhs().args()[1].name()))
        fail(E::Shape, "F4: phi2 is not phi1 with occurrences of " + f.lhs().args()[0].name() + " replaced by " +
                           f.lhs().args()[1].name());
    } else if (by == "F5") {
      const std::string p = "x != y => N(x != y)";
      need_shape(is(f, K::Implies) && is(f.lhs(), K::Not) && is(f.lhs().operand(), K::Equal), by, p);
      const Formula& eq = f.lhs().operand();
      const Formula* n = unwrap_n(f.rhs());
      need_shape(eq.args()[0].is_variable() && eq.args()[1].is_variable() && n && *n == f.lhs(), by, p);
    } else if (by == "MP") {
      if (cited.size() != 2) fail(E::Arity, "MP cites two lines");
      const bool ok = [&] {
        for (int i : {0, 1}) {
          const Formula& imp = *cited[static_cast<std::size_t>(1 - i)];
          if (is(imp, K::Implies) && same(imp.lhs(), *cited[static_cast<std::size_t>(i)]) && same(imp.rhs(), f))
            return true;
        }
        return false;
      }();
      if (!ok) fail(E::ConclusionMismatch, "MP: cited lines are not phi and phi => this line");
    } else if (by == "Gen") {
      if (cited.size() != 1) fail(E::Arity, "Gen cites one line");
      need_shape(is(f, K::Forall) && same(f.body(), *cited[0]), by, "forall x phi, from phi");
    } else if (by == "R1") {
      if (cited.size() != 1) fail(E::Arity, "R1 cites one line");
      const Formula& premise = *cited[0];
      const std::string p = "(phi1 ~> psi) <=> (phi2 ~> psi), from phi1 <=> phi2";
      need_shape(is(premise, K::Iff) && is(f, K::Iff) && is(f.lhs(), K::Cond) && is(f.rhs(), K::Cond) &&
                     same(f.lhs().antecedent(), premise.lhs()) && same(f.rhs().antecedent(), premise.rhs()) &&
                     same(f.lhs().consequent(), f.rhs().consequent()),
                 by, p);
    } else if (by == "R2") {
      if (cited.size() != 1) fail(E::Arity, "R2 cites one line");
      const Formula& premise = *cited[0];
      const std::string p = "(phi ~> psi1) => (phi ~> psi2), from psi1 => psi2";
      need_shape(is(premise, K::Implies) && is(f, K::Implies) && is(f.lhs(), K::Cond) && is(f.rhs(), K::Cond) &&
                     same(f.lhs().consequent(), premise.lhs()) && same(f.rhs().consequent(), premise.rhs()) &&
                     same(f.lhs().antecedent(), f.rhs().antecedent()),
                 by, p);
    } else {
      fail(E::UnknownRule, "unknown axiom or rule " + by);
    }
    return obligations_;
  }

 private:
  void check_f1(const Formula& f, const std::optional<Term>& given) {
    need_shape(is(f, K::Implies) && is(f.lhs(), K::Forall), "F1", "forall x phi => phi[x/t]");
    const std::string& x = f.lhs().variable();
    const Formula& phi = f.lhs().body();
    std::optional<Term> t = given;
    if (!t) t = match_instance(phi, x, f.rhs());
    if (!t) fail(E::ConclusionMismatch, "F1: " + print_formula(f.rhs()) + " is not an instance of " + print_formula(phi));
    Formula instance = phi;
    try {
      instance = substitute(phi, x, *t);
    } catch (const NotRigidError&) {
      fail(E::Freshness, "F1-substitutability: " + print_term(*t) + " is not a variable and " + print_formula(phi) +
                             " has conditionals");
    } catch (const CaptureError&) {
      fail(E::Freshness, "F1-substitutability: " + print_term(*t) + " would be captured in " + print_formula(phi));
    }
    if (!same(instance, f.rhs()))
      fail(E::ConclusionMismatch, "F1: " + print_formula(phi) + " with " + x + " := " + print_term(*t) + " is " +
                                      print_formula(instance));
  }

  const HilbertProof& proof_;
  const CheckPolicy& policy_;
  std::vector<Obligation> obligations_;
};

}  // namespace

CheckReport check_hilbert_proof(const HilbertProof& proof, const CheckPolicy& policy) {
  CheckReport report;
  Checker checker(proof, policy);
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    StepVerdict v;
    v.id = static_cast<int>(i + 1);
    v.rule = proof.lines[i].by;
    try {
      v.obligations = checker.check(i);
      v.ok = true;
      for (const auto& o : v.obligations)
        if (o.assumed) report.assumptions.push_back("line " + std::to_string(v.id) + ": " + print_formula(o.goal));
    } catch (const LineError& e) {
      v.error = e.kind;
      v.message = e.message;
    } catch (const std::exception& e) {
      v.error = E::Shape;
      v.message = e.what();
    }
    report.steps.push_back(std::move(v));
  }
  if (proof.lines.empty()) report.script_errors.push_back("proof has no lines");
  report.accepted = report.script_errors.empty() &&
                    std::all_of(report.steps.begin(), report.steps.end(), [](const StepVerdict& s) { return s.ok; });
  return report;
}

}  // namespace condlog
