// Quantifier-free problems: case splitting over atoms, each partial
// assignment checked for consistency with congruence closure.

#include <map>
#include <numeric>

#include "oracle/internal.hpp"

namespace condlog::oracle {

namespace {

bool quantifier_free(const Formula& f) {
  if (f.is_quantifier() || f.is_conditional()) return false;
  for (const auto& c : f.children())
    if (!quantifier_free(c)) return false;
  return true;
}

struct TermNode {
  std::string symbol;
  std::vector<int> args;
  bool is_apply;
};

class Ground {
 public:
  explicit Ground(const Formula& f) : formula_(f) { collect(f); }

  std::size_t atom_count() const { return atoms_.size(); }

  // Kleene evaluation under the partial assignment: 1, 0, or -1 (unknown).
  int eval(const Formula& f) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return 1;
      case K::False: return 0;
      case K::Not: {
        const int v = eval(f.operand());
        return v < 0 ? -1 : 1 - v;
      }
      case K::And: {
        const int a = eval(f.lhs());
        if (a == 0) return 0;
        const int b = eval(f.rhs());
        if (b == 0) return 0;
        return a == 1 && b == 1 ? 1 : -1;
      }
      case K::Or: {
        const int a = eval(f.lhs());
        if (a == 1) return 1;
        const int b = eval(f.rhs());
        if (b == 1) return 1;
        return a == 0 && b == 0 ? 0 : -1;
      }
      case K::Implies: {
        const int a = eval(f.lhs());
        if (a == 0) return 1;
        const int b = eval(f.rhs());
        if (b == 1) return 1;
        return a == 1 && b == 0 ? 0 : -1;
      }
      case K::Iff: {
        const int a = eval(f.lhs()), b = eval(f.rhs());
        if (a < 0 || b < 0) return -1;
        return a == b;
      }
      default:
        return value_[atom_index_.at(f)];
    }
  }

  // Satisfying partial assignment search. Returns true when found; the
  // assignment and congruence classes stay in place for model building.
  bool search(std::uint64_t& nodes) {
    if (nodes-- == 0) throw ResourceError("ground search budget exhausted");
    const int v = eval(formula_);
    if (v == 0 || !consistent()) return false;
    if (v == 1) return true;
    std::size_t next = 0;
    while (next < value_.size() && value_[next] >= 0) ++next;
    if (next == value_.size()) return false;
    for (int b : {1, 0}) {
      value_[next] = b;
      if (search(nodes)) return true;
    }
    value_[next] = -1;
    return false;
  }

  PSStructure model(const Vocabulary& vocab) const {
    std::map<int, Element> elem;
    for (std::size_t t = 0; t < terms_.size(); ++t) elem.emplace(find(static_cast<int>(t)), static_cast<Element>(elem.size()));
    PSStructure m;
    const int size = std::max<int>(1, static_cast<int>(elem.size()));
    for (int i = 1; i <= size; ++i) m.domain.push_back("d" + std::to_string(i));
    World w{"w1", ExpPoly(1), {}};
    auto element_of = [&](int t) { return elem.at(find(t)); };
    for (const auto& c : vocab.constants) {
      auto it = term_index_.find(Term::constant(c));
      w.interp.constants[c] = it == term_index_.end() ? 0 : element_of(it->second);
    }
    for (const auto& [f, arity] : vocab.functions) {
      auto& table = w.interp.functions[f];
      std::vector<Element> tuple(static_cast<std::size_t>(arity), 0);
      while (true) {
        table[tuple] = 0;
        for (std::size_t t = 0; t < terms_.size(); ++t) {
          const auto& n = terms_[t];
          if (!n.is_apply || n.symbol != f) continue;
          bool match = true;
          for (std::size_t i = 0; i < n.args.size() && match; ++i) match = element_of(n.args[i]) == tuple[i];
          if (match) {
            table[tuple] = element_of(static_cast<int>(t));
            break;
          }
        }
        std::size_t i = tuple.size();
        while (i > 0 && ++tuple[i - 1] == size) tuple[--i] = 0;
        if (i == 0) break;
      }
    }
    for (const auto& [p, arity] : vocab.predicates) w.interp.predicates[p];
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      const Formula& f = atoms_[a];
      if (f.kind() != Formula::Kind::Atom || value_[a] != 1) continue;
      Tuple t;
      for (const auto& arg : f.args()) t.push_back(element_of(term_index_.at(arg)));
      w.interp.predicates[f.predicate()].insert(t);
    }
    m.worlds.push_back(std::move(w));
    return m;
  }

 private:
  int intern(const Term& t) {
    if (auto it = term_index_.find(t); it != term_index_.end()) return it->second;
    TermNode n{t.name(), {}, t.kind() == Term::Kind::Apply};
    for (const auto& a : t.args()) n.args.push_back(intern(a));
    const int id = static_cast<int>(terms_.size());
    terms_.push_back(std::move(n));
    term_index_.emplace(t, id);
    parent_.push_back(id);
    return id;
  }

  void collect(const Formula& f) {
    using K = Formula::Kind;
    if (f.kind() == K::Atom || f.kind() == K::Equal) {
      for (const auto& t : f.args()) intern(t);
      if (atom_index_.emplace(f, static_cast<int>(atoms_.size())).second) {
        atoms_.push_back(f);
        value_.push_back(-1);
      }
      return;
    }
    for (const auto& c : f.children()) collect(c);
  }

  int find(int t) const {
    while (parent_[t] != t) t = parent_[t];
    return t;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

  bool consistent() {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      if (value_[a] == 1 && atoms_[a].kind() == Formula::Kind::Equal)
        unite(term_index_.at(atoms_[a].args()[0]), term_index_.at(atoms_[a].args()[1]));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < terms_.size(); ++i)
        for (std::size_t j = i + 1; j < terms_.size(); ++j) {
          const auto& s = terms_[i];
          const auto& t = terms_[j];
          if (!s.is_apply || !t.is_apply || s.symbol != t.symbol || find(static_cast<int>(i)) == find(static_cast<int>(j)))
            continue;
          bool congruent = true;
          for (std::size_t k = 0; k < s.args.size() && congruent; ++k) congruent = find(s.args[k]) == find(t.args[k]);
          if (congruent) changed |= unite(static_cast<int>(i), static_cast<int>(j));
        }
    }
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      if (value_[a] != 0) continue;
      const Formula& f = atoms_[a];
      if (f.kind() == Formula::Kind::Equal) {
        if (find(term_index_.at(f.args()[0])) == find(term_index_.at(f.args()[1]))) return false;
        continue;
      }
      for (std::size_t b = 0; b < atoms_.size(); ++b) {
        const Formula& g = atoms_[b];
        if (value_[b] != 1 || g.kind() != Formula::Kind::Atom || g.predicate() != f.predicate()) continue;
        bool same = true;
        for (std::size_t k = 0; k < f.args().size() && same; ++k)
          same = find(term_index_.at(f.args()[k])) == find(term_index_.at(g.args()[k]));
        if (same) return false;
      }
    }
    return true;
  }

  Formula formula_;
  std::vector<TermNode> terms_;
  std::map<Term, int> term_index_;
  std::vector<int> parent_;
  std::vector<Formula> atoms_;
  std::map<Formula, int> atom_index_;
  std::vector<int> value_;
};

}  // namespace

StageResult decide_ground(const Problem& p, int max_model_size) {
  if (!quantifier_free(p.goal)) return {Outcome::Open, std::nullopt, "not quantifier-free"};
  Formula query = Formula::negation(p.goal);
  for (const auto& h : p.hypotheses) {
    if (!quantifier_free(h)) return {Outcome::Open, std::nullopt, "not quantifier-free"};
    query = Formula::conjunction(h, query);
  }
  Ground g(query);
  std::uint64_t nodes = 2'000'000;
  try {
    if (!g.search(nodes)) return {Outcome::Proved, std::nullopt, "congruence closure"};
  } catch (const ResourceError&) {
    return {Outcome::Open, std::nullopt, "ground case split budget exhausted"};
  }
  PSStructure m = g.model(p.vocab);
  if (m.domain_size() > max_model_size)
    return {Outcome::Open, std::nullopt, "ground countermodel larger than the model size bound"};
  return {Outcome::Refuted, std::move(m), "congruence closure countermodel"};
}

}  // namespace condlog::oracle
