// Saturation by binary resolution and factoring over clauses of
// hypotheses + not goal, with equality axiomatized.

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "oracle/internal.hpp"

namespace condlog::oracle {

namespace {

// Hash-consed terms: sym >= 0 is a function or constant symbol, sym < 0 the
// variable -(sym + 1).
struct TNode {
  int sym;
  std::vector<int> args;
};

class Bank {
 public:
  int make(int sym, std::vector<int> args = {}) {
    auto key = std::make_pair(sym, args);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({sym, std::move(args)});
    index_.emplace(std::move(key), id);
    return id;
  }
  int var(int v) { return make(-(v + 1)); }
  const TNode& at(int t) const { return nodes_[static_cast<std::size_t>(t)]; }
  static bool is_var(const TNode& n) { return n.sym < 0; }
  static int var_id(const TNode& n) { return -(n.sym + 1); }

 private:
  std::vector<TNode> nodes_;
  std::map<std::pair<int, std::vector<int>>, int> index_;
};

struct Lit {
  bool positive;
  int pred;  // 0 is equality
  std::vector<int> args;

  friend bool operator==(const Lit&, const Lit&) = default;
  friend auto operator<=>(const Lit&, const Lit&) = default;
};

using Clause = std::vector<Lit>;

struct Budget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Prover {
 public:
  explicit Prover(const OracleBudget& budget) : budget_(budget) {}

  void add_sentence(const Formula& f) {
    std::map<std::string, int> env;
    std::vector<int> univ;
    for (auto& c : cnf(f, true, env, univ)) input_.push_back(std::move(c));
  }

  void add_equality_axioms() {
    if (!uses_equality_) return;
    const int x = bank_.var(0), y = bank_.var(1), z = bank_.var(2);
    // reflexivity is built into normalize (x = x is dropped as valid) and the
    // equality resolution step in factors()
    input_.push_back({{false, 0, {x, y}}, {true, 0, {y, x}}});
    input_.push_back({{false, 0, {x, y}}, {false, 0, {y, z}}, {true, 0, {x, z}}});
    for (std::size_t f = 0; f < fun_arity_.size(); ++f) {
      const int k = fun_arity_[f];
      for (int i = 0; i < k; ++i) {
        std::vector<int> a, b;
        for (int j = 0; j < k; ++j) {
          a.push_back(j == i ? bank_.var(0) : bank_.var(j + 2));
          b.push_back(j == i ? bank_.var(1) : bank_.var(j + 2));
        }
        input_.push_back({{false, 0, {x, y}},
                          {true, 0, {bank_.make(static_cast<int>(f), a), bank_.make(static_cast<int>(f), b)}}});
      }
    }
    for (const auto& [name, info] : preds_) {
      const auto [p, k] = info;
      for (int i = 0; i < k; ++i) {
        std::vector<int> a, b;
        for (int j = 0; j < k; ++j) {
          a.push_back(j == i ? bank_.var(0) : bank_.var(j + 2));
          b.push_back(j == i ? bank_.var(1) : bank_.var(j + 2));
        }
        input_.push_back({{false, 0, {x, y}}, {false, p, a}, {true, p, b}});
      }
    }
  }

  // true: refutation found; false: saturated or out of budget
  bool run(std::string& detail) {
    try {
      for (auto& c : input_)
        if (admit(std::move(c))) return done(detail, "resolution refutation");
      int picks = 0;
      while (true) {
        std::size_t given;
        if (!pick(given, picks++)) {
          detail = "saturated without refutation";
          return false;
        }
        if (steps_++ >= budget_.max_steps) throw Budget("step budget exhausted");
        if (subsumed_by_active(clauses_[given])) continue;
        active_.push_back(given);
        for (std::size_t a : std::vector<std::size_t>(active_)) {
          for (auto& r : resolvents(clauses_[given], clauses_[a]))
            if (admit(std::move(r))) return done(detail, "resolution refutation");
        }
        for (auto& f : factors(clauses_[given]))
          if (admit(std::move(f))) return done(detail, "resolution refutation");
      }
    } catch (const Budget& e) {
      detail = e.what();
      return false;
    }
  }

 private:
  static bool done(std::string& detail, const char* msg) {
    detail = msg;
    return true;
  }

  int function_symbol(const std::string& name, int arity) {
    auto it = funs_.find(name);
    if (it != funs_.end()) return it->second;
    const int id = static_cast<int>(fun_arity_.size());
    funs_.emplace(name, id);
    fun_arity_.push_back(arity);
    return id;
  }

  int predicate_symbol(const std::string& name, int arity) {
    auto it = preds_.find(name);
    if (it != preds_.end()) return it->second.first;
    const int id = static_cast<int>(preds_.size()) + 1;
    preds_.emplace(name, std::make_pair(id, arity));
    return id;
  }

  int term(const Term& t, const std::map<std::string, int>& env) {
    if (t.is_variable()) {
      auto it = env.find(t.name());
      if (it == env.end()) throw std::logic_error("resolution: free variable " + t.name());
      return it->second;
    }
    std::vector<int> args;
    for (const auto& a : t.args()) args.push_back(term(a, env));
    return bank_.make(function_symbol(t.name(), static_cast<int>(t.args().size())), std::move(args));
  }

  std::vector<Clause> product(const std::vector<Clause>& a, const std::vector<Clause>& b) {
    if (a.size() * b.size() > static_cast<std::size_t>(budget_.max_clauses)) throw Budget("clause form too large");
    std::vector<Clause> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        Clause c = x;
        c.insert(c.end(), y.begin(), y.end());
        out.push_back(std::move(c));
      }
    return out;
  }

  static std::vector<Clause> join(std::vector<Clause> a, const std::vector<Clause>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::vector<Clause> cnf(const Formula& f, bool pos, std::map<std::string, int>& env, std::vector<int>& univ) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return pos ? std::vector<Clause>{} : std::vector<Clause>{Clause{}};
      case K::False: return pos ? std::vector<Clause>{Clause{}} : std::vector<Clause>{};
      case K::Atom: {
        std::vector<int> args;
        for (const auto& a : f.args()) args.push_back(term(a, env));
        return {{Lit{pos, predicate_symbol(f.predicate(), static_cast<int>(args.size())), std::move(args)}}};
      }
      case K::Equal:
        uses_equality_ = true;
        return {{Lit{pos, 0, {term(f.args()[0], env), term(f.args()[1], env)}}}};
      case K::Not: return cnf(f.operand(), !pos, env, univ);
      case K::And:
        return pos ? join(cnf(f.lhs(), true, env, univ), cnf(f.rhs(), true, env, univ))
                   : product(cnf(f.lhs(), false, env, univ), cnf(f.rhs(), false, env, univ));
      case K::Or:
        return pos ? product(cnf(f.lhs(), true, env, univ), cnf(f.rhs(), true, env, univ))
                   : join(cnf(f.lhs(), false, env, univ), cnf(f.rhs(), false, env, univ));
      case K::Implies:
        return pos ? product(cnf(f.lhs(), false, env, univ), cnf(f.rhs(), true, env, univ))
                   : join(cnf(f.lhs(), true, env, univ), cnf(f.rhs(), false, env, univ));
      case K::Iff:
        if (pos)
          return join(product(cnf(f.lhs(), false, env, univ), cnf(f.rhs(), true, env, univ)),
                      product(cnf(f.lhs(), true, env, univ), cnf(f.rhs(), false, env, univ)));
        return join(product(cnf(f.lhs(), true, env, univ), cnf(f.rhs(), true, env, univ)),
                    product(cnf(f.lhs(), false, env, univ), cnf(f.rhs(), false, env, univ)));
      case K::Forall:
      case K::Exists: {
        const bool universal = (f.kind() == K::Forall) == pos;
        auto saved = env.find(f.variable()) == env.end() ? std::optional<int>() : std::optional<int>(env[f.variable()]);
        if (universal) {
          const int v = bank_.var(next_var_++);
          env[f.variable()] = v;
          univ.push_back(v);
        } else {
          const int sk = function_symbol("$sk" + std::to_string(skolems_++), static_cast<int>(univ.size()));
          env[f.variable()] = bank_.make(sk, univ);
        }
        auto out = cnf(f.body(), pos, env, univ);
        if (universal) univ.pop_back();
        if (saved)
          env[f.variable()] = *saved;
        else
          env.erase(f.variable());
        return out;
      }
      default:
        throw std::logic_error("resolution: conditional in a first-order sentence");
    }
  }

  // --- substitutions -------------------------------------------------------

  int deref(int t, const std::vector<int>& s) const {
    while (true) {
      const auto& n = bank_.at(t);
      if (!Bank::is_var(n)) return t;
      const int v = Bank::var_id(n);
      if (v >= static_cast<int>(s.size()) || s[static_cast<std::size_t>(v)] < 0) return t;
      t = s[static_cast<std::size_t>(v)];
    }
  }

  bool occurs(int v, int t, const std::vector<int>& s) const {
    t = deref(t, s);
    const auto& n = bank_.at(t);
    if (Bank::is_var(n)) return Bank::var_id(n) == v;
    for (int a : n.args)
      if (occurs(v, a, s)) return true;
    return false;
  }

  bool unify(int a, int b, std::vector<int>& s) const {
    a = deref(a, s);
    b = deref(b, s);
    if (a == b) return true;
    const auto& na = bank_.at(a);
    const auto& nb = bank_.at(b);
    if (Bank::is_var(na) || Bank::is_var(nb)) {
      const int v = Bank::is_var(na) ? Bank::var_id(na) : Bank::var_id(nb);
      const int t = Bank::is_var(na) ? b : a;
      if (occurs(v, t, s)) return false;
      if (v >= static_cast<int>(s.size())) s.resize(static_cast<std::size_t>(v) + 1, -1);
      s[static_cast<std::size_t>(v)] = t;
      return true;
    }
    if (na.sym != nb.sym || na.args.size() != nb.args.size()) return false;
    for (std::size_t i = 0; i < na.args.size(); ++i)
      if (!unify(na.args[i], nb.args[i], s)) return false;
    return true;
  }

  int apply(int t, const std::vector<int>& s) {
    t = deref(t, s);
    const TNode n = bank_.at(t);
    if (Bank::is_var(n) || n.args.empty()) return t;
    std::vector<int> args;
    for (int a : n.args) args.push_back(apply(a, s));
    return bank_.make(n.sym, std::move(args));
  }

  int rename(int t, std::map<int, int>& names) {
    const TNode n = bank_.at(t);
    if (Bank::is_var(n)) {
      auto [it, fresh] = names.emplace(Bank::var_id(n), static_cast<int>(names.size()));
      return bank_.var(it->second);
    }
    if (n.args.empty()) return t;
    std::vector<int> args;
    for (int a : n.args) args.push_back(rename(a, names));
    return bank_.make(n.sym, std::move(args));
  }

  int shift(int t, int offset) {
    const TNode n = bank_.at(t);
    if (Bank::is_var(n)) return bank_.var(Bank::var_id(n) + offset);
    if (n.args.empty()) return t;
    std::vector<int> args;
    for (int a : n.args) args.push_back(shift(a, offset));
    return bank_.make(n.sym, std::move(args));
  }

  int max_var(int t) const {
    const auto& n = bank_.at(t);
    if (Bank::is_var(n)) return Bank::var_id(n);
    int m = -1;
    for (int a : n.args) m = std::max(m, max_var(a));
    return m;
  }

  int var_count(const Clause& c) const {
    int m = -1;
    for (const auto& l : c)
      for (int a : l.args) m = std::max(m, max_var(a));
    return m + 1;
  }

  // Applies s, drops duplicate literals, renames variables canonically.
  // Returns false for tautologies.
  bool normalize(Clause& c, const std::vector<int>& s) {
    for (auto& l : c)
      for (auto& a : l.args) a = apply(a, s);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].positive && c[i].pred == 0 && c[i].args[0] == c[i].args[1]) return false;
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i].positive != c[j].positive && c[i].pred == c[j].pred && c[i].args == c[j].args) return false;
    }
    std::map<int, int> names;
    for (auto& l : c)
      for (auto& a : l.args) a = rename(a, names);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return true;
  }

  int weight(int t) const {
    int w = 1;
    for (int a : bank_.at(t).args) w += weight(a);
    return w;
  }

  int weight(const Clause& c) const {
    int w = 0;
    for (const auto& l : c) {
      ++w;
      for (int a : l.args) w += weight(a);
    }
    return w;
  }

  // --- subsumption -----------------------------------------------------------

  bool match(int p, int t, std::vector<int>& s) const {
    const auto& np = bank_.at(p);
    if (Bank::is_var(np)) {
      const auto v = static_cast<std::size_t>(Bank::var_id(np));
      if (v >= s.size()) s.resize(v + 1, -1);
      if (s[v] >= 0) return s[v] == t;
      s[v] = t;
      return true;
    }
    const auto& nt = bank_.at(t);
    if (np.sym != nt.sym || np.args.size() != nt.args.size()) return false;
    for (std::size_t i = 0; i < np.args.size(); ++i)
      if (!match(np.args[i], nt.args[i], s)) return false;
    return true;
  }

  bool subsumes(const Clause& c, const Clause& d, std::size_t i, std::vector<int>& s) const {
    if (i == c.size()) return true;
    for (const auto& l : d) {
      if (l.positive != c[i].positive || l.pred != c[i].pred) continue;
      std::vector<int> trial = s;
      bool ok = true;
      for (std::size_t k = 0; k < l.args.size() && ok; ++k) ok = match(c[i].args[k], l.args[k], trial);
      if (ok && subsumes(c, d, i + 1, trial)) return true;
    }
    return false;
  }

  bool subsumed_by_active(const Clause& d) const {
    for (std::size_t a : active_) {
      const Clause& c = clauses_[a];
      if (c.size() > d.size()) continue;
      std::vector<int> s;
      if (subsumes(c, d, 0, s)) return true;
    }
    return false;
  }

  // --- given-clause loop -------------------------------------------------------

  // Stores a new clause; true if it is empty.
  bool admit(Clause c) {
    if (!normalize(c, {})) return false;
    if (c.empty()) return true;
    if (!seen_.insert(c).second) return false;
    if (subsumed_by_active(c)) return false;
    if (static_cast<int>(clauses_.size()) >= budget_.max_clauses) throw Budget("clause budget exhausted");
    const std::size_t id = clauses_.size();
    by_weight_.push({weight(c), id});
    clauses_.push_back(std::move(c));
    return false;
  }

  bool pick(std::size_t& given, int turn) {
    // Mostly lightest first, every fifth pick the oldest.
    while (true) {
      if (turn % 5 == 4) {
        while (oldest_ < clauses_.size() && taken_.count(oldest_)) ++oldest_;
        if (oldest_ < clauses_.size()) {
          given = oldest_;
          taken_.insert(given);
          return true;
        }
      }
      while (!by_weight_.empty() && taken_.count(by_weight_.top().second)) by_weight_.pop();
      if (by_weight_.empty()) return false;
      given = by_weight_.top().second;
      by_weight_.pop();
      taken_.insert(given);
      return true;
    }
  }

  std::vector<Clause> resolvents(const Clause& g, const Clause& other) {
    const int offset = var_count(g);
    Clause c;
    for (const auto& l : other) {
      Lit m = l;
      for (auto& a : m.args) a = shift(a, offset);
      c.push_back(std::move(m));
    }
    std::vector<Clause> out;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (g[i].positive == c[j].positive || g[i].pred != c[j].pred) continue;
        std::vector<int> s;
        bool ok = true;
        for (std::size_t k = 0; k < g[i].args.size() && ok; ++k) ok = unify(g[i].args[k], c[j].args[k], s);
        if (!ok) continue;
        Clause r;
        for (std::size_t k = 0; k < g.size(); ++k)
          if (k != i) r.push_back(g[k]);
        for (std::size_t k = 0; k < c.size(); ++k)
          if (k != j) r.push_back(c[k]);
        if (normalize(r, s)) out.push_back(std::move(r));
      }
    return out;
  }

  // Factors, plus equality resolution: s != t with s, t unifiable is dropped.
  std::vector<Clause> factors(const Clause& g) {
    std::vector<Clause> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].positive || g[i].pred != 0) continue;
      std::vector<int> s;
      if (!unify(g[i].args[0], g[i].args[1], s)) continue;
      Clause r;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (k != i) r.push_back(g[k]);
      if (normalize(r, s)) out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g[i].positive != g[j].positive || g[i].pred != g[j].pred) continue;
        std::vector<int> s;
        bool ok = true;
        for (std::size_t k = 0; k < g[i].args.size() && ok; ++k) ok = unify(g[i].args[k], g[j].args[k], s);
        if (!ok) continue;
        Clause r;
        for (std::size_t k = 0; k < g.size(); ++k)
          if (k != j) r.push_back(g[k]);
        if (normalize(r, s)) out.push_back(std::move(r));
      }
    return out;
  }

  OracleBudget budget_;
  Bank bank_;
  std::map<std::string, int> funs_;
  std::vector<int> fun_arity_;
  std::map<std::string, std::pair<int, int>> preds_;
  bool uses_equality_ = false;
  int next_var_ = 0;
  int skolems_ = 0;

  std::vector<Clause> input_;
  std::vector<Clause> clauses_;
  std::set<Clause> seen_;
  std::vector<std::size_t> active_;
  std::priority_queue<std::pair<int, std::size_t>, std::vector<std::pair<int, std::size_t>>, std::greater<>> by_weight_;
  std::set<std::size_t> taken_;
  std::size_t oldest_ = 0;
  int steps_ = 0;
};

}  // namespace

StageResult refute_by_resolution(const Problem& p, const OracleBudget& budget) {
  Prover prover(budget);
  std::string detail;
  try {
    for (const auto& h : p.hypotheses) prover.add_sentence(h);
    prover.add_sentence(Formula::negation(p.goal));
    prover.add_equality_axioms();
    if (prover.run(detail)) return {Outcome::Proved, std::nullopt, detail};
  } catch (const Budget& e) {
    detail = e.what();
  }
  return {Outcome::Open, std::nullopt, detail};
}

}  // namespace condlog::oracle
