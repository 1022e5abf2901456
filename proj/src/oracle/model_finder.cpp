// Finite model search: depth-first assignment of interpretation cells, pruned
// by Kleene evaluation of every sentence on the partial interpretation.

#include <map>

#include "oracle/internal.hpp"

namespace condlog::oracle {

namespace {

struct CTerm {
  enum Kind { Var, Const, Fun } kind;
  int id;
  std::vector<CTerm> args;
};

struct CForm {
  Formula::Kind kind;
  int id = 0;  // predicate index, or the slot of a bound variable
  std::vector<CTerm> args;
  std::vector<CForm> kids;
};

class Finder {
 public:
  Finder(const std::vector<Formula>& sentences, const Vocabulary& vocab) {
    for (const auto& [p, a] : vocab.predicates) {
      pred_index_[p] = static_cast<int>(preds_.size());
      preds_.push_back({p, a});
    }
    for (const auto& [f, a] : vocab.functions) {
      fun_index_[f] = static_cast<int>(funs_.size());
      funs_.push_back({f, a});
    }
    for (const auto& c : vocab.constants) {
      const_index_[c] = static_cast<int>(consts_.size());
      consts_.push_back(c);
    }
    std::map<std::string, int> scope;
    for (const auto& s : sentences) sentences_.push_back(compile(s, scope));
  }

  std::optional<PSStructure> run(int d, std::uint64_t& nodes) {
    d_ = d;
    pred_offset_.assign(preds_.size(), 0);
    fun_offset_.assign(funs_.size(), 0);
    std::size_t pcells = 0, fcells = 0;
    for (std::size_t i = 0; i < preds_.size(); ++i) {
      pred_offset_[i] = pcells;
      pcells += cells(preds_[i].second);
    }
    for (std::size_t i = 0; i < funs_.size(); ++i) {
      fun_offset_[i] = fcells;
      fcells += cells(funs_[i].second);
    }
    pred_val_.assign(pcells, -1);
    fun_val_.assign(fcells, -1);
    const_val_.assign(consts_.size(), -1);
    env_.assign(slots_, -1);
    order_.clear();
    for (std::size_t i = 0; i < consts_.size(); ++i) order_.push_back({2, i});
    for (std::size_t i = 0; i < fcells; ++i) order_.push_back({1, i});
    for (std::size_t i = 0; i < pcells; ++i) order_.push_back({0, i});
    if (!dfs(0, -1, nodes)) return std::nullopt;
    return build();
  }

 private:
  std::size_t cells(int arity) const {
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(d_);
    return n;
  }

  CTerm compile(const Term& t, const std::map<std::string, int>& scope) {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        auto it = scope.find(t.name());
        if (it == scope.end()) throw std::invalid_argument("model finder: free variable " + t.name());
        return {CTerm::Var, it->second, {}};
      }
      case Term::Kind::Constant: return {CTerm::Const, const_index_.at(t.name()), {}};
      case Term::Kind::Apply: {
        CTerm out{CTerm::Fun, fun_index_.at(t.name()), {}};
        for (const auto& a : t.args()) out.args.push_back(compile(a, scope));
        return out;
      }
    }
    return {};
  }

  CForm compile(const Formula& f, std::map<std::string, int>& scope) {
    CForm out{f.kind(), 0, {}, {}};
    if (f.kind() == Formula::Kind::Atom) out.id = pred_index_.at(f.predicate());
    for (const auto& t : f.args()) out.args.push_back(compile(t, scope));
    if (f.is_quantifier()) {
      auto saved = scope.find(f.variable()) == scope.end() ? -1 : scope[f.variable()];
      out.id = slots_++;
      scope[f.variable()] = out.id;
      out.kids.push_back(compile(f.body(), scope));
      if (saved < 0)
        scope.erase(f.variable());
      else
        scope[f.variable()] = saved;
      return out;
    }
    for (const auto& c : f.children()) out.kids.push_back(compile(c, scope));
    return out;
  }

  int term(const CTerm& t) const {
    switch (t.kind) {
      case CTerm::Var: return env_[t.id];
      case CTerm::Const: return const_val_[t.id];
      case CTerm::Fun: {
        std::size_t cell = 0;
        for (const auto& a : t.args) {
          const int v = term(a);
          if (v < 0) return -1;
          cell = cell * static_cast<std::size_t>(d_) + static_cast<std::size_t>(v);
        }
        return fun_val_[fun_offset_[t.id] + cell];
      }
    }
    return -1;
  }

  int eval(const CForm& f) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::True: return 1;
      case K::False: return 0;
      case K::Atom: {
        std::size_t cell = 0;
        for (const auto& a : f.args) {
          const int v = term(a);
          if (v < 0) return -1;
          cell = cell * static_cast<std::size_t>(d_) + static_cast<std::size_t>(v);
        }
        return pred_val_[pred_offset_[f.id] + cell];
      }
      case K::Equal: {
        const int a = term(f.args[0]);
        if (a < 0) return -1;
        const int b = term(f.args[1]);
        if (b < 0) return -1;
        return a == b;
      }
      case K::Not: {
        const int v = eval(f.kids[0]);
        return v < 0 ? -1 : 1 - v;
      }
      case K::And:
      case K::Or: {
        const int dominant = f.kind == K::And ? 0 : 1;
        const int a = eval(f.kids[0]);
        if (a == dominant) return a;
        const int b = eval(f.kids[1]);
        if (b == dominant) return b;
        return a < 0 || b < 0 ? -1 : 1 - dominant;
      }
      case K::Implies: {
        const int a = eval(f.kids[0]);
        if (a == 0) return 1;
        const int b = eval(f.kids[1]);
        if (b == 1) return 1;
        return a == 1 && b == 0 ? 0 : -1;
      }
      case K::Iff: {
        const int a = eval(f.kids[0]);
        if (a < 0) return -1;
        const int b = eval(f.kids[1]);
        if (b < 0) return -1;
        return a == b;
      }
      case K::Forall:
      case K::Exists: {
        const int dominant = f.kind == K::Forall ? 0 : 1;
        const int saved = env_[f.id];
        int result = 1 - dominant;
        for (int e = 0; e < d_; ++e) {
          env_[f.id] = e;
          const int v = eval(f.kids[0]);
          if (v == dominant) {
            result = dominant;
            break;
          }
          if (v < 0) result = -1;
        }
        env_[f.id] = saved;
        return result;
      }
      default:
        throw std::logic_error("model finder: conditional in a first-order sentence");
    }
  }

  // -1 some sentence false, 1 all true, 0 undecided
  int status() {
    bool all = true;
    for (const auto& s : sentences_) {
      const int v = eval(s);
      if (v == 0) return -1;
      if (v < 0) all = false;
    }
    return all ? 1 : 0;
  }

  bool dfs(std::size_t pos, int max_const, std::uint64_t& nodes) {
    if (nodes == 0) throw ResourceError("model search budget exhausted");
    --nodes;
    const int s = status();
    if (s < 0) return false;
    if (s > 0) return true;
    if (pos == order_.size()) return false;
    const auto [kind, index] = order_[pos];
    if (kind == 2) {
      // Constants are interchangeable up to renaming of unused elements.
      const int limit = std::min(d_ - 1, max_const + 1);
      for (int e = 0; e <= limit; ++e) {
        const_val_[index] = e;
        if (dfs(pos + 1, std::max(max_const, e), nodes)) return true;
      }
      const_val_[index] = -1;
      return false;
    }
    if (kind == 1) {
      for (int e = 0; e < d_; ++e) {
        fun_val_[index] = e;
        if (dfs(pos + 1, max_const, nodes)) return true;
      }
      fun_val_[index] = -1;
      return false;
    }
    for (int b : {0, 1}) {
      pred_val_[index] = static_cast<signed char>(b);
      if (dfs(pos + 1, max_const, nodes)) return true;
    }
    pred_val_[index] = -1;
    return false;
  }

  Tuple decode(std::size_t cell, int arity) const {
    Tuple t(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<Element>(cell % static_cast<std::size_t>(d_));
      cell /= static_cast<std::size_t>(d_);
    }
    return t;
  }

  PSStructure build() const {
    PSStructure m;
    for (int i = 1; i <= d_; ++i) m.domain.push_back("d" + std::to_string(i));
    World w{"w1", ExpPoly(1), {}};
    for (std::size_t i = 0; i < preds_.size(); ++i) {
      auto& ext = w.interp.predicates[preds_[i].first];
      for (std::size_t c = 0; c < cells(preds_[i].second); ++c)
        if (pred_val_[pred_offset_[i] + c] == 1) ext.insert(decode(c, preds_[i].second));
    }
    for (std::size_t i = 0; i < funs_.size(); ++i) {
      auto& table = w.interp.functions[funs_[i].first];
      for (std::size_t c = 0; c < cells(funs_[i].second); ++c)
        table[decode(c, funs_[i].second)] = std::max(0, fun_val_[fun_offset_[i] + c]);
    }
    for (std::size_t i = 0; i < consts_.size(); ++i) w.interp.constants[consts_[i]] = std::max(0, const_val_[i]);
    m.worlds.push_back(std::move(w));
    return m;
  }

  std::vector<std::pair<std::string, int>> preds_, funs_;
  std::vector<std::string> consts_;
  std::map<std::string, int> pred_index_, fun_index_, const_index_;
  std::vector<CForm> sentences_;
  int slots_ = 0;

  int d_ = 1;
  std::vector<std::size_t> pred_offset_, fun_offset_;
  std::vector<signed char> pred_val_;
  std::vector<int> fun_val_, const_val_, env_;
  std::vector<std::pair<int, std::size_t>> order_;
};

}  // namespace

std::optional<PSStructure> find_model(const std::vector<Formula>& sentences, const Vocabulary& vocab, int min_size,
                                      int max_size, std::uint64_t node_budget) {
  Finder finder(sentences, vocab);
  std::uint64_t nodes = node_budget;
  for (int d = std::max(1, min_size); d <= max_size; ++d) {
    try {
      if (auto m = finder.run(d, nodes)) return m;
    } catch (const ResourceError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace condlog::oracle
