#include "condlog/search.hpp"

#include <set>
#include <string>

#include "condlog/substitution.hpp"

namespace condlog {

std::vector<ExpPoly> SearchBounds::default_templates() {
  const ExpPoly two_n = ExpPoly::term(1, 0, 2);
  return {ExpPoly(1), ExpPoly::n(), ExpPoly::n() - ExpPoly(1), two_n, two_n - ExpPoly(1), ExpPoly::term(1, 0, Rational(1, 2))};
}

namespace {

struct Slot {
  enum Kind { Predicate, Function, Constant } kind;
  std::string name;
  int arity;
};

std::vector<Tuple> all_tuples(int d, int arity) {
  std::vector<Tuple> out{{}};
  for (int i = 0; i < arity; ++i) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (Element e = 0; e < d; ++e) {
        Tuple u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

mpz_class ipow(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpz_class multiset_count(const mpz_class& kinds, int size) {
  // C(kinds + size - 1, size)
  mpz_class num = 1, den = 1;
  for (int i = 0; i < size; ++i) {
    num *= kinds + i;
    den *= i + 1;
  }
  return num / den;
}

// Enumerates every interpretation of the slots over a domain of size d, in
// mixed-radix order with the first slot varying slowest.
std::vector<Interpretation> interpretations(const std::vector<Slot>& slots, int d) {
  struct Digit {
    const Slot* slot;
    Tuple args;
    int radix;
  };
  std::vector<Digit> digits;
  for (const auto& s : slots) {
    if (s.kind == Slot::Constant) {
      digits.push_back({&s, {}, d});
      continue;
    }
    for (const auto& t : all_tuples(d, s.arity)) digits.push_back({&s, t, s.kind == Slot::Predicate ? 2 : d});
  }
  std::vector<Interpretation> out;
  std::vector<int> value(digits.size(), 0);
  while (true) {
    Interpretation in;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const auto& dg = digits[i];
      switch (dg.slot->kind) {
        case Slot::Predicate:
          in.predicates[dg.slot->name];
          if (value[i]) in.predicates[dg.slot->name].insert(dg.args);
          break;
        case Slot::Function: in.functions[dg.slot->name][dg.args] = value[i]; break;
        case Slot::Constant: in.constants[dg.slot->name] = value[i]; break;
      }
    }
    out.push_back(std::move(in));
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++value[i] < digits[i].radix) break;
      value[i] = 0;
      if (i == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

bool next_multiset(std::vector<std::size_t>& idx, std::size_t kinds) {
  std::size_t i = idx.size();
  while (i > 0) {
    --i;
    if (idx[i] + 1 < kinds) {
      ++idx[i];
      for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[i];
      return true;
    }
  }
  return false;
}

bool next_valuation(std::vector<Element>& vals, int d) {
  std::size_t i = vals.size();
  while (i > 0) {
    --i;
    if (++vals[i] < d) return true;
    vals[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<Countermodel> search_counterexample(std::span<const Formula> premises, const Formula& goal,
                                                  const SearchBounds& bounds, Mode mode, const Theory& theory) {
  if (bounds.max_worlds < 1 || bounds.max_domain < 1 || bounds.templates.empty())
    throw std::invalid_argument("search bounds must be positive with at least one weight template");

  Vocabulary vocab = Vocabulary::of(goal);
  std::set<std::string> fv = free_variables(goal);
  for (const auto& p : premises) {
    vocab.merge(Vocabulary::of(p));
    for (const auto& x : free_variables(p)) fv.insert(x);
  }
  for (const auto& s : theory.sentences) vocab.merge(Vocabulary::of(s));
  const std::vector<std::string> vars(fv.begin(), fv.end());

  std::vector<Slot> slots;
  for (const auto& [p, a] : vocab.predicates) slots.push_back({Slot::Predicate, p, a});
  for (const auto& [f, a] : vocab.functions) slots.push_back({Slot::Function, f, a});
  for (const auto& c : vocab.constants) slots.push_back({Slot::Constant, c, 0});

  // Size the whole space up front so the answer never depends on the cap.
  mpz_class total = 0;
  for (int d = 1; d <= bounds.max_domain; ++d) {
    mpz_class interps = 1;
    for (const auto& s : slots) {
      const mpz_class cells = ipow(static_cast<unsigned long>(d), static_cast<unsigned long>(s.arity));
      if (cells > 64) throw BoundsTooLarge("symbol " + s.name + " has too many cells to enumerate");
      const unsigned long radix = s.kind == Slot::Predicate ? 2 : static_cast<unsigned long>(d);
      interps *= ipow(radix, cells.get_ui());
      if (interps > bounds.enumeration_cap) throw BoundsTooLarge("too many interpretations over domain size " + std::to_string(d));
    }
    const mpz_class kinds = interps * static_cast<unsigned long>(bounds.templates.size());
    for (int w = 1; w <= bounds.max_worlds; ++w)
      total += multiset_count(kinds, w) * ipow(static_cast<unsigned long>(d), vars.size());
    if (total > bounds.enumeration_cap)
      throw BoundsTooLarge("search space exceeds the enumeration cap of " + std::to_string(bounds.enumeration_cap));
  }

  for (int d = 1; d <= bounds.max_domain; ++d) {
    PSStructure m;
    for (int i = 1; i <= d; ++i) m.domain.push_back("d" + std::to_string(i));
    std::vector<Interpretation> interps;
    for (auto& in : interpretations(slots, d)) {
      bool ok = true;
      if (!theory.sentences.empty()) {
        m.worlds = {World{"w", ExpPoly(1), in}};
        for (const auto& s : theory.sentences)
          if (!eval_fo(m, {}, 0, s)) {
            ok = false;
            break;
          }
      }
      if (ok) interps.push_back(std::move(in));
    }
    const std::size_t kinds = interps.size() * bounds.templates.size();
    if (kinds == 0) continue;
    for (int w = 1; w <= bounds.max_worlds; ++w) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(w), 0);
      do {
        m.worlds.clear();
        bool weights_ok = true;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          const auto& weight = bounds.templates[idx[i] % bounds.templates.size()];
          if (weight.eventual_sign() < 0) weights_ok = false;
          m.worlds.push_back({"w" + std::to_string(i + 1), weight, interps[idx[i] / bounds.templates.size()]});
        }
        if (!weights_ok || m.total_weight().eventual_sign() <= 0) continue;
        std::vector<Element> vals(vars.size(), 0);
        do {
          Valuation v;
          for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = vals[i];
          bool premises_hold = true;
          for (const auto& p : premises)
            if (!holds(m, v, p, mode)) {
              premises_hold = false;
              break;
            }
          if (premises_hold && !holds(m, v, goal, mode)) return Countermodel{m, v};
        } while (next_valuation(vals, d));
      } while (next_multiset(idx, kinds));
    }
  }
  return std::nullopt;
}

}  // namespace condlog
