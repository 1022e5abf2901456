#include "condlog/structure.hpp"

#include "condlog/eval.hpp"
#include "condlog/parse.hpp"

namespace condlog {

ExpPoly PSStructure::total_weight() const {
  ExpPoly total;
  for (const auto& w : worlds) total += w.weight;
  return total;
}

namespace {

void check_tuple(const Tuple& t, int size, const std::string& what, ValidationReport& r) {
  for (Element e : t)
    if (e < 0 || e >= size) {
      r.valid = false;
      r.problems.push_back(what + " mentions an element outside the domain");
      return;
    }
}

}  // namespace

ValidationReport validate_structure(const PSStructure& m, const Theory& theory) {
  ValidationReport r;
  auto problem = [&](std::string s) {
    r.valid = false;
    r.problems.push_back(std::move(s));
  };
  const int d = m.domain_size();
  if (d == 0) problem("empty domain");
  if (m.worlds.empty()) problem("no worlds");
  if (!r.valid) return r;

  std::map<std::string, std::size_t> pred_arity, fun_arity;
  for (const auto& w : m.worlds) {
    const std::string where = " in world " + w.name;
    for (const auto& [p, ext] : w.interp.predicates)
      for (const auto& t : ext) {
        auto [it, fresh] = pred_arity.emplace(p, t.size());
        if (!fresh && it->second != t.size()) problem("predicate " + p + " used with two arities" + where);
        check_tuple(t, d, "predicate " + p + where, r);
      }
    for (const auto& [f, table] : w.interp.functions) {
      std::size_t entries = 0;
      for (const auto& [args, value] : table) {
        auto [it, fresh] = fun_arity.emplace(f, args.size());
        if (!fresh && it->second != args.size()) problem("function " + f + " used with two arities" + where);
        if (args.empty()) problem("function " + f + " has a nullary entry" + where);
        check_tuple(args, d, "function " + f + where, r);
        check_tuple({value}, d, "function " + f + where, r);
        ++entries;
      }
      if (!table.empty()) {
        std::size_t expected = 1;
        for (std::size_t i = 0; i < table.begin()->first.size(); ++i) expected *= static_cast<std::size_t>(d);
        if (entries != expected) problem("function " + f + " is not total" + where);
      }
    }
    for (const auto& [c, e] : w.interp.constants) check_tuple({e}, d, "constant " + c + where, r);
    if (w.weight.eventual_sign() < 0) problem("weight of world " + w.name + " is eventually negative");
  }
  for (const auto& w : m.worlds) {
    for (const auto& c : m.worlds.front().interp.constants)
      if (!w.interp.constants.count(c.first)) problem("constant " + c.first + " has no denotation in world " + w.name);
    for (const auto& f : m.worlds.front().interp.functions)
      if (!w.interp.functions.count(f.first)) problem("function " + f.first + " has no table in world " + w.name);
  }
  if (m.total_weight().eventual_sign() <= 0) problem("total weight is not eventually positive");
  if (!r.valid) return r;

  for (const auto& s : theory.sentences)
    for (std::size_t i = 0; i < m.worlds.size(); ++i) {
      try {
        if (!eval_fo(m, {}, i, s)) problem("world " + m.worlds[i].name + " violates " + print_formula(s));
      } catch (const EvalError& e) {
        problem("cannot evaluate " + print_formula(s) + " in world " + m.worlds[i].name + ": " + e.what());
      }
    }
  return r;
}

}  // namespace condlog
