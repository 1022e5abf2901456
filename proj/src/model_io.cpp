#include "condlog/model_io.hpp"

#include <fstream>
#include <sstream>

namespace condlog {

using nlohmann::json;

namespace {

mpz_class integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()), 10);
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw FormatError("expected an integer, got " + j.dump());
}

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Element element(const std::map<std::string, Element>& index, const json& j) {
  if (!j.is_string()) throw FormatError("domain element must be a name, got " + j.dump());
  auto it = index.find(j.get<std::string>());
  if (it == index.end()) throw FormatError("unknown domain element " + j.dump());
  return it->second;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json expoly_to_json(const ExpPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms())
    out.push_back({integer_json(t.coeff.get_num()), integer_json(t.coeff.get_den()), t.degree,
                   integer_json(t.base.get_num()), integer_json(t.base.get_den())});
  return out;
}

ExpPoly expoly_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("weight must be a list of [a_num, a_den, k, c_num, c_den] terms");
  std::vector<ExpTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 5) throw FormatError("weight term must have five entries: " + t.dump());
    const mpz_class an = integer(t[0]), ad = integer(t[1]), cn = integer(t[3]), cd = integer(t[4]);
    if (ad == 0 || cd == 0) throw FormatError("zero denominator in weight term " + t.dump());
    if (!t[2].is_number_unsigned() && !(t[2].is_number_integer() && t[2].get<long long>() >= 0))
      throw FormatError("weight degree must be a nonnegative integer: " + t.dump());
    Rational a(an, ad), c(cn, cd);
    a.canonicalize();
    c.canonicalize();
    if (c <= 0) throw FormatError("weight base must be positive: " + t.dump());
    terms.push_back({a, static_cast<unsigned>(t[2].get<long long>()), c});
  }
  return ExpPoly(std::move(terms));
}

PSStructure structure_from_json(const json& j) {
  PSStructure m;
  std::map<std::string, Element> index;
  for (const auto& d : member(j, "domain")) {
    if (!d.is_string()) throw FormatError("domain element must be a string: " + d.dump());
    if (!index.emplace(d.get<std::string>(), m.domain_size()).second) throw FormatError("duplicate domain element " + d.dump());
    m.domain.push_back(d.get<std::string>());
  }
  for (const auto& wj : member(j, "worlds")) {
    World w;
    w.name = wj.contains("name") ? wj.at("name").get<std::string>() : "w" + std::to_string(m.worlds.size() + 1);
    w.weight = expoly_from_json(member(wj, "weight"));
    if (wj.contains("predicates"))
      for (const auto& [p, ext] : wj.at("predicates").items()) {
        auto& set = w.interp.predicates[p];
        for (const auto& tup : ext) {
          if (!tup.is_array()) throw FormatError("predicate tuple must be a list: " + tup.dump());
          Tuple t;
          for (const auto& e : tup) t.push_back(element(index, e));
          set.insert(t);
        }
      }
    if (wj.contains("functions"))
      for (const auto& [f, table] : wj.at("functions").items()) {
        auto& map = w.interp.functions[f];
        for (const auto& row : table) {
          if (!row.is_array() || row.size() < 2) throw FormatError("function row needs arguments and a value: " + row.dump());
          Tuple t;
          for (std::size_t i = 0; i + 1 < row.size(); ++i) t.push_back(element(index, row[i]));
          map[t] = element(index, row.back());
        }
      }
    if (wj.contains("constants"))
      for (const auto& [c, e] : wj.at("constants").items()) w.interp.constants[c] = element(index, e);
    m.worlds.push_back(std::move(w));
  }
  return m;
}

json structure_to_json(const PSStructure& m) {
  json worlds = json::array();
  for (const auto& w : m.worlds) {
    json preds = json::object(), funs = json::object(), consts = json::object();
    for (const auto& [p, ext] : w.interp.predicates) {
      json rows = json::array();
      for (const auto& t : ext) {
        json row = json::array();
        for (Element e : t) row.push_back(m.domain.at(e));
        rows.push_back(row);
      }
      preds[p] = rows;
    }
    for (const auto& [f, table] : w.interp.functions) {
      json rows = json::array();
      for (const auto& [args, value] : table) {
        json row = json::array();
        for (Element e : args) row.push_back(m.domain.at(e));
        row.push_back(m.domain.at(value));
        rows.push_back(row);
      }
      funs[f] = rows;
    }
    for (const auto& [c, e] : w.interp.constants) consts[c] = m.domain.at(e);
    worlds.push_back({{"name", w.name}, {"weight", expoly_to_json(w.weight)}, {"predicates", preds},
                      {"functions", funs}, {"constants", consts}});
  }
  return {{"domain", m.domain}, {"worlds", worlds}};
}

Valuation valuation_from_json(const PSStructure& m, const json& j) {
  std::map<std::string, Element> index;
  for (Element i = 0; i < m.domain_size(); ++i) index[m.domain[i]] = i;
  Valuation v;
  if (!j.is_object()) throw FormatError("valuation must be an object");
  for (const auto& [x, e] : j.items()) v[x] = element(index, e);
  return v;
}

json valuation_to_json(const PSStructure& m, const Valuation& v) {
  json out = json::object();
  for (const auto& [x, e] : v) out[x] = m.domain.at(e);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

PSStructure read_model_file(const std::string& path) {
  try {
    return structure_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace condlog
