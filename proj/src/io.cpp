#include "normgraph/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "normgraph/error.hpp"

namespace normgraph::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a string");
  return j.get<std::string>();
}

Int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<Int>();
}

Int residue(const Json& j, Int m, const std::string& where) {
  Int v = integer(j, where);
  if (v < 0 || v >= m) fail(where + ": " + std::to_string(v) + " is not a residue mod " + std::to_string(m));
  return v;
}

Json matrix_json(const std::vector<Vec>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

}  // namespace

std::string alphabet_name(const Alphabet& a) {
  if (a.is_vector_space()) {
    std::string s = "GF" + std::to_string(a.field());
    return a.rank() == 1 ? s : s + "^" + std::to_string(a.rank());
  }
  if (a.rank() == 0) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < a.rank(); ++i) s += (i ? "xZ" : "Z") + std::to_string(a.moduli()[i]);
  return s;
}

Json alphabet_to_json(const Alphabet& a) {
  if (a.is_vector_space()) return Json{{"field", a.field()}, {"dim", a.rank()}};
  return Json{{"cyclic", a.moduli()}};
}

Alphabet alphabet_from_json(const Json& j) {
  if (!j.is_object()) fail("alphabet: expected an object");
  try {
    if (j.contains("cyclic")) {
      if (j.size() != 1 || !j.at("cyclic").is_array()) fail("alphabet: bad cyclic description");
      std::vector<Int> m;
      for (const auto& x : j.at("cyclic")) m.push_back(integer(x, "cyclic modulus"));
      return Alphabet::cyclic(m);
    }
    if (j.size() != 2) fail("alphabet: expected {\"field\", \"dim\"} or {\"cyclic\"}");
    return Alphabet::vector_space(integer(field(j, "field", "alphabet"), "field"),
                                  static_cast<int>(integer(field(j, "dim", "alphabet"), "dim")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(std::string("alphabet: ") + e.what());
  }
}

Json to_json(const NormalRealization& r) {
  Json alph = Json::object();
  auto note = [&](const Alphabet& a) {
    auto name = alphabet_name(a);
    if (!alph.contains(name)) alph[name] = alphabet_to_json(a);
    return name;
  };
  Json symbols = Json::array(), states = Json::array(), constraints = Json::array();
  for (const auto& s : r.symbols) symbols.push_back({{"id", s.id}, {"alphabet", note(s.alphabet)}});
  for (const auto& s : r.states) {
    Json e{{"id", s.id}, {"alphabet", note(s.alphabet)}};
    if (s.iso) e["iso"] = matrix_json(s.iso->matrix());
    states.push_back(e);
  }
  for (const auto& c : r.constraints)
    constraints.push_back({{"id", c.id}, {"vars", c.vars}, {"generators", matrix_json(c.code.rows())}});
  Json out{{"alphabets", alph}, {"symbols", symbols}, {"states", states}, {"constraints", constraints}};
  if (!r.boundary.empty()) out["boundary"] = r.boundary;
  return out;
}

NormalRealization realization_from_json(const Json& j) {
  if (!j.is_object()) fail("realization: expected an object");
  static const std::set<std::string> known{"alphabets", "symbols", "states", "constraints", "boundary"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) fail("realization: unknown key \"" + k + "\"");

  std::map<std::string, Alphabet> alph;
  if (j.contains("alphabets")) {
    if (!j.at("alphabets").is_object()) fail("alphabets: expected an object");
    for (const auto& [k, v] : j.at("alphabets").items()) alph.emplace(k, alphabet_from_json(v));
  }
  auto lookup = [&](const Json& a, const std::string& where) {
    if (a.is_object()) return alphabet_from_json(a);
    auto name = text(a, where + " alphabet");
    auto it = alph.find(name);
    if (it == alph.end()) fail(where + ": unknown alphabet \"" + name + "\"");
    return it->second;
  };

  NormalRealization r;
  std::map<std::string, Alphabet> vars;
  auto declare = [&](const std::string& id, const Alphabet& a) {
    if (!vars.emplace(id, a).second) fail("duplicate variable \"" + id + "\"");
  };
  if (j.contains("symbols")) {
    if (!j.at("symbols").is_array()) fail("symbols: expected a list");
    for (const auto& s : j.at("symbols")) {
      auto id = text(field(s, "id", "symbol"), "symbol id");
      SymbolDef d{id, lookup(field(s, "alphabet", "symbol " + id), "symbol " + id)};
      declare(id, d.alphabet);
      r.symbols.push_back(d);
    }
  }
  if (j.contains("states")) {
    if (!j.at("states").is_array()) fail("states: expected a list");
    for (const auto& s : j.at("states")) {
      auto id = text(field(s, "id", "state"), "state id");
      StateDef d{id, lookup(field(s, "alphabet", "state " + id), "state " + id), std::nullopt};
      if (s.contains("iso")) {
        const auto& m = s.at("iso");
        const auto& mod = d.alphabet.moduli();
        if (!m.is_array() || m.size() != mod.size()) fail("state " + id + ": iso must be a square matrix");
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < mod.size(); ++i) {
          if (!m[i].is_array() || m[i].size() != mod.size()) fail("state " + id + ": iso must be a square matrix");
          Vec row;
          for (const auto& x : m[i]) row.push_back(residue(x, mod[i], "state " + id + " iso"));
          rows.push_back(row);
        }
        try {
          d.iso = Homomorphism(d.alphabet, d.alphabet, rows);
        } catch (const Error& e) {
          fail("state " + id + ": " + e.what());
        }
      }
      for (const auto& [k, v] : s.items())
        if (k != "id" && k != "alphabet" && k != "iso") fail("state " + id + ": unknown key \"" + k + "\"");
      declare(id, d.alphabet);
      r.states.push_back(d);
    }
  }
  if (j.contains("constraints")) {
    if (!j.at("constraints").is_array()) fail("constraints: expected a list");
    for (const auto& c : j.at("constraints")) {
      auto id = text(field(c, "id", "constraint"), "constraint id");
      std::string where = "constraint " + id;
      const auto& vj = field(c, "vars", where);
      if (!vj.is_array()) fail(where + ": vars must be a list");
      std::vector<std::string> vs;
      std::vector<Factor> fs;
      for (const auto& v : vj) {
        auto name = text(v, where + " var");
        auto it = vars.find(name);
        if (it == vars.end()) fail(where + ": unknown variable \"" + name + "\"");
        for (const auto& seen : vs)
          if (seen == name) fail(where + ": variable \"" + name + "\" listed twice");
        vs.push_back(name);
        fs.push_back({name, it->second});
      }
      ProductSpace space(fs);
      const auto& gj = field(c, "generators", where);
      if (!gj.is_array()) fail(where + ": generators must be a list");
      std::vector<Element> rows;
      for (const auto& g : gj) {
        if (!g.is_array() || g.size() != space.width())
          fail(where + ": generator rows must have " + std::to_string(space.width()) + " entries");
        Element row;
        for (std::size_t k = 0; k < g.size(); ++k) row.push_back(residue(g[k], space.moduli()[k], where));
        rows.push_back(row);
      }
      r.constraints.push_back({id, vs, CodeSubgroup(space, rows)});
    }
  }
  if (j.contains("boundary")) {
    if (!j.at("boundary").is_array()) fail("boundary: expected a list");
    for (const auto& b : j.at("boundary")) r.boundary.push_back(text(b, "boundary"));
    r.sort_boundary();
  }
  return r;
}

std::string serialize(const NormalRealization& r) { return to_json(r).dump(2) + "\n"; }

NormalRealization parse(const std::string& s) {
  Json j;
  try {
    j = Json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
  return realization_from_json(j);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

NormalRealization load(const std::string& path) { return realization_from_json(load_json(path)); }

void write_text(const std::string& path, const std::string& s) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << s;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

void save(const NormalRealization& r, const std::string& path) { write_text(path, serialize(r)); }

WeightMap<Rational> priors_exact(const Json& j) {
  if (!j.is_object()) fail("priors: expected an object");
  WeightMap<Rational> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array()) fail("priors for " + k + ": expected a list");
    Weights<Rational> w;
    for (const auto& x : v) {
      if (x.is_number_integer())
        w.push_back(Rational(x.get<std::int64_t>()));
      else if (x.is_number())
        w.push_back(rational_from_double(x.get<double>()));
      else if (x.is_string())
        w.push_back(rational_from_string(x.get<std::string>()));
      else
        fail("priors for " + k + ": weights must be numbers");
      if (w.back() < 0) fail("priors for " + k + ": negative weight");
    }
    out[k] = w;
  }
  return out;
}

WeightMap<double> priors_float(const Json& j) {
  WeightMap<double> out;
  for (const auto& [k, w] : priors_exact(j))
    for (const auto& x : w) out[k].push_back(x.convert_to<double>());
  return out;
}

std::string to_string(const Rational& q) {
  auto n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Json weights_to_json(const WeightMap<Rational>& m) {
  Json out = Json::object();
  for (const auto& [k, w] : m) {
    Json row = Json::array();
    for (const auto& x : w) row.push_back(to_string(x));
    out[k] = row;
  }
  return out;
}

Json weights_to_json(const WeightMap<double>& m) {
  Json out = Json::object();
  for (const auto& [k, w] : m) out[k] = w;
  return out;
}

}  // namespace normgraph::io
