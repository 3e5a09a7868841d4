#include "normgraph/corpus.hpp"

#include <algorithm>
#include <set>

#include "normgraph/error.hpp"

namespace normgraph::corpus {

namespace {

ProductSpace space_of(const std::vector<std::string>& labels, const std::vector<Alphabet>& alphabets) {
  std::vector<Factor> fs;
  for (std::size_t i = 0; i < labels.size(); ++i) fs.push_back({labels[i], alphabets[i]});
  return ProductSpace(fs);
}

ProductSpace uniform_space(const std::vector<std::string>& labels, const Alphabet& a) {
  return space_of(labels, std::vector<Alphabet>(labels.size(), a));
}

std::string idx(const std::string& p, std::size_t i) { return p + std::to_string(i); }

}  // namespace

NormalRealization single_constraint(const std::string& id, const CodeSubgroup& code) {
  NormalRealization r;
  for (const auto& f : code.ambient().factors()) r.symbols.push_back({f.label, f.alphabet});
  r.constraints.push_back({id, code.ambient().labels(), code});
  return r;
}

NormalRealization equality_node(const Alphabet& a, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(idx("a", i));
  return single_constraint("eq", equality_code(a, labels));
}

NormalRealization zero_sum_node(const Alphabet& a, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(idx("a", i));
  return single_constraint("sum", zero_sum_code(a, labels));
}

NormalRealization sign_inversion_node(const Alphabet& a) {
  auto neg = Homomorphism::negation(a);
  return single_constraint("neg", relabel(neg.graph("a0", "a1"), {"a0", "a1"}));
}

namespace {

NormalRealization trellis_sections(const std::vector<Vec>& g, Int p, int pad, bool ring) {
  std::size_t k = g.size(), n = g.at(0).size();
  Alphabet sym = Alphabet::vector_space(p, 1);
  Alphabet st = Alphabet::vector_space(p, static_cast<int>(k) + pad);
  std::size_t sd = k + static_cast<std::size_t>(pad);
  NormalRealization r;
  for (std::size_t i = 0; i < n; ++i) r.symbols.push_back({idx("a", i), sym});
  for (std::size_t i = 1; i < n; ++i) r.states.push_back({idx("s", i), st, std::nullopt});
  if (ring) r.states.insert(r.states.begin(), {"s0", st, std::nullopt});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> vars;
    std::vector<Alphabet> alph;
    bool left = i > 0 || ring, right = i + 1 < n || ring;
    if (left) {
      vars.push_back(idx("s", i));
      alph.push_back(st);
    }
    vars.push_back(idx("a", i));
    alph.push_back(sym);
    if (right) {
      vars.push_back(i + 1 < n ? idx("s", i + 1) : "s0");
      alph.push_back(st);
    }
    ProductSpace s = space_of(vars, alph);
    std::vector<Element> rows;
    for (std::size_t j = 0; j < sd; ++j) {
      Element e(sd, 0);
      e[j] = 1;
      Element x;
      if (left) x.insert(x.end(), e.begin(), e.end());
      x.push_back(j < k ? mod(g[j][i], p) : 0);
      if (right) x.insert(x.end(), e.begin(), e.end());
      rows.push_back(std::move(x));
    }
    r.constraints.push_back({idx("c", i), vars, CodeSubgroup(s, rows)});
  }
  return r;
}

}  // namespace

NormalRealization trellis(const std::vector<Vec>& g, Int p, int pad) { return trellis_sections(g, p, pad, false); }

NormalRealization tail_biting(const std::vector<Vec>& g, Int p) { return trellis_sections(g, p, 0, true); }

GeneralRealization tanner_general(const std::vector<Vec>& h, Int p) {
  GeneralRealization gr;
  Alphabet a = Alphabet::vector_space(p, 1);
  std::size_t n = h.at(0).size();
  for (std::size_t i = 0; i < n; ++i) gr.symbols.push_back({idx("a", i), a});
  for (std::size_t r = 0; r < h.size(); ++r) {
    std::vector<std::string> vars;
    Element coeffs;
    for (std::size_t i = 0; i < n; ++i)
      if (mod(h[r][i], p) != 0) {
        vars.push_back(idx("a", i));
        coeffs.push_back(mod(h[r][i], p));
      }
    ProductSpace s = uniform_space(vars, a);
    gr.constraints.push_back({idx("h", r), vars, orthogonal(CodeSubgroup(s, {coeffs}))});
  }
  return gr;
}

NormalRealization tanner(const std::vector<Vec>& h, Int p) { return normalize(tanner_general(h, p)); }

std::vector<Vec> hamming74_generator() {
  return {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}};
}

NormalRealization repetition3() { return trellis({{1, 1, 1}}, 2); }

NormalRealization z4_path() {
  Alphabet z4 = Alphabet::cyclic({4});
  Alphabet info = Alphabet::cyclic({4, 4});
  NormalRealization r;
  for (int i = 0; i < 4; ++i) r.symbols.push_back({idx("a", i), z4});
  r.states.push_back({"s1", info, std::nullopt});
  r.states.push_back({"s2", info, std::nullopt});
  // States carry the information pair (u, w); codeword u(1,1,2,0) + w(0,2,1,1).
  r.constraints.push_back({"c0", {"a0", "s1"}, CodeSubgroup(space_of({"a0", "s1"}, {z4, info}), {{1, 1, 0}, {0, 0, 1}})});
  r.constraints.push_back({"c1", {"s1", "a1", "s2"},
                           CodeSubgroup(space_of({"s1", "a1", "s2"}, {info, z4, info}),
                                        {{1, 0, 1, 1, 0}, {0, 1, 2, 0, 1}})});
  r.constraints.push_back({"c2", {"s2", "a2", "a3"},
                           CodeSubgroup(space_of({"s2", "a2", "a3"}, {info, z4, z4}), {{1, 0, 2, 0}, {0, 1, 1, 1}})});
  return r;
}

NormalRealization z4_ring() {
  Alphabet z4 = Alphabet::cyclic({4});
  NormalRealization r;
  for (int i = 0; i < 2; ++i) r.symbols.push_back({idx("a", i), z4});
  r.states.push_back({"s0", z4, Homomorphism::negation(z4)});
  r.states.push_back({"s1", z4, std::nullopt});
  ProductSpace s0 = space_of({"s0", "a0", "s1"}, {z4, z4, z4});
  ProductSpace s1 = space_of({"s1", "a1", "s0"}, {z4, z4, z4});
  r.constraints.push_back({"c0", {"s0", "a0", "s1"}, CodeSubgroup(s0, {{1, 1, 0}, {0, 1, 1}})});
  r.constraints.push_back({"c1", {"s1", "a1", "s0"}, CodeSubgroup(s1, {{1, 2, 1}, {0, 2, 2}})});
  return r;
}

NormalRealization ring_with_parallel_branches() {
  Alphabet f2 = Alphabet::vector_space(2, 1);
  NormalRealization r;
  const int n = 3;
  for (int i = 0; i < 2 * n; ++i) r.symbols.push_back({idx("a", i), f2});
  for (int i = 0; i < n; ++i) r.states.push_back({idx("s", i), f2, std::nullopt});
  for (int i = 0; i < n; ++i) r.states.push_back({idx("b", i), f2, std::nullopt});
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> v = {idx("s", i), idx("b", i), idx("s", (i + 1) % n)};
    r.constraints.push_back({idx("t", i), v, CodeSubgroup(uniform_space(v, f2), {{1, 0, 1}, {0, 1, 1}})});
  }
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> v = {idx("b", i), idx("a", 2 * i), idx("a", 2 * i + 1)};
    r.constraints.push_back({idx("leaf", i), v, CodeSubgroup(uniform_space(v, f2), {{0, 1, 1}, {1, 1, 0}})});
  }
  return r;
}

const char* to_string(Topology t) {
  switch (t) {
    case Topology::Path: return "path";
    case Topology::Tree: return "tree";
    case Topology::Cycle: return "cycle";
    case Topology::CyclePendant: return "cycle+pendant";
    case Topology::Theta: return "theta";
  }
  return "?";
}

const char* to_string(Family f) {
  switch (f) {
    case Family::GF2: return "GF(2)";
    case Family::GF3: return "GF(3)";
    case Family::Z4: return "Z4";
    case Family::Mixed: return "mixed";
  }
  return "?";
}

Alphabet random_alphabet(std::mt19937_64& rng, Family f, bool state) {
  std::uniform_int_distribution<int> d(0, 9);
  int x = d(rng);
  switch (f) {
    case Family::GF2: return Alphabet::vector_space(2, state && x < 3 ? 2 : 1);
    case Family::GF3: return Alphabet::vector_space(3, 1);
    case Family::Z4: return x < 2 ? Alphabet::cyclic({2}) : Alphabet::cyclic({4});
    case Family::Mixed:
      if (x < 3) return Alphabet::vector_space(2, 1);
      if (x < 6) return Alphabet::cyclic({4});
      if (x < 8) return state ? Alphabet::cyclic({2, 4}) : Alphabet::cyclic({2, 2});
      return Alphabet::cyclic({2});
  }
  return Alphabet::vector_space(2, 1);
}

Homomorphism random_automorphism(std::mt19937_64& rng, const Alphabet& a) {
  const auto& m = a.moduli();
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Vec> mat(m.size(), Vec(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        Int step = m[i] / gcd(m[i], m[j]);
        Int choices = m[i] / step;
        mat[i][j] = step * std::uniform_int_distribution<Int>(0, choices - 1)(rng);
      }
    Homomorphism h(a, a, mat);
    if (h.is_bijective()) return h;
  }
  return Homomorphism::negation(a);
}

CodeSubgroup random_code(std::mt19937_64& rng, const ProductSpace& s, int max_rows) {
  int hi = max_rows < 0 ? static_cast<int>(s.width()) : max_rows;
  int k = std::uniform_int_distribution<int>(1, std::max(1, hi))(rng);
  std::vector<Element> rows;
  for (int i = 0; i < k; ++i) {
    Element x(s.width());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::uniform_int_distribution<Int>(0, s.moduli()[j] - 1)(rng);
    rows.push_back(std::move(x));
  }
  return CodeSubgroup(s, rows);
}

namespace {

std::vector<std::pair<int, int>> topology_edges(std::mt19937_64& rng, Topology t, int n) {
  std::vector<std::pair<int, int>> e;
  auto path = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) e.push_back({i, i + 1});
  };
  switch (t) {
    case Topology::Path: path(0, n - 1); break;
    case Topology::Tree:
      for (int i = 1; i < n; ++i) e.push_back({std::uniform_int_distribution<int>(0, i - 1)(rng), i});
      break;
    case Topology::Cycle:
      path(0, n - 1);
      e.push_back({0, n - 1});
      break;
    case Topology::CyclePendant: {
      int m = std::max(2, n - std::uniform_int_distribution<int>(1, std::max(1, n - 2))(rng));
      path(0, m - 1);
      e.push_back({0, m - 1});
      for (int i = m; i < n; ++i) e.push_back({std::uniform_int_distribution<int>(0, i - 1)(rng), i});
      break;
    }
    case Topology::Theta: {
      // Nodes 0 and 1 joined by three internally disjoint paths.
      std::vector<std::vector<int>> paths(3);
      for (int i = 2; i < n; ++i) paths[static_cast<std::size_t>(i % 3)].push_back(i);
      int direct = 0;
      for (auto& p : paths) {
        if (p.empty()) {
          if (direct++ > 0 && n > 2) continue;
          e.push_back({0, 1});
          continue;
        }
        e.push_back({0, p.front()});
        for (std::size_t k = 0; k + 1 < p.size(); ++k) e.push_back({p[k], p[k + 1]});
        e.push_back({p.back(), 1});
      }
      break;
    }
  }
  return e;
}

}  // namespace

NormalRealization random_realization(std::mt19937_64& rng, const RandomOptions& opt) {
  int n = std::max(1, opt.constraints);
  if (opt.topology == Topology::Cycle || opt.topology == Topology::CyclePendant) n = std::max(n, 2);
  if (opt.topology == Topology::CyclePendant) n = std::max(n, 3);
  if (opt.topology == Topology::Theta) n = std::max(n, 3);
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto edges = topology_edges(rng, opt.topology, n);
    int budget = opt.max_variables - static_cast<int>(edges.size()) - opt.boundary;
    if (budget < 1) throw Error(ErrorCode::ValidationFailed, "too many edges for the variable budget");
    NormalRealization r;
    std::vector<std::vector<std::string>> vars(static_cast<std::size_t>(n));
    std::uint64_t configs = 1;
    auto note = [&](const Alphabet& a) { configs *= a.size(); };
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::string id = opt.prefix + idx("s", i);
      Alphabet a = random_alphabet(rng, opt.family, true);
      note(a);
      std::optional<Homomorphism> iso;
      if (std::uniform_real_distribution<double>(0, 1)(rng) < opt.iso_probability) {
        iso = random_automorphism(rng, a);
        if (iso->is_identity()) iso.reset();
      }
      r.states.push_back({id, a, iso});
      vars[static_cast<std::size_t>(edges[i].first)].push_back(id);
      vars[static_cast<std::size_t>(edges[i].second)].push_back(id);
    }
    for (int b = 0; b < opt.boundary; ++b) {
      std::string id = opt.prefix + idx("b", static_cast<std::size_t>(b));
      Alphabet a = random_alphabet(rng, opt.family, true);
      note(a);
      r.states.push_back({id, a, std::nullopt});
      r.boundary.push_back(id);
      vars[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))].push_back(id);
    }
    int nsym = std::uniform_int_distribution<int>(1, std::min(budget, 2 * n))(rng);
    for (int k = 0; k < nsym; ++k) {
      std::string id = opt.prefix + idx("a", static_cast<std::size_t>(k));
      Alphabet a = random_alphabet(rng, opt.family, false);
      note(a);
      r.symbols.push_back({id, a});
      int c = k < n ? k : std::uniform_int_distribution<int>(0, n - 1)(rng);
      vars[static_cast<std::size_t>(c)].push_back(id);
    }
    if (configs > opt.max_configurations) continue;
    bool empty = false;
    for (int c = 0; c < n; ++c) {
      auto& v = vars[static_cast<std::size_t>(c)];
      if (v.empty()) {
        empty = true;
        break;
      }
      std::shuffle(v.begin(), v.end(), rng);
      std::vector<Factor> fs;
      for (const auto& id : v) fs.push_back({id, r.alphabet(id)});
      r.constraints.push_back({opt.prefix + idx("c", static_cast<std::size_t>(c)), v, random_code(rng, ProductSpace(fs))});
    }
    if (empty) continue;
    r.sort_boundary();
    return r;
  }
  throw Error(ErrorCode::ValidationFailed, "could not satisfy random realization limits");
}

std::vector<Entry> fixtures() {
  std::vector<Entry> out;
  out.push_back({"repetition3", repetition3()});
  out.push_back({"repetition3_padded", trellis({{1, 1, 1}}, 2, 1)});
  out.push_back({"dual_pairs_trellis", trellis({{1, 1, 0, 0}, {0, 0, 1, 1}}, 2)});
  out.push_back({"hamming74_trellis", trellis(hamming74_generator(), 2)});
  out.push_back({"tail_biting_0011", tail_biting({{1, 1, 0, 0}, {0, 0, 1, 1}}, 2)});
  out.push_back({"tanner_parity3", tanner({{1, 1, 1}}, 2)});
  out.push_back({"tanner_redundant", tanner({{1, 1, 1, 1}, {1, 1, 1, 1}}, 2)});
  out.push_back({"tanner_independent", tanner({{1, 1, 1, 1}, {0, 0, 1, 1}}, 2)});
  out.push_back({"tanner_gf3", tanner({{1, 2, 1, 0}, {0, 1, 1, 1}}, 3)});
  out.push_back({"equality3_gf3", equality_node(Alphabet::vector_space(3, 1), 3)});
  out.push_back({"zero_sum4_z4", zero_sum_node(Alphabet::cyclic({4}), 4)});
  out.push_back({"sign_inverter_z4", sign_inversion_node(Alphabet::cyclic({4}))});
  out.push_back({"z4_path", z4_path()});
  out.push_back({"z4_ring", z4_ring()});
  out.push_back({"ring_parallel_branches", ring_with_parallel_branches()});
  return out;
}

std::vector<Entry> random_corpus(std::uint64_t seed, int count, const std::vector<Topology>& topologies,
                                 const std::vector<Family>& families, int boundary, double iso_probability) {
  std::mt19937_64 rng(seed);
  std::vector<Entry> out;
  for (int i = 0; i < count; ++i) {
    RandomOptions opt;
    opt.topology = topologies[static_cast<std::size_t>(i) % topologies.size()];
    opt.family = families[static_cast<std::size_t>(i / static_cast<int>(topologies.size())) % families.size()];
    opt.constraints = std::uniform_int_distribution<int>(2, 5)(rng);
    opt.boundary = boundary;
    opt.iso_probability = iso_probability;
    out.push_back({std::string("random-") + to_string(opt.topology) + "-" + to_string(opt.family) + "-" +
                       std::to_string(i),
                   random_realization(rng, opt)});
  }
  return out;
}

}  // namespace normgraph::corpus
