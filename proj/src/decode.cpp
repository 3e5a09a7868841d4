#include "normgraph/decode.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <set>

#include "normgraph/error.hpp"
#include "normgraph/graphcore.hpp"

namespace normgraph {

namespace {

double to_double(double x) { return x; }
double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class W>
W from_double(double x) {
  if constexpr (std::is_same_v<W, double>)
    return x;
  else
    return rational_from_double(x);
}

template <class W>
W total(const Weights<W>& w) {
  W s = 0;
  for (const auto& x : w) s += x;
  return s;
}

std::size_t slot_size(const ProductSpace& s, std::size_t k) { return s.factors()[k].alphabet.size(); }

// Codewords of one constraint as per-slot alphabet indices.
struct Table {
  std::vector<std::vector<std::uint64_t>> words;
  std::vector<std::size_t> sizes;
};

Table make_table(const CodeSubgroup& c) {
  Table t;
  const auto& s = c.ambient();
  for (std::size_t k = 0; k < s.size(); ++k) t.sizes.push_back(slot_size(s, k));
  for_each_element(c, [&](const Element& x) {
    std::vector<std::uint64_t> w(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto& f = s.factors()[k];
      w[k] = f.alphabet.index_of(s.slot(x, f.label));
    }
    t.words.push_back(std::move(w));
  });
  return t;
}

// Output toward slot `target` given all other incoming messages.
template <class W>
Weights<W> table_update(const Table& t, const std::vector<const Weights<W>*>& in, std::size_t target) {
  Weights<W> out(t.sizes[target], W(0));
  for (const auto& w : t.words) {
    W p = 1;
    for (std::size_t m = 0; m < w.size() && p != 0; ++m)
      if (m != target) p *= (*in[m])[w[m]];
    out[w[target]] += p;
  }
  return out;
}

// Coset classes of C:V inside C|V for one slot; -1 outside C|V.
struct SlotReduction {
  std::vector<long long> cls;
  std::vector<std::uint64_t> count;
};

SlotReduction make_reduction(const CodeSubgroup& c, const std::string& var) {
  auto trimmed = project(c, {var});
  auto nd = cross_section(c, {var});
  Quotient q(trimmed, nd);
  const auto& a = c.ambient().alphabet(var);
  SlotReduction red;
  red.cls.assign(a.size(), -1);
  red.count.assign(q.alphabet().size(), 0);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    Element x = a.element_at(i);
    if (!trimmed.contains(x)) continue;
    auto k = q.alphabet().index_of(q.project(x));
    red.cls[i] = static_cast<long long>(k);
    ++red.count[k];
  }
  return red;
}

template <class W>
Weights<W> apply_reduction(const SlotReduction& red, const Weights<W>& w) {
  std::vector<W> sums(red.count.size(), W(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (red.cls[i] >= 0) sums[red.cls[i]] += w[i];
  Weights<W> out(w.size(), W(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (red.cls[i] >= 0) out[i] = sums[red.cls[i]] / W(red.count[red.cls[i]]);
  return out;
}

enum class SlotRole { External, Tail, Head };

struct SlotInfo {
  SlotRole role;
  std::string var;
  std::size_t other = 0;       // constraint at the far end of a state
  std::size_t other_slot = 0;
};

// Shared engine state for one realization.
template <class W>
struct Engine {
  const NormalRealization& r;
  DecodeOptions opt;
  std::vector<Table> tables;
  std::vector<std::vector<SlotInfo>> slots;
  std::vector<std::vector<SlotReduction>> reductions;
  std::map<std::string, std::vector<std::uint64_t>> perm;  // tail index -> head index
  std::map<std::string, Weights<W>> priors;

  Engine(const NormalRealization& rr, const WeightMap<W>& p, const DecodeOptions& o) : r(rr), opt(o) {
    for (const auto& c : r.constraints) tables.push_back(make_table(c.code));
    slots.resize(r.constraints.size());
    for (std::size_t i = 0; i < r.constraints.size(); ++i)
      for (const auto& v : r.constraints[i].vars) slots[i].push_back({SlotRole::External, v});
    for (const auto& s : r.internal_states()) {
      auto [t, h] = r.ends(s);
      std::size_t kt = index_in(t, s), kh = index_in(h, s);
      slots[t][kt] = {SlotRole::Tail, s, h, kh};
      slots[h][kh] = {SlotRole::Head, s, t, kt};
      auto phi = r.edge_map(s);
      const auto& a = r.alphabet(s);
      std::vector<std::uint64_t> pm(a.size());
      for (std::uint64_t x = 0; x < a.size(); ++x) pm[x] = a.index_of(phi.apply(a.element_at(x)));
      perm[s] = std::move(pm);
    }
    auto ext = r.external_labels();
    for (const auto& [label, w] : p) {
      if (std::find(ext.begin(), ext.end(), label) == ext.end())
        throw Error(ErrorCode::UnknownVariable, "prior for " + label);
      if (w.size() != r.alphabet(label).size())
        throw Error(ErrorCode::AlphabetMismatch, "prior for " + label + " has the wrong length");
      for (const auto& x : w)
        if (x < 0) throw Error(ErrorCode::ValidationFailed, "negative prior weight for " + label);
    }
    for (const auto& label : ext) {
      auto it = p.find(label);
      priors[label] = it != p.end() ? it->second : Weights<W>(r.alphabet(label).size(), W(1));
    }
    if (opt.reduce_messages) {
      reductions.resize(r.constraints.size());
      for (std::size_t i = 0; i < r.constraints.size(); ++i)
        for (const auto& v : r.constraints[i].code.ambient().labels())
          reductions[i].push_back(make_reduction(r.constraints[i].code, v));
    }
  }

  std::size_t index_in(std::size_t c, const std::string& label) const {
    return r.constraints[c].code.ambient().index_of(label);
  }

  // Message from constraint c's far end of slot k, in c's slot coordinates.
  Weights<W> translate(const SlotInfo& s, const Weights<W>& far) const {
    const auto& pm = perm.at(s.var);
    Weights<W> out(far.size());
    for (std::size_t x = 0; x < pm.size(); ++x) {
      if (s.role == SlotRole::Tail)
        out[x] = far[pm[x]];
      else
        out[pm[x]] = far[x];
    }
    return out;
  }

  Weights<W> incoming(std::size_t c, std::size_t k, const std::function<const Weights<W>&(std::size_t, std::size_t)>& out) {
    const auto& s = slots[c][k];
    Weights<W> w = s.role == SlotRole::External ? priors.at(s.var) : translate(s, out(s.other, s.other_slot));
    if (opt.reduce_messages) w = apply_reduction(reductions[c][k], w);
    return w;
  }

  Weights<W> update(std::size_t c, std::size_t target,
                    const std::function<const Weights<W>&(std::size_t, std::size_t)>& out) {
    std::vector<Weights<W>> in(slots[c].size());
    std::vector<const Weights<W>*> ptr(slots[c].size());
    Weights<W> dummy;
    for (std::size_t k = 0; k < slots[c].size(); ++k) {
      if (k == target) {
        ptr[k] = &dummy;
        continue;
      }
      in[k] = incoming(c, k, out);
      ptr[k] = &in[k];
    }
    return table_update(tables[c], ptr, target);
  }

  // Marginals from a complete set of outgoing messages.
  DecodeResult<W> finish(const std::function<const Weights<W>&(std::size_t, std::size_t)>& out) {
    DecodeResult<W> res;
    bool any_zero = false;
    for (std::size_t c = 0; c < slots.size(); ++c) {
      for (std::size_t k = 0; k < slots[c].size(); ++k) {
        const auto& s = slots[c][k];
        if (s.role == SlotRole::Head) continue;
        const auto& mine = out(c, k);
        Weights<W> m(mine.size());
        if (s.role == SlotRole::External) {
          const auto& p = priors.at(s.var);
          for (std::size_t x = 0; x < m.size(); ++x) m[x] = p[x] * mine[x];
          res.extrinsic[s.var] = normalized(mine);
        } else {
          auto far = translate(s, out(s.other, s.other_slot));
          for (std::size_t x = 0; x < m.size(); ++x) m[x] = far[x] * mine[x];
        }
        if (total(m) == 0) any_zero = true;
        res.marginals[s.var] = normalized(m);
      }
    }
    res.contradiction = any_zero;
    return res;
  }
};

void require_valid(const NormalRealization& r) {
  auto rep = validate(r, false);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  if (components(r).size() > 1) throw Error(ErrorCode::Disconnected, "realization is not connected");
}

template <class W>
DecodeResult<W> exact_impl(Engine<W>& e) {
  std::map<std::pair<std::size_t, std::size_t>, Weights<W>> memo;
  std::function<const Weights<W>&(std::size_t, std::size_t)> out = [&](std::size_t c, std::size_t k) -> const Weights<W>& {
    auto key = std::make_pair(c, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto w = e.update(c, k, out);
    return memo.emplace(key, std::move(w)).first->second;
  };
  return e.finish(out);
}

}  // namespace

template <class W>
Weights<W> normalized(const Weights<W>& w) {
  W s = total(w);
  if (s == 0) return w;
  Weights<W> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] / s;
  return out;
}

template <class W>
Weights<W> sp_update(const CodeSubgroup& c, const WeightMap<W>& incoming, const std::string& target) {
  const auto& s = c.ambient();
  if (!s.has(target)) throw Error(ErrorCode::UnknownLabel, target);
  auto t = make_table(c);
  std::size_t ti = s.index_of(target);
  std::vector<const Weights<W>*> in(s.size());
  Weights<W> dummy;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k == ti) {
      in[k] = &dummy;
      continue;
    }
    const auto& label = s.factors()[k].label;
    auto it = incoming.find(label);
    if (it == incoming.end()) throw Error(ErrorCode::MissingIncoming, label);
    if (it->second.size() != t.sizes[k]) throw Error(ErrorCode::AlphabetMismatch, label);
    in[k] = &it->second;
  }
  return table_update(t, in, ti);
}

template <class W>
ReducedMessage<W> message_reduce(const CodeSubgroup& c, const std::string& var, const Weights<W>& msg) {
  if (!c.ambient().has(var)) throw Error(ErrorCode::UnknownLabel, var);
  const auto& a = c.ambient().alphabet(var);
  if (msg.size() != a.size()) throw Error(ErrorCode::AlphabetMismatch, var);
  ReducedMessage<W> m;
  m.trimmed = project(c, {var});
  m.nondynamical = cross_section(c, {var});
  m.quotient = Quotient(m.trimmed, m.nondynamical);
  m.weights.assign(m.quotient.alphabet().size(), W(0));
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    Element x = a.element_at(i);
    if (m.trimmed.contains(x)) m.weights[m.quotient.alphabet().index_of(m.quotient.project(x))] += msg[i];
  }
  return m;
}

template <class W>
Weights<W> message_expand(const ReducedMessage<W>& m) {
  const auto& a = m.trimmed.ambient().factors()[0].alphabet;
  W per = W(m.nondynamical.order().to_u64().value());
  Weights<W> out(a.size(), W(0));
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    Element x = a.element_at(i);
    if (m.trimmed.contains(x)) out[i] = m.weights[m.quotient.alphabet().index_of(m.quotient.project(x))] / per;
  }
  return out;
}

template <class W>
DecodeResult<W> decode_exact(const NormalRealization& r, const WeightMap<W>& priors, const DecodeOptions& opt) {
  require_valid(r);
  if (!is_cycle_free(r)) throw Error(ErrorCode::NotCycleFree, "cyclomatic number " + std::to_string(cyclomatic_number(r)));
  Engine<W> e(r, priors, opt);
  return exact_impl(e);
}

template <class W>
IterativeResult<W> decode_iterative(const NormalRealization& r, const WeightMap<W>& priors, const DecodeOptions& opt) {
  require_valid(r);
  if (opt.damping < 0 || opt.damping >= 1) throw Error(ErrorCode::ValidationFailed, "damping must lie in [0, 1)");
  Engine<W> e(r, priors, opt);
  IterativeResult<W> res;
  if (is_cycle_free(r)) {
    static_cast<DecodeResult<W>&>(res) = exact_impl(e);
    res.iterations = 1;
    res.converged = true;
    res.deltas.push_back(0.0);
    return res;
  }

  auto core_list = two_core_constraints(r);
  std::set<std::size_t> core(core_list.begin(), core_list.end());
  // Messages from a core constraint along an edge whose far end is in the core.
  std::vector<std::pair<std::size_t, std::size_t>> iterated;
  std::map<std::pair<std::size_t, std::size_t>, Weights<W>> current;
  std::vector<std::size_t> order(core_list.begin(), core_list.end());
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return r.constraints[a].id < r.constraints[b].id; });
  for (auto c : order)
    for (std::size_t k = 0; k < e.slots[c].size(); ++k) {
      const auto& s = e.slots[c][k];
      if (s.role != SlotRole::External && core.count(s.other)) {
        iterated.emplace_back(c, k);
        current[{c, k}] = normalized(Weights<W>(e.tables[c].sizes[k], W(1)));
      }
    }

  std::map<std::pair<std::size_t, std::size_t>, Weights<W>> memo;
  std::function<const Weights<W>&(std::size_t, std::size_t)> out = [&](std::size_t c, std::size_t k) -> const Weights<W>& {
    auto key = std::make_pair(c, k);
    auto cur = current.find(key);
    if (cur != current.end()) return cur->second;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto w = normalized(e.update(c, k, out));
    return memo.emplace(key, std::move(w)).first->second;
  };

  W d = from_double<W>(opt.damping);
  bool contradiction = false;
  for (int it = 0; it < opt.max_iterations; ++it) {
    double delta = 0;
    auto previous = current;
    std::map<std::pair<std::size_t, std::size_t>, Weights<W>> next;
    std::function<const Weights<W>&(std::size_t, std::size_t)> read = [&](std::size_t c, std::size_t k) -> const Weights<W>& {
      auto cur = previous.find({c, k});
      if (cur != previous.end()) return cur->second;
      return out(c, k);
    };
    for (const auto& key : iterated) {
      auto fresh = opt.schedule == Schedule::Flooding ? e.update(key.first, key.second, read)
                                                      : e.update(key.first, key.second, out);
      if (total(fresh) == 0) contradiction = true;
      fresh = normalized(fresh);
      const auto& old = previous.at(key);
      if (opt.damping > 0)
        for (std::size_t x = 0; x < fresh.size(); ++x) fresh[x] = (W(1) - d) * fresh[x] + d * old[x];
      for (std::size_t x = 0; x < fresh.size(); ++x) delta = std::max(delta, std::abs(to_double(fresh[x]) - to_double(old[x])));
      if (opt.schedule == Schedule::Flooding)
        next[key] = std::move(fresh);
      else
        current[key] = std::move(fresh);
    }
    if (opt.schedule == Schedule::Flooding) current = std::move(next);
    res.deltas.push_back(delta);
    res.iterations = it + 1;
    if (delta < opt.tolerance) {
      res.converged = true;
      break;
    }
  }
  static_cast<DecodeResult<W>&>(res) = e.finish(out);
  res.contradiction = res.contradiction || contradiction;
  return res;
}

template <class W>
DecodeResult<W> brute_force_app(const NormalRealization& r, const WeightMap<W>& priors) {
  Engine<W> e(r, priors, {});
  auto bundle = behavior_bundle(r);
  const auto& b = bundle.behavior;
  const auto& space = b.ambient();
  std::vector<std::string> labels = space.labels();
  std::vector<std::string> ext = r.external_labels();
  DecodeResult<W> res;
  for (const auto& l : labels) res.marginals[l] = Weights<W>(space.alphabet(l).size(), W(0));
  std::map<std::string, Weights<W>> extr;
  for (const auto& l : ext) extr[l] = Weights<W>(space.alphabet(l).size(), W(0));
  for_each_element(b, [&](const Element& x) {
    std::vector<std::uint64_t> idx(labels.size());
    W p = 1;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto& a = space.factors()[k].alphabet;
      idx[k] = a.index_of(space.slot(x, labels[k]));
    }
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (e.priors.count(labels[k])) p *= e.priors.at(labels[k])[idx[k]];
    for (std::size_t k = 0; k < labels.size(); ++k) res.marginals[labels[k]][idx[k]] += p;
    // Extrinsic weight: product of every prior except the variable's own.
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!extr.count(labels[k])) continue;
      W q = 1;
      for (std::size_t m = 0; m < labels.size(); ++m)
        if (m != k && e.priors.count(labels[m])) q *= e.priors.at(labels[m])[idx[m]];
      extr[labels[k]][idx[k]] += q;
    }
  });
  for (auto& [l, w] : res.marginals) {
    if (total(w) == 0) res.contradiction = true;
    w = normalized(w);
  }
  for (auto& [l, w] : extr) res.extrinsic[l] = normalized(w);
  return res;
}

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Rational num = rational_from_string(s.substr(0, slash)), den = rational_from_string(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in " + text);
      return num / den;
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long long exp10 = 0;
    bool seen_point = false, any = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
      if (s[i] == '.') {
        if (seen_point) throw Error(ErrorCode::ParseError, "bad number " + text);
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i];
        any = true;
        if (seen_point) --exp10;
      } else {
        throw Error(ErrorCode::ParseError, "bad number " + text);
      }
    }
    if (!any) throw Error(ErrorCode::ParseError, "bad number " + text);
    if (i < s.size()) {
      std::string e = s.substr(i + 1);
      long long v = 0;
      auto [p, ec] = std::from_chars(e.data() + (e.size() && e[0] == '+' ? 1 : 0), e.data() + e.size(), v);
      if (ec != std::errc() || p != e.data() + e.size()) throw Error(ErrorCode::ParseError, "bad exponent in " + text);
      exp10 += v;
    }
    if (exp10 > 4000 || exp10 < -4000) throw Error(ErrorCode::ParseError, "exponent out of range in " + text);
    // cpp_int reads a leading 0 as octal.
    auto nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    boost::multiprecision::cpp_int num(digits), scale = 1;
    for (long long k = 0; k < std::abs(exp10); ++k) scale *= 10;
    Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
    return neg ? Rational(-q) : q;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad number " + text);
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite number");
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw Error(ErrorCode::ParseError, "number formatting");
  return rational_from_string(std::string(buf, p));
}

#define NORMGRAPH_DECODE_INSTANTIATE(W)                                                                        \
  template Weights<W> normalized<W>(const Weights<W>&);                                                        \
  template Weights<W> sp_update<W>(const CodeSubgroup&, const WeightMap<W>&, const std::string&);             \
  template ReducedMessage<W> message_reduce<W>(const CodeSubgroup&, const std::string&, const Weights<W>&);   \
  template Weights<W> message_expand<W>(const ReducedMessage<W>&);                                             \
  template DecodeResult<W> decode_exact<W>(const NormalRealization&, const WeightMap<W>&, const DecodeOptions&); \
  template IterativeResult<W> decode_iterative<W>(const NormalRealization&, const WeightMap<W>&,             \
                                                  const DecodeOptions&);                                       \
  template DecodeResult<W> brute_force_app<W>(const NormalRealization&, const WeightMap<W>&);

NORMGRAPH_DECODE_INSTANTIATE(double)
NORMGRAPH_DECODE_INSTANTIATE(Rational)

}  // namespace normgraph
