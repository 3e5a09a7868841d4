#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "normgraph/analysis.hpp"
#include "normgraph/decode.hpp"
#include "normgraph/decomposition.hpp"
#include "normgraph/duality.hpp"
#include "normgraph/error.hpp"
#include "normgraph/graphcore.hpp"
#include "normgraph/io.hpp"
#include "normgraph/minimize.hpp"

using namespace normgraph;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kProperty = 2, kPrecondition = 3, kIo = 4 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ValidationFailed:
      return kInvalid;
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return kIo;
    default:
      return kPrecondition;
  }
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string row_str(const Element& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? " " : "") + std::to_string(x[i]);
  return out + "]";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void print_code(std::ostream& os, const CodeSubgroup& c) {
  os << "factors: " << join(c.ambient().labels()) << "\n";
  os << "order: " << c.order().str() << "\n";
  for (const auto& r : c.rows()) os << row_str(r) << "\n";
}

NormalRealization load_valid(const std::string& path) {
  auto r = io::load(path);
  auto rep = validate(r);
  if (!rep.ok()) throw Error(ErrorCode::ValidationFailed, rep.str());
  return r;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty())
    std::cout << text;
  else
    io::write_text(out, text);
}

std::string state_orders(const NormalRealization& r) {
  std::vector<std::string> xs;
  for (const auto& s : r.internal_states()) xs.push_back(r.alphabet(s).order().str());
  return "[" + join(xs, ",") + "]";
}

int cmd_validate(const std::string& path) {
  auto r = io::load(path);
  auto rep = validate(r);
  if (rep.ok()) {
    std::cout << "ok: " << r.symbols.size() << " symbols, " << r.internal_states().size() << " internal states, "
              << r.boundary.size() << " boundary, " << r.constraints.size() << " constraints\n";
    return kOk;
  }
  std::cout << rep.str();
  if (rep.str().empty() || rep.str().back() != '\n') std::cout << "\n";
  return kInvalid;
}

int cmd_behavior(const std::string& path, bool external_only) {
  auto r = load_valid(path);
  print_code(std::cout, external_only ? external_behavior(r) : behavior_bundle(r).behavior);
  return kOk;
}

int cmd_dual(const std::string& path, const std::string& out) {
  emit(out, io::serialize(dualize(load_valid(path))));
  return kOk;
}

int cmd_check_duality(const std::string& path) {
  auto r = load_valid(path);
  auto chk = verify_duality(r);
  auto c = external_behavior(r);
  std::string sizes = "|C|=" + c.order().str() + ", |C⊥|=" + chk.orthogonal_code.order().str();
  if (chk.ok()) {
    std::cout << "C° = C⊥ verified, " << sizes << "\n";
    return kOk;
  }
  std::cout << "duality check failed, " << sizes << ", |C°|=" << chk.dual_code.order().str()
            << ", dual route " << yes(chk.dual_route) << ", lemma route " << yes(chk.lemma_route) << "\n";
  return kProperty;
}

void print_obs_ctrl(std::ostream& os, const NormalRealization& f) {
  auto oc = obs_ctrl(f);
  os << "observability: external " << yes(oc.externally_observable) << ", internal " << yes(oc.internally_observable)
     << ", total " << yes(oc.totally_observable) << "\n";
  os << "controllability: external " << yes(oc.externally_controllable) << ", internal "
     << yes(oc.internally_controllable) << ", total " << yes(oc.totally_controllable) << "\n";
  os << "unobservable orders: external " << oc.external_unobservable.order().str() << ", internal "
     << oc.internal_unobservable.order().str() << ", total " << oc.total_unobservable.order().str() << "\n";
}

void print_external_trim(std::ostream& os, const NormalRealization& f) {
  for (const auto& v : f.external_labels()) {
    auto tp = trim_proper(f, v);
    os << "  " << v << ": trim " << yes(tp.trim) << ", proper " << yes(tp.proper) << ", effective order "
       << tp.effective_order.str() << "\n";
  }
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& fragment) {
  auto r = load_valid(path);
  auto& os = std::cout;
  if (!fragment.empty()) {
    auto parts = cut(r, fragment);
    for (std::size_t i = 0; i < parts.fragments.size(); ++i) {
      const auto& f = parts.fragments[i];
      std::vector<std::string> ids;
      for (const auto& c : f.constraints) ids.push_back(c.id);
      os << "fragment " << i << ": " << join(ids) << "\n";
      os << "external variables:\n";
      print_external_trim(os, f);
      print_obs_ctrl(os, f);
    }
    return kOk;
  }
  os << "symbols:\n";
  for (const auto& v : r.external_labels()) {
    auto tp = trim_proper(r, v);
    os << "  " << v << ": trim " << yes(tp.trim) << ", proper " << yes(tp.proper) << "\n";
  }
  os << "constraint slots:\n";
  for (const auto& c : r.constraints)
    for (const auto& v : c.vars) {
      auto tp = code_trim_proper(c.code, v);
      os << "  " << c.id << "." << v << ": trim " << yes(tp.trim) << ", proper " << yes(tp.proper) << "\n";
    }
  os << "internally trim " << yes(internally_trim(r, Scope::States)) << ", internally proper "
     << yes(internally_proper(r, Scope::States)) << "\n";
  print_obs_ctrl(os, r);
  auto ct = controllability_test(r);
  os << "controllability test: |U|=" << ct.universe.str() << ", |U cap V|=" << ct.extended.str()
     << ", |S|=" << ct.states.str() << ", |S^c|=" << ct.controllable.str() << ", controllable "
     << yes(ct.is_controllable) << ", identity " << yes(ct.identity_holds) << "\n";
  os << "cyclomatic number: " << cyclomatic_number(r) << "\n";
  for (const auto& s : r.internal_states()) {
    if (is_cut_edge(r, s)) continue;
    auto st = state_trim_status(r, s);
    os << "state " << s << ": state-trim " << yes(st.state_trim) << ", dual state-trim " << yes(st.dual_state_trim)
       << ", observable " << yes(st.observable) << ", controllable " << yes(st.controllable)
       << ", unobservable transitions " << st.unobservable_transitions.order().str() << "\n";
  }
  return kOk;
}

int cmd_minimize(const std::string& path, const std::string& out) {
  auto r = load_valid(path);
  if (!is_cycle_free(r)) {
    std::cerr << "minimize: realization has cycles (cyclomatic number " << cyclomatic_number(r)
              << "); use two-core to separate the cycle-free leaves\n";
    return kPrecondition;
  }
  auto m = minimize_cycle_free(r);
  std::cout << "state orders " << state_orders(r) << " -> " << state_orders(m) << "\n";
  std::cout << "reduced state orders " << state_orders(m) << "\n";
  if (!out.empty()) io::save(m, out);
  return kOk;
}

int cmd_two_core(const std::string& path, const std::string& out, const std::string& graph) {
  auto r = load_valid(path);
  auto tc = two_core(r);
  std::cout << "cyclomatic number: " << cyclomatic_number(r) << "\n";
  std::vector<std::string> core;
  for (auto i : tc.core_constraints) core.push_back(r.constraints[i].id);
  std::cout << "core constraints: " << (core.empty() ? "(none)" : join(core)) << "\n";
  for (const auto& l : tc.leaves) {
    std::vector<std::string> ids;
    for (const auto& c : l.fragment.constraints) ids.push_back(c.id);
    std::cout << "leaf " << (l.attachment ? "at " + *l.attachment : std::string("(whole graph)")) << ": "
              << join(ids) << "\n";
  }
  try {
    auto d = second_canonical_decomposition(r);
    for (const auto& l : d.leaves)
      std::cout << "effective leaf " << l.effective << ": order " << l.alphabet.order().str()
                << (l.state_isomorphic ? ", isomorphic to its state" : "") << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotTrimProper) throw;
    std::cout << "second decomposition skipped: not trim and proper at its states\n";
  }
  if (!out.empty()) {
    if (!tc.core) {
      std::cerr << "two-core: realization is cycle-free, no core to write\n";
      return kPrecondition;
    }
    io::save(*tc.core, out);
  }
  if (!graph.empty()) io::write_text(graph, to_dot(r, tc.core_constraints));
  return kOk;
}

struct DecodeArgs {
  std::string path, priors, out;
  bool exact = false;
  int iters = 50;
  std::string schedule = "flooding";
  double damping = 0.0, tol = 1e-8;
};

int cmd_decode(const DecodeArgs& a) {
  auto r = load_valid(a.path);
  auto pj = io::load_json(a.priors);
  io::Json doc;
  if (a.exact) {
    auto res = decode_exact(r, io::priors_exact(pj));
    doc["marginals"] = io::weights_to_json(res.marginals);
    doc["contradiction"] = res.contradiction;
  } else {
    DecodeOptions opt;
    opt.max_iterations = a.iters;
    opt.schedule = a.schedule == "serial" ? Schedule::Serial : Schedule::Flooding;
    opt.damping = a.damping;
    opt.tolerance = a.tol;
    auto res = decode_iterative(r, io::priors_float(pj), opt);
    doc["marginals"] = io::weights_to_json(res.marginals);
    doc["contradiction"] = res.contradiction;
    doc["converged"] = res.converged;
    doc["iterations"] = res.iterations;
    doc["final_delta"] = res.deltas.empty() ? 0.0 : res.deltas.back();
  }
  emit(a.out, doc.dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal realizations of group codes: validation, duality, analysis, minimization, decoding"};
  app.require_subcommand(1);
  std::string file, out, graph;
  bool external_only = false;
  std::vector<std::string> fragment;
  DecodeArgs dec;

  auto* validate_cmd = app.add_subcommand("validate", "check degrees and alphabets");
  validate_cmd->add_option("file", file)->required();
  auto* behavior_cmd = app.add_subcommand("behavior", "print the generator matrix of B (or C)");
  behavior_cmd->add_option("file", file)->required();
  behavior_cmd->add_flag("--external-only", external_only, "external code C only");
  auto* dual_cmd = app.add_subcommand("dual", "write the dual realization");
  dual_cmd->add_option("file", file)->required();
  dual_cmd->add_option("-o,--output", out);
  auto* check_cmd = app.add_subcommand("check-duality", "verify that the dual realization realizes the dual code");
  check_cmd->add_option("file", file)->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "trim/proper, observability, controllability");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_option("--fragment", fragment, "edges to cut; each resulting fragment is analyzed")->delimiter(',');
  auto* minimize_cmd = app.add_subcommand("minimize", "minimize a cycle-free realization");
  minimize_cmd->add_option("file", file)->required();
  minimize_cmd->add_option("-o,--output", out);
  auto* core_cmd = app.add_subcommand("two-core", "split into the 2-core and cycle-free leaves");
  core_cmd->add_option("file", file)->required();
  core_cmd->add_option("-o,--output", out, "write the core realization");
  core_cmd->add_option("--emit-graph", graph, "write a Graphviz description");
  auto* decode_cmd = app.add_subcommand("decode", "sum-product decoding");
  decode_cmd->add_option("file", dec.path)->required();
  decode_cmd->add_option("--priors", dec.priors)->required();
  decode_cmd->add_option("-o,--output", dec.out);
  auto* exact_flag = decode_cmd->add_flag("--exact", dec.exact, "exact rational two-pass decoding (cycle-free only)");
  decode_cmd->add_option("--iters", dec.iters)->check(CLI::PositiveNumber)->excludes(exact_flag);
  decode_cmd->add_option("--schedule", dec.schedule)
      ->check(CLI::IsMember({"flooding", "serial"}))
      ->excludes(exact_flag);
  decode_cmd->add_option("--damping", dec.damping)->check(CLI::Range(0.0, 0.999999))->excludes(exact_flag);
  decode_cmd->add_option("--tol", dec.tol)->check(CLI::PositiveNumber)->excludes(exact_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIo;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file);
    if (behavior_cmd->parsed()) return cmd_behavior(file, external_only);
    if (dual_cmd->parsed()) return cmd_dual(file, out);
    if (check_cmd->parsed()) return cmd_check_duality(file);
    if (analyze_cmd->parsed()) return cmd_analyze(file, fragment);
    if (minimize_cmd->parsed()) return cmd_minimize(file, out);
    if (core_cmd->parsed()) return cmd_two_core(file, out, graph);
    if (decode_cmd->parsed()) return cmd_decode(dec);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
