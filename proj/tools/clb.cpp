#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clb/auso/hypercube.hpp"
#include "clb/cli/suites.hpp"
#include "clb/cunningham/trace_io.hpp"
#include "clb/lp/standard_form.hpp"
#include "clb/mdp/instance.hpp"
#include "clb/parity/io.hpp"
#include "clb/parity/valuation.hpp"

using namespace clb;
using nlohmann::json;

namespace {

struct Options {
  int n = 3;
  std::string bignum, eps, ordering, pointer, initial = "paper";
  std::string out, golden, timings;
  std::vector<std::string> faces;
  std::size_t stride = 1;
  bool expanded = false;
  std::string what = "parity";
};

cli::RunConfig to_config(const Options& o) {
  cli::RunConfig c;
  c.n = o.n;
  if (!o.bignum.empty()) c.N = num::BigInt(o.bignum);
  if (!o.eps.empty()) c.eps = num::Rational::parse(o.eps);
  if (!o.ordering.empty()) c.ordering_file = o.ordering;
  if (!o.pointer.empty()) c.pointer = o.pointer;
  c.initial = o.initial;
  if (!o.faces.empty()) {
    auso::FaceMode m;
    if (o.faces[0] == "all") {
      if (o.faces.size() != 1) throw CLI::ValidationError("--faces", "'all' takes no count");
      m.exhaustive = true;
    } else if (o.faces[0] == "sample") {
      m.exhaustive = false;
      if (o.faces.size() == 2) m.samples = std::stoull(o.faces[1]);
    } else {
      throw CLI::ValidationError("--faces", "expected 'all' or 'sample K'");
    }
    c.faces = m;
  }
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + o.out);
}

void write_timings(const Options& o, const json& t) {
  std::string path = !o.timings.empty() ? o.timings : (o.out.empty() || o.out == "-" ? "" : o.out + ".timings.json");
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << t.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_generate(const std::string& formalism, const Options& o) {
  auto cfg = to_config(o);
  if (formalism == "parity") {
    emit(o, parity::to_json(family::build_game(cfg.n)).dump(1) + "\n");
  } else if (formalism == "mdp") {
    auto m = mdp::build_relaxed_mdp(cfg.n, cli::resolve_params(cfg));
    emit(o, mdp::to_json(o.expanded ? mdp::expand_relaxed(m) : m).dump(1) + "\n");
  } else if (formalism == "lp") {
    emit(o, lp::to_lp_text(lp::build_lp(cfg.n, cli::resolve_params(cfg)), "LP_" + std::to_string(cfg.n)));
  } else {
    auto cube = auso::orient_hypercube(cfg.n, cli::resolve_params(cfg));
    json j = {{"header", auso::header_json(cube)}, {"bitmap", cube.orientation.to_hex()}};
    emit(o, j.dump(1) + "\n");
  }
  return 0;
}

int cmd_run(const std::string& formalism, const Options& o) {
  auto cfg = to_config(o);
  cli::resolve_params(cfg);
  auto t0 = std::chrono::steady_clock::now();
  auto trace = cli::run_formalism(formalism, cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string text = cunningham::to_jsonl(trace);
  emit(o, text);
  write_timings(o, {{"run_seconds", secs}});

  std::ostream& info = (o.out.empty() || o.out == "-") ? std::cerr : std::cout;
  const std::size_t len = trace.steps.size();
  std::size_t degenerate = 0;
  for (const auto& s : trace.steps) degenerate += s.degenerate;
  info << formalism << " n=" << cfg.n << ": " << len << (formalism == "lp" ? " pivots" : " switches");
  if (formalism == "lp") info << " (objective strictly increasing, " << degenerate << " degenerate)";
  const std::string& cert = trace.steps.empty() ? trace.header.initial_certificate : trace.steps.back().certificate;
  info << "; terminal certificate " << cert << "\n";

  if (!o.golden.empty()) {
    if (auto diff = cunningham::diff_traces(text, read_file(o.golden))) {
      info << "golden mismatch: " << *diff << "\n";
      return 1;
    }
    info << "golden trace matches " << o.golden << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const Options& o) {
  auto cfg = to_config(o);
  cli::VerificationReport rep;
  auto want = [&](const char* s) { return suite == s || suite == "all"; };
  if (want("structure")) cli::suite_structure(3, cfg.n, rep);
  if (want("golden")) cli::suite_golden_prefix(rep);
  if (want("phases")) cli::suite_phases(cfg, rep);
  if (want("switches")) cli::suite_switches(cfg, rep);
  if (want("lengths")) cli::suite_lengths(3, cfg.n, rep);
  if (want("cross")) cli::suite_cross(cfg, rep);
  if (want("uso")) cli::suite_uso(cfg, rep);
  if (want("oracle")) cli::suite_oracle(cfg, o.stride, rep);
  if (want("conformance")) cli::suite_conformance(cfg, rep);

  json j = rep.to_json();
  j["suite"] = suite;
  emit(o, j.dump(2) + "\n");
  write_timings(o, rep.timings());
  for (const auto& c : rep.checks())
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << "\n";
  return rep.passed() ? 0 : 1;
}

int cmd_export(const std::string& kind, const Options& o) {
  auto cfg = to_config(o);
  if (kind == "lp") {
    emit(o, lp::to_lp_text(lp::build_lp(cfg.n, cli::resolve_params(cfg)), "LP_" + std::to_string(cfg.n)));
    return 0;
  }
  auto start = cli::resolve_initial(cfg);
  if (o.what == "mdp") {
    auto m = mdp::build_relaxed_mdp(cfg.n, cli::resolve_params(cfg));
    auto pol = mdp::policy_from_bits(m, start);
    if (o.expanded) {
      auto x = mdp::expand_relaxed(m);
      auto lifted = mdp::lift_policy(x, pol);
      emit(o, mdp::to_dot(x, &lifted));
    } else {
      emit(o, mdp::to_dot(m, &pol));
    }
    return 0;
  }
  auto g = family::build_game(cfg.n);
  auto s = start.to_strategy(g);
  auto br = parity::best_response(g, s);
  emit(o, parity::to_dot(g, &s, &br.tau));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower-bound constructions for Cunningham's rule: generate, run, verify, export"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "counter width (n >= 3)")->check(CLI::Range(3, 30));
    sub->add_option("--bignum", o.bignum, "priority base N (integer)");
    sub->add_option("--eps", o.eps, "epsilon as an exact fraction p/q");
    sub->add_option("--ordering", o.ordering, "edge ordering file (one switch per line) or 'builtin'");
    sub->add_option("--pointer", o.pointer, "initial Cunningham pointer (default: first edge of the ordering)");
    sub->add_option("--initial", o.initial, "initial strategy")->check(CLI::IsMember({"paper", "all-e-zero"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  std::string formalism, suite, kind;
  auto* gen = app.add_subcommand("generate", "write a construction (JSON / LP text / AUSO bitmap)");
  gen->add_option("formalism", formalism)->required()->check(CLI::IsMember({"parity", "mdp", "lp", "auso"}));
  gen->add_flag("--expanded", o.expanded, "mdp: emit the bipartite expansion");
  common(gen);

  auto* run = app.add_subcommand("run", "run Cunningham's rule and write the JSON-lines trace");
  run->add_option("formalism", formalism)->required()->check(CLI::IsMember({"parity", "mdp", "lp", "auso"}));
  run->add_option("--golden", o.golden, "diff the trace against this JSON-lines file");
  run->add_option("--timings", o.timings, "timings sidecar (default <out>.timings.json)");
  common(run);

  auto* ver = app.add_subcommand("verify", "run a verification suite and emit a JSON report");
  ver->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"phases", "switches", "lengths", "cross", "uso", "oracle", "structure", "golden",
                             "conformance", "all"}));
  ver->add_option("--faces", o.faces, "uso: 'all' or 'sample K'")->expected(1, 2);
  ver->add_option("--stride", o.stride, "oracle: check every k-th state")->check(CLI::PositiveNumber);
  ver->add_option("--timings", o.timings, "timings sidecar (default <out>.timings.json)");
  common(ver);

  auto* exp = app.add_subcommand("export", "export DOT graphs or LP text");
  exp->add_option("kind", kind)->required()->check(CLI::IsMember({"dot", "lp"}));
  exp->add_option("--of", o.what, "dot: parity or mdp")->check(CLI::IsMember({"parity", "mdp"}));
  exp->add_flag("--expanded", o.expanded, "dot of the expanded mdp");
  common(exp);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_generate(formalism, o);
    if (*run) return cmd_run(formalism, o);
    if (*ver) return cmd_verify(suite, o);
    return cmd_export(kind, o);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
