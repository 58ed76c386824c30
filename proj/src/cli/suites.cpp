#include "clb/cli/suites.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "clb/family/phases.hpp"
#include "clb/lp/simplex.hpp"
#include "clb/mdp/instance.hpp"
#include "clb/parity/instance.hpp"
#include "clb/parity/sink.hpp"
#include "clb/parity/valuation.hpp"

namespace clb::cli {

using nlohmann::json;
using cunningham::SwitchId;

void VerificationReport::add(CheckResult r) {
  for (const auto& c : checks_)
    if (c.name == r.name) throw std::logic_error("duplicate check " + r.name);
  checks_.push_back(std::move(r));
}

bool VerificationReport::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

json VerificationReport::to_json() const {
  json checks = json::array();
  for (const auto& c : checks_)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"summary", c.summary}, {"detail", c.detail}});
  return {{"passed", passed()}, {"checks", checks}};
}

json VerificationReport::timings() const {
  json t = json::object();
  for (const auto& c : checks_) t[c.name] = c.seconds;
  return t;
}

CheckResult timed_check(std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

mdp::MdpParams resolve_params(const RunConfig& cfg) {
  mdp::MdpParams p = mdp::default_params(cfg.n);
  if (cfg.N) p.N = *cfg.N;
  if (cfg.eps) p.eps = *cfg.eps;
  mdp::check_admissible(cfg.n, p);
  return p;
}

cunningham::EdgeOrdering resolve_ordering(const RunConfig& cfg) {
  if (!cfg.ordering_file || *cfg.ordering_file == "builtin") return family::build_ordering(cfg.n);
  std::ifstream in(*cfg.ordering_file);
  if (!in) throw std::runtime_error("cannot read ordering file " + *cfg.ordering_file);
  std::stringstream ss;
  ss << in.rdbuf();
  auto ord = cunningham::EdgeOrdering::parse(ss.str(), *cfg.ordering_file);
  auto dom = family::switch_names(cfg.n);
  ord.check_domain(dom);
  return ord;
}

SwitchId resolve_pointer(const RunConfig& cfg, const cunningham::EdgeOrdering& ord) {
  if (!cfg.pointer) return ord.minimum();
  if (!ord.contains(*cfg.pointer)) throw std::invalid_argument("pointer " + *cfg.pointer + " is not in the ordering");
  return *cfg.pointer;
}

family::BitStrategy resolve_initial(const RunConfig& cfg) {
  if (cfg.initial == "paper") return family::initial_strategy(cfg.n);
  if (cfg.initial == "all-e-zero") return family::initial_strategy_all_e_zero(cfg.n);
  throw std::invalid_argument("unknown initial strategy " + cfg.initial + " (paper | all-e-zero)");
}

auso::FaceMode resolve_faces(const RunConfig& cfg) {
  if (cfg.faces) return *cfg.faces;
  auso::FaceMode m;
  m.exhaustive = cfg.n == 3;
  return m;
}

cunningham::RunTrace run_formalism(std::string_view formalism, const RunConfig& cfg) {
  auto ord = resolve_ordering(cfg);
  auto e0 = resolve_pointer(cfg, ord);
  auto start = resolve_initial(cfg);
  if (formalism == "parity") {
    auto g = family::build_game(cfg.n);
    parity::ParityInstance inst(g, start.to_strategy(g), cfg.n);
    return cunningham::run(inst, ord, e0);
  }
  if (formalism == "mdp") {
    auto inst = mdp::mdp_instance(cfg.n, resolve_params(cfg), start);
    return cunningham::run(inst, ord, e0);
  }
  if (formalism == "lp") {
    auto inst = lp::simplex_instance(cfg.n, resolve_params(cfg), start);
    return cunningham::run(inst, ord, e0);
  }
  if (formalism == "auso") {
    auto cube = auso::orient_hypercube(cfg.n, resolve_params(cfg));
    auso::AusoInstance inst(cube, auso::encode_vertex(start));
    return cunningham::run(inst, ord, e0);
  }
  throw std::invalid_argument("unknown formalism " + std::string(formalism));
}

std::vector<family::BitStrategy> visited_strategies(const family::BitStrategy& start, std::span<const SwitchId> seq) {
  std::vector<family::BitStrategy> out{start};
  for (const auto& e : seq) {
    out.push_back(out.back());
    out.back().apply(e);
  }
  return out;
}

const std::vector<PrefixRow>& paper_prefix_table() {
  static const std::vector<PrefixRow> rows = {
      {1, {"e_2^1", "e_3^1"}, "e_2^1", {{"F_2", "h_2"}}},
      {1, {"a_2^1", "b_2^1", "c_2^1", "e_3^1"}, "b_2^1", {}},
      {1, {"a_2^1", "c_2^1", "d_3^0", "e_3^1"}, "d_3^0", {}},
      {1, {"a_2^1", "c_2^1", "e_3^1"}, "e_3^1", {{"F_3", "d_3"}}},
      {2, {"a_2^1", "c_2^1", "d_3^1"}, "c_2^1", {}},
      {3, {"a_2^1", "d_3^1", "e_1^0", "e_3^0"}, "e_3^0", {}},
      {3, {"a_2^1", "d_3^1", "e_1^0"}, "e_1^0", {}},
      {4, {"a_2^1", "d_3^1"}, "d_3^1", {{"F_3", "e_3"}}},
      {5, {"a_2^1", "e_3^1"}, "a_2^1", {{"F_1", "e_1"}}},
  };
  return rows;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

std::string responses_str(const std::vector<cunningham::Response>& rs) {
  std::vector<std::string> v;
  for (const auto& r : rs) v.push_back(r.node + "->" + r.to);
  return join(v);
}

json config_json(const RunConfig& cfg) {
  auto p = resolve_params(cfg);
  return {{"n", cfg.n},
          {"N", p.N.get_str()},
          {"eps", p.eps.str()},
          {"ordering", cfg.ordering_file.value_or("builtin")},
          {"initial", cfg.initial}};
}

std::map<SwitchId, int> multiset(const std::vector<SwitchId>& v) {
  std::map<SwitchId, int> m;
  for (const auto& e : v) ++m[e];
  return m;
}

// per-increment multisets of Lemma "policy proceeding"; returns mismatch descriptions
std::vector<std::string> increment_mismatches(const family::BitStrategy& start, const std::vector<SwitchId>& seq, int n,
                                              std::size_t& groups) {
  std::vector<std::string> bad;
  auto by = family::group_by_increment(start, seq);
  groups = by.size();
  for (const auto& [c, v] : by)
    if (multiset(v) != family::increment_switches(family::CounterConfig(c), n))
      bad.push_back("increment from " + family::CounterConfig(c).str(n));
  return bad;
}

bool strictly_increasing(const cunningham::RunTrace& t, std::string& why) {
  num::Rational prev = num::Rational::parse(t.header.initial_certificate);
  for (const auto& s : t.steps) {
    num::Rational cur = num::Rational::parse(s.certificate);
    if (!(prev < cur)) {
      why = "step " + std::to_string(s.index) + " (" + s.applied + "): " + prev.str() + " -> " + cur.str();
      return false;
    }
    prev = cur;
  }
  return true;
}

// τ-odometer over all player-1 strategies
std::vector<parity::Strategy1> all_player1_strategies(const parity::ParityGame& g) {
  std::vector<parity::Strategy1> out;
  parity::Strategy1 t = parity::default_strategy1(g);
  std::vector<parity::NodeId> free;
  for (const auto& v : g.nodes())
    if (v.owner == parity::Player::One) {
      t.choice[static_cast<std::size_t>(v.id)] = 0;
      if (g.successors(v.id).size() > 1) free.push_back(v.id);
    }
  while (true) {
    out.push_back(t);
    std::size_t k = 0;
    for (; k < free.size(); ++k) {
      auto& c = t.choice[static_cast<std::size_t>(free[k])];
      if (static_cast<std::size_t>(++c) < g.successors(free[k]).size()) break;
      c = 0;
    }
    if (k == free.size()) break;
  }
  return out;
}

// non-empty description if xi is not the pointwise minimum over all τ
std::optional<std::string> brute_force_mismatch(const parity::ParityGame& g, const parity::Strategy0& s,
                                                const parity::GameValuation& xi,
                                                const std::vector<parity::Strategy1>& taus) {
  std::vector<parity::GameValuation> all;
  for (const auto& t : taus) all.push_back(parity::game_valuation(g, s, t));
  for (std::size_t v = 0; v < g.size(); ++v) {
    const parity::NodeValuation* best = nullptr;
    for (const auto& a : all) {
      if (!best) {
        best = &a[v];
        continue;
      }
      auto c = parity::compare_valuations(g, a[v], *best);
      if (c == parity::CompareResult::Less) best = &a[v];
    }
    for (const auto& a : all) {
      auto c = parity::compare_valuations(g, *best, a[v]);
      if (c != parity::CompareResult::Less && c != parity::CompareResult::Equal)
        return "no minimum at " + g.label(static_cast<parity::NodeId>(v));
    }
    if (!(*best == xi[v]))
      return "node " + g.label(static_cast<parity::NodeId>(v)) + ": best response " + parity::format_valuation(g, xi[v]) +
             ", brute force " + parity::format_valuation(g, *best);
  }
  return std::nullopt;
}

// improving set vs the non-"?" cells of the improving-switch table
std::vector<std::string> table_mismatches(const family::BitStrategy& s, const std::vector<SwitchId>& improving) {
  std::vector<std::string> bad;
  std::set<SwitchId> I(improving.begin(), improving.end());
  auto cls = family::classify_phase(s);
  if (cls.empty()) {
    bad.push_back("unclassified strategy " + s.str());
    return bad;
  }
  for (const auto& a : cls.matches) {
    auto c = family::expected_switch_constraints(a, s);
    std::string tag = "phase " + std::to_string(a.phase) + "@" + a.config.str(s.n());
    for (const auto& e : c.must_include)
      if (!I.count(e)) bad.push_back(tag + ": " + e + " expected improving");
    for (const auto& e : c.must_exclude)
      if (I.count(e)) bad.push_back(tag + ": " + e + " expected not improving");
  }
  return bad;
}

std::vector<SwitchId> improving_at(const cunningham::RunTrace& t, std::size_t k) {
  return k < t.steps.size() ? t.steps[k].improving : std::vector<SwitchId>{};
}

void cap_list(json& arr, const std::string& s, std::size_t cap = 20) {
  if (arr.size() < cap) arr.push_back(s);
}

}  // namespace

void suite_structure(int n_lo, int n_hi, VerificationReport& rep) {
  for (int n = n_lo; n <= n_hi; ++n) {
    rep.add(timed_check("structure.n=" + std::to_string(n), [n](CheckResult& r) {
      auto g = family::build_game(n);
      g.validate();
      std::set<int> prios;
      int maxp = 0;
      for (const auto& v : g.nodes()) {
        prios.insert(v.priority);
        maxp = std::max(maxp, v.priority);
      }
      json got = {{"nodes", g.size()}, {"edges", g.edge_count()}, {"priorities", prios.size()}, {"max_priority", maxp}};
      json want = {{"nodes", 8 * n - 3}, {"edges", 15 * n - 9}, {"priorities", 2 * n + 5}, {"max_priority", 2 * n + 8}};
      r.passed = got == want;
      if (n <= 6) {
        auto sink = parity::validate_sink_game(g, family::initial_strategy(n).to_strategy(g));
        got["sink_game"] = sink.passed;
        r.passed = r.passed && sink.passed;
      }
      r.detail = {{"actual", got}, {"expected", want}};
      r.summary = "|V|=" + got["nodes"].dump() + " |E|=" + got["edges"].dump() + " priorities=" +
                  got["priorities"].dump() + " max=" + std::to_string(maxp);
    }));
  }
}

void suite_golden_prefix(VerificationReport& rep) {
  rep.add(timed_check("golden_prefix.n=3", [](CheckResult& r) {
    RunConfig cfg;
    auto t = run_formalism("parity", cfg);
    const auto& rows = paper_prefix_table();
    json mism = json::array();
    auto states = visited_strategies(family::initial_strategy(3), t.switch_sequence());
    json phases = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const auto& st = t.steps.at(i);
      auto a = std::set<std::string>(st.improving.begin(), st.improving.end());
      auto p = std::set<std::string>(row.improving.begin(), row.improving.end());
      auto rowno = static_cast<int>(i + 1);
      if (a != p)
        mism.push_back({{"row", rowno}, {"column", "improving"}, {"paper", join(row.improving)}, {"actual", join(st.improving)}});
      if (st.applied != row.selected)
        mism.push_back({{"row", rowno}, {"column", "selected"}, {"paper", row.selected}, {"actual", st.applied}});
      if (st.responses != row.responses)
        mism.push_back({{"row", rowno},
                        {"column", "response"},
                        {"paper", responses_str(row.responses)},
                        {"actual", responses_str(st.responses)}});
      phases.push_back({{"row", rowno}, {"paper", row.phase}, {"display", family::classify_phase(states[i]).display().phase}});
    }
    r.passed = mism.empty();
    r.detail = {{"mismatches", mism}, {"phase_column_info", phases}};
    r.summary = std::to_string(mism.size()) + " of 27 cells differ from the simulation table";
  }));
}

void suite_phases(const RunConfig& cfg, VerificationReport& rep) {
  rep.add(timed_check("phases.n=" + std::to_string(cfg.n), [&cfg](CheckResult& r) {
    auto t = run_formalism("parity", cfg);
    auto states = visited_strategies(resolve_initial(cfg), t.switch_sequence());
    json bad = json::array();
    std::vector<std::uint64_t> configs;
    std::map<int, int> per_phase;
    for (std::size_t k = 0; k < states.size(); ++k) {
      auto c = family::classify_phase(states[k]);
      if (c.empty()) {
        cap_list(bad, "state " + std::to_string(k) + " matches no phase");
        continue;
      }
      if (cfg.n <= 4 && family::classify_phase_exhaustive(states[k]).matches != c.matches)
        cap_list(bad, "state " + std::to_string(k) + ": pruned and exhaustive classification differ");
      ++per_phase[c.display().phase];
      std::uint64_t b = c.max_config().value();
      if (!configs.empty() && b < configs.back()) cap_list(bad, "state " + std::to_string(k) + ": configuration decreases");
      if (configs.empty() || configs.back() != b) configs.push_back(b);
    }
    const std::uint64_t top = (std::uint64_t{1} << cfg.n) - 1;
    std::vector<std::uint64_t> want;
    for (std::uint64_t b = 1; b <= top; ++b) want.push_back(b);
    if (configs != want) cap_list(bad, "configurations do not run 1..2^n-1 in order");
    json cj = json::array();
    for (auto b : configs) cj.push_back(family::CounterConfig(b).str(cfg.n));
    json pj = json::object();
    for (auto [p, c] : per_phase) pj[std::to_string(p)] = c;
    r.passed = bad.empty();
    r.detail = {{"config", config_json(cfg)}, {"states", states.size()}, {"configurations", cj}, {"display_phase_counts", pj},
                {"failures", bad}};
    r.summary = std::to_string(t.steps.size()) + " steps classified, configurations " + cj.front().get<std::string>() +
                "->" + cj.back().get<std::string>();
  }));
}

void suite_switches(const RunConfig& cfg, VerificationReport& rep) {
  rep.add(timed_check("switches.table.n=" + std::to_string(cfg.n), [&cfg](CheckResult& r) {
    auto t = run_formalism("parity", cfg);
    auto states = visited_strategies(resolve_initial(cfg), t.switch_sequence());
    json bad = json::array();
    std::size_t total = 0;
    for (std::size_t k = 0; k < states.size(); ++k)
      for (const auto& m : table_mismatches(states[k], improving_at(t, k))) {
        ++total;
        cap_list(bad, "state " + std::to_string(k) + ": " + m);
      }
    r.passed = total == 0;
    r.detail = {{"states", states.size()}, {"mismatches", total}, {"examples", bad}};
    r.summary = std::to_string(states.size()) + " improving sets checked against the table, " + std::to_string(total) +
                " mismatches";
  }));
  rep.add(timed_check("switches.increments.n=" + std::to_string(cfg.n), [&cfg](CheckResult& r) {
    auto t = run_formalism("parity", cfg);
    std::size_t groups = 0;
    auto bad = increment_mismatches(resolve_initial(cfg), t.switch_sequence(), cfg.n, groups);
    r.passed = bad.empty() && groups == (std::size_t{1} << cfg.n) - 2;
    r.detail = {{"increments", groups}, {"mismatches", bad}};
    r.summary = std::to_string(groups) + " increments, " + std::to_string(bad.size()) + " multiset mismatches";
  }));
}

void suite_lengths(int n_lo, int n_hi, VerificationReport& rep) {
  for (int n = n_lo; n <= n_hi; ++n) {
    rep.add(timed_check("lengths.n=" + std::to_string(n), [n](CheckResult& r) {
      RunConfig cfg;
      cfg.n = n;
      auto t = run_formalism("parity", cfg);
      auto seq = t.switch_sequence();
      std::size_t groups = 0;
      auto bad = increment_mismatches(family::initial_strategy(n), seq, n, groups);
      auto ord = family::build_ordering(n);
      auto pd = cunningham::pointer_discipline_violation(t, ord);
      const std::size_t bound = std::size_t{1} << n;
      r.passed = seq.size() >= bound && bad.empty() && groups == bound - 2 && !pd;
      r.detail = {{"length", seq.size()}, {"bound", bound}, {"increments", groups}, {"increment_mismatches", bad},
                  {"pointer_discipline_ok", !pd}};
      r.summary = std::to_string(seq.size()) + " switches (>= " + std::to_string(bound) + "), " +
                  std::to_string(groups) + " increments, " + std::to_string(bad.size()) + " mismatches";
    }));
  }
}

void suite_cross(const RunConfig& cfg, VerificationReport& rep) {
  const std::string sfx = ".n=" + std::to_string(cfg.n);
  std::optional<cunningham::RunTrace> parity;
  rep.add(timed_check("monotone.parity" + sfx, [&](CheckResult& r) {
    parity = run_formalism("parity", cfg);
    r.passed = true;
    r.summary = std::to_string(parity->steps.size()) + " switches, each strictly improving the game valuation";
  }));
  std::vector<std::string> formalisms = {"mdp", "lp"};
  if (cfg.n <= auso::kMaxMaterializedN) formalisms.push_back("auso");
  for (const auto& f : formalisms) {
    std::optional<cunningham::RunTrace> t;
    rep.add(timed_check("monotone." + f + sfx, [&](CheckResult& r) {
      t = run_formalism(f, cfg);
      std::string why;
      bool inc = f == "auso" || strictly_increasing(*t, why);
      std::size_t degenerate = 0;
      for (const auto& s : t->steps) degenerate += s.degenerate;
      r.passed = inc && degenerate == 0;
      r.detail = {{"steps", t->steps.size()}, {"degenerate", degenerate}, {"violation", why}};
      r.summary = std::to_string(t->steps.size()) + " steps, certificate " +
                  (f == "auso" ? "potential strictly increasing" : (inc ? "strictly increasing" : "NOT increasing")) +
                  (f == "lp" ? ", " + std::to_string(degenerate) + " degenerate pivots" : "");
    }));
    rep.add(timed_check("cross." + f + sfx, [&](CheckResult& r) {
      if (!parity || !t) throw std::runtime_error("missing trace");
      auto a = parity->switch_sequence();
      auto b = t->switch_sequence();
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
      r.passed = a == b;
      r.detail = {{"parity_length", a.size()}, {"length", b.size()}};
      if (!r.passed) {
        r.detail["first_difference"] = k;
        r.detail["parity"] = k < a.size() ? a[k] : "";
        r.detail[f] = k < b.size() ? b[k] : "";
      }
      r.summary = r.passed ? f + " sequence equals parity (" + std::to_string(a.size()) + " switches)"
                           : f + " differs from parity at step " + std::to_string(k + 1);
    }));
  }
}

void suite_uso(const RunConfig& cfg, VerificationReport& rep) {
  const std::string sfx = ".n=" + std::to_string(cfg.n);
  if (cfg.n > auso::kMaxMaterializedN) {
    rep.add(timed_check("uso" + sfx, [](CheckResult& r) {
      r.summary = "orientation is only materialized for n <= 4";
      r.passed = false;
    }));
    return;
  }
  std::optional<auso::RealizedCube> cube;
  auto mode = resolve_faces(cfg);
  rep.add(timed_check("uso.axioms" + sfx, [&](CheckResult& r) {
    cube = auso::orient_hypercube(cfg.n, resolve_params(cfg));
    auto a = auso::check_auso(*cube, mode);
    const auto expect_faces = mode.exhaustive ? [&] {
      std::uint64_t x = 1;
      for (int i = 0; i < cube->orientation.dimension(); ++i) x *= 3;
      return x;
    }() : mode.samples;
    r.passed = a.passed() && a.faces.checked == expect_faces;
    r.detail = {{"dimension", cube->orientation.dimension()},
                {"potential_ok", a.potential_ok.value_or(false)},
                {"acyclic", a.acyclic},
                {"faces_mode", mode.exhaustive ? "all" : "sample"},
                {"faces_checked", a.faces.checked},
                {"faces_failed", a.faces.failed},
                {"strict_edges", cube->strict_edges},
                {"tiebroken_edges", cube->tiebroken_edges},
                {"failures", a.failures}};
    r.summary = std::to_string(a.faces.checked - a.faces.failed) + "/" + std::to_string(a.faces.checked) +
                " faces with a unique sink, " + (a.acyclic ? "acyclic" : "CYCLIC") + ", potential " +
                (a.potential_ok.value_or(false) ? "ok" : "violated");
  }));
  rep.add(timed_check("uso.pairs" + sfx, [&](CheckResult& r) {
    if (!cube) throw std::runtime_error("no orientation");
    auto bad = auso::kernels::uso_pair_violations(cube->orientation.outmaps());
    r.passed = bad == 0;
    r.detail = {{"violating_pairs", bad}, {"kernel", auso::kernels::isa_name(auso::kernels::best_isa())}};
    r.summary = std::to_string(bad) + " vertex pairs violate the USO pair condition";
  }));
  rep.add(timed_check("uso.sink" + sfx, [&](CheckResult& r) {
    if (!cube) throw std::runtime_error("no orientation");
    auto sinks = auso::global_sinks(cube->orientation);
    auto terminal = auso::encode_vertex(family::terminal_strategy(cfg.n));
    bool optimal = false;
    if (sinks.size() == 1) {
      auto m = mdp::build_relaxed_mdp(cfg.n, resolve_params(cfg));
      auto pol = mdp::policy_from_bits(m, auso::decode_vertex(cfg.n, sinks[0]));
      optimal = mdp::improving_switches_mdp(m, pol, mdp::policy_values(m, pol)).empty();
    }
    r.passed = sinks.size() == 1 && sinks[0] == terminal && optimal;
    r.detail = {{"sinks", sinks.size()}, {"terminal_vertex", terminal}, {"optimal_policy", optimal}};
    if (!sinks.empty()) r.detail["sink"] = auso::decode_vertex(cfg.n, sinks[0]).str();
    r.summary = r.passed ? "unique global sink = terminal strategy, optimal" : "global sink check failed";
  }));
  rep.add(timed_check("uso.consistency" + sfx, [&](CheckResult& r) {
    if (!cube) throw std::runtime_error("no orientation");
    auto t = run_formalism("parity", cfg);
    auto states = visited_strategies(resolve_initial(cfg), t.switch_sequence());
    std::vector<auso::Vertex> vs;
    for (const auto& s : states) vs.push_back(auso::encode_vertex(s));
    auto c = auso::check_consistency_with_Hn(cube->orientation, cfg.n, mdp::build_relaxed_mdp(cfg.n, resolve_params(cfg)), vs);
    auto path = auso::path_follow(*cube, vs.front(), resolve_ordering(cfg), resolve_pointer(cfg, resolve_ordering(cfg)));
    r.passed = c.passed() && path == vs;
    json d = json::array();
    for (const auto& x : c.disagreements) cap_list(d, x);
    r.detail = {{"strategies", c.strategies}, {"improving_checked", c.improving_checked},
                {"degradable_checked", c.degradable_checked}, {"disagreements", d}, {"path_equals_trace", path == vs}};
    r.summary = std::to_string(c.strategies) + " visited strategies, " + std::to_string(c.disagreements.size()) +
                " disagreements with H_n";
  }));
}

void suite_oracle(const RunConfig& cfg, std::size_t stride, VerificationReport& rep) {
  if (stride == 0) stride = 1;
  rep.add(timed_check("oracle.best_response.n=" + std::to_string(cfg.n), [&](CheckResult& r) {
    auto g = family::build_game(cfg.n);
    auto t = run_formalism("parity", cfg);
    auto states = visited_strategies(resolve_initial(cfg), t.switch_sequence());
    auto taus = all_player1_strategies(g);
    json bad = json::array();
    std::size_t checked = 0, table_bad = 0;
    for (std::size_t k = 0; k < states.size(); k += stride) {
      ++checked;
      auto s = states[k].to_strategy(g);
      auto br = parity::best_response(g, s);
      if (auto m = brute_force_mismatch(g, s, br.xi, taus)) cap_list(bad, "state " + std::to_string(k) + ": " + *m);
      std::vector<SwitchId> I;
      for (const auto& e : parity::improving_switches(g, s, br.xi)) I.push_back(parity::edge_name(g, e));
      auto recorded = improving_at(t, k);
      if (std::set<SwitchId>(I.begin(), I.end()) != std::set<SwitchId>(recorded.begin(), recorded.end()))
        cap_list(bad, "state " + std::to_string(k) + ": recomputed improving set differs from the trace");
      for (const auto& m : table_mismatches(states[k], I)) {
        ++table_bad;
        cap_list(bad, "state " + std::to_string(k) + ": " + m);
      }
    }
    r.passed = bad.empty();
    r.detail = {{"states_checked", checked}, {"player1_strategies", taus.size()}, {"table_mismatches", table_bad},
                {"failures", bad}};
    r.summary = std::to_string(checked) + " states vs " + std::to_string(taus.size()) + " player-1 strategies, " +
                std::to_string(bad.size()) + " failures";
  }));
}

namespace {

class ObservedSimplex : public lp::SimplexInstance {
public:
  ObservedSimplex(lp::SimplexInstance base, const mdp::RelaxedMdp& m, int n)
      : lp::SimplexInstance(std::move(base)), m_(m), n_(n) {
    observe();
  }
  cunningham::StepOutcome apply(const SwitchId& e) override {
    auto out = lp::SimplexInstance::apply(e);
    observe();
    return out;
  }
  std::size_t bases = 0;
  std::vector<std::string> failures;

private:
  void observe() {
    ++bases;
    try {
      auto bits = lp::bits_from_basis(program(), basis(), n_);
      auto pol = mdp::policy_from_bits(m_, bits);
      auto sum = mdp::controller_value_sum(m_, mdp::policy_values(m_, pol));
      if (sum != solution().objective)
        failures.push_back("basis " + std::to_string(bases - 1) + ": c^T x = " + solution().objective.str() +
                           ", sum val = " + sum.str());
      for (std::size_t j = 0; j < program().cols(); ++j)
        if (solution().x[j].sign() > 0 && !bits.contains(program().var_names[j]))
          failures.push_back("basis " + std::to_string(bases - 1) + ": x > 0 on unchosen " + program().var_names[j]);
    } catch (const std::exception& e) {
      failures.push_back("basis " + std::to_string(bases - 1) + ": " + e.what());
    }
  }
  const mdp::RelaxedMdp& m_;
  int n_;
};

}  // namespace

void suite_conformance(const RunConfig& cfg, VerificationReport& rep) {
  const std::string sfx = ".n=" + std::to_string(cfg.n);
  rep.add(timed_check("conformance.rows" + sfx, [&](CheckResult& r) {
    auto p = resolve_params(cfg);
    auto m = mdp::build_relaxed_mdp(cfg.n, p);
    auto a = lp::build_lp(cfg.n, p);
    auto c1 = lp::compare_lps(a, lp::lp_from_mdp(m));
    auto c2 = lp::compare_lps(a, lp::lp_from_mdp(mdp::expand_relaxed(m)));
    r.passed = c1.passed() && c2.passed();
    r.detail = {{"variables", a.cols()}, {"constraints", a.rows()}, {"relaxed", c1.passed()}, {"expanded", c2.passed()},
                {"mismatches", c1.mismatches}, {"expanded_mismatches", c2.mismatches}};
    r.summary = "build_lp vs lp_from_mdp: " + std::string(r.passed ? "row-equivalent" : "DIFFERENT") + " (" +
                std::to_string(a.cols()) + " variables, " + std::to_string(a.rows()) + " constraints)";
  }));
  rep.add(timed_check("conformance.objective" + sfx, [&](CheckResult& r) {
    auto p = resolve_params(cfg);
    auto m = mdp::build_relaxed_mdp(cfg.n, p);
    ObservedSimplex inst(lp::simplex_instance(cfg.n, p, resolve_initial(cfg)), m, cfg.n);
    auto ord = resolve_ordering(cfg);
    cunningham::run(inst, ord, resolve_pointer(cfg, ord));
    auto dual = lp::check_dual(inst.program(), inst.basis());
    auto fin = mdp::policy_values(m, mdp::policy_from_bits(m, lp::bits_from_basis(inst.program(), inst.basis(), cfg.n)));
    bool y_is_value = true;
    for (std::size_t i = 0; i < inst.program().rows(); ++i)
      y_is_value = y_is_value && dual.y[i] == fin[static_cast<std::size_t>(m.at(inst.program().row_names[i]))];
    r.passed = inst.failures.empty() && dual.feasible && dual.tight_on_basis && y_is_value;
    json f = json::array();
    for (const auto& x : inst.failures) cap_list(f, x);
    r.detail = {{"bases", inst.bases}, {"failures", f}, {"dual_feasible", dual.feasible},
                {"dual_tight", dual.tight_on_basis}, {"dual_equals_values", y_is_value}};
    r.summary = std::to_string(inst.bases) + " bases with c^T x = sum of values: " +
                std::to_string(inst.bases - inst.failures.size()) + ", final dual " +
                (dual.feasible && dual.tight_on_basis ? "feasible" : "INFEASIBLE");
  }));
}

}  // namespace clb::cli
