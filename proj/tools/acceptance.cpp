#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "clb/cli/suites.hpp"

using namespace clb;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: none
  void (*fill)(cli::VerificationReport&);
};

cli::RunConfig cfg_n(int n) {
  cli::RunConfig c;
  c.n = n;
  return c;
}

void c1(cli::VerificationReport& rep) {
  rep.add(cli::timed_check("length.n=3", [](cli::CheckResult& r) {
    auto t = cli::run_formalism("parity", cfg_n(3));
    r.passed = t.steps.size() == 36;
    r.summary = std::to_string(t.steps.size()) + " switches (expected 36)";
  }));
}
void c2(cli::VerificationReport& rep) { cli::suite_golden_prefix(rep); }
void c3(cli::VerificationReport& rep) { cli::suite_lengths(3, 10, rep); }
void c4(cli::VerificationReport& rep) { cli::suite_structure(3, 12, rep); }
void c5(cli::VerificationReport& rep) {
  for (int n = 3; n <= 6; ++n) cli::suite_cross(cfg_n(n), rep);
}
void c6(cli::VerificationReport& rep) { c5(rep); }
void c7(cli::VerificationReport& rep) {
  cli::suite_oracle(cfg_n(3), 1, rep);
  cli::suite_oracle(cfg_n(4), 1, rep);
}
void c8(cli::VerificationReport& rep) {
  auto a = cfg_n(3);
  a.faces = auso::FaceMode{true, 0, 0};
  cli::suite_uso(a, rep);
  auto b = cfg_n(4);
  b.faces = auso::FaceMode{false, 100000, 0x5eed5eedULL};
  cli::suite_uso(b, rep);
}
void c9(cli::VerificationReport& rep) {
  for (int n = 3; n <= 5; ++n) cli::suite_conformance(cfg_n(n), rep);
}

const Criterion kCriteria[] = {
    {1, "exact n=3 run length", 1.0, c1},
    {2, "golden prefix of the n=3 trace", 1.0, c2},
    {3, "exponential growth n=3..10 with per-increment structure", 0, c3},
    {4, "structural counts n=3..12", 0, c4},
    {5, "cross-formalism trace equality", 0, c5},
    {6, "monotone certificates", 0, c6},
    {7, "best-response oracle and improving-switch table", 0, c7},
    {8, "AUSO axioms", 0, c8},
    {9, "LP/MDP conformance", 0, c9},
};

// c5 and c6 share suite_cross; each keeps only its own checks
bool relevant(int id, const std::string& name) {
  if (id == 5) return name.rfind("cross.", 0) == 0;
  if (id == 6) return name.rfind("monotone.", 0) == 0;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks, one line per criterion"};
  int only = 0;
  bool verbose = false;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 9));
  app.add_flag("-v,--verbose", verbose, "print every check");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    cli::VerificationReport rep;
    auto t0 = std::chrono::steady_clock::now();
    c.fill(rep);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    std::string first_fail;
    std::size_t n_checks = 0;
    for (const auto& r : rep.checks()) {
      if (!relevant(c.id, r.name)) continue;
      ++n_checks;
      if (!r.passed && first_fail.empty()) first_fail = r.name + ": " + r.summary;
      ok = ok && r.passed;
      if (verbose || !r.passed) std::cout << "    " << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.summary << "\n";
    }
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      if (first_fail.empty()) first_fail = "runtime budget exceeded";
    }
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " - " << c.title << " (" << n_checks
              << " checks, " << secs << " s)";
    if (!ok) std::cout << " - " << first_fail;
    std::cout << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
