#include "clb/cunningham/trace_io.hpp"

#include <sstream>
#include <vector>

namespace clb::cunningham {

using nlohmann::json;

std::string to_jsonl(const RunTrace& trace) {
  std::string out;
  const auto& h = trace.header;
  json head = {{"record", "header"},        {"formalism", h.formalism},
               {"n", h.n},                  {"ordering", h.ordering},
               {"pointer", h.initial_pointer}, {"certificate", h.initial_certificate},
               {"parameters", h.parameters}, {"steps", trace.steps.size()}};
  out += head.dump() + "\n";
  for (const auto& s : trace.steps) {
    json r = {{"record", "step"}, {"step", s.index}, {"applied", s.applied}, {"improving", s.improving}};
    json resp = json::array();
    for (const auto& x : s.responses) resp.push_back({x.node, x.to});
    r["response"] = resp;
    r["certificate"] = s.certificate;
    if (s.leaving) r["leaving"] = *s.leaving;
    if (s.degenerate) r["degenerate"] = true;
    out += r.dump() + "\n";
  }
  return out;
}

RunTrace from_jsonl(std::string_view text) {
  RunTrace t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.at("record") == "header") {
      t.header.formalism = j.at("formalism");
      t.header.n = j.at("n");
      t.header.ordering = j.at("ordering");
      t.header.initial_pointer = j.at("pointer");
      t.header.initial_certificate = j.value("certificate", "");
      t.header.parameters = j.value("parameters", json::object());
      have_header = true;
      continue;
    }
    TraceStep s;
    s.index = j.at("step");
    s.applied = j.at("applied");
    s.improving = j.at("improving").get<std::vector<SwitchId>>();
    for (const auto& r : j.at("response")) s.responses.push_back({r.at(0), r.at(1)});
    s.certificate = j.value("certificate", "");
    if (j.contains("leaving")) s.leaving = j.at("leaving").get<std::string>();
    s.degenerate = j.value("degenerate", false);
    t.steps.push_back(std::move(s));
  }
  if (!have_header) throw std::invalid_argument("trace has no header record");
  return t;
}

std::optional<std::string> diff_traces(std::string_view actual, std::string_view golden) {
  std::istringstream a{std::string(actual)}, g{std::string(golden)};
  std::string la, lg;
  for (int line = 1;; ++line) {
    bool ha = static_cast<bool>(std::getline(a, la));
    bool hg = static_cast<bool>(std::getline(g, lg));
    if (!ha && !hg) return std::nullopt;
    if (ha != hg) return "line " + std::to_string(line) + ": " + (ha ? "extra line in actual" : "actual ends early");
    if (la != lg) return "line " + std::to_string(line) + ":\n  actual: " + la + "\n  golden: " + lg;
  }
}

}  // namespace clb::cunningham
