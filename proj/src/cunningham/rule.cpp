#include "clb/cunningham/rule.hpp"

#include <algorithm>
#include <sstream>

namespace clb::cunningham {

EdgeOrdering::EdgeOrdering(std::vector<SwitchId> sequence, std::string id) : seq_(std::move(sequence)), id_(std::move(id)) {
  for (std::size_t i = 0; i < seq_.size(); ++i)
    if (!rank_.emplace(seq_[i], i).second) throw std::invalid_argument("ordering repeats " + seq_[i]);
}

EdgeOrdering EdgeOrdering::parse(std::string_view text, std::string id) {
  std::vector<SwitchId> seq;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) seq.push_back(w);
  }
  return EdgeOrdering(std::move(seq), std::move(id));
}

std::size_t EdgeOrdering::rank(const SwitchId& e) const {
  auto it = rank_.find(e);
  if (it == rank_.end()) throw std::invalid_argument("switch " + e + " not in ordering");
  return it->second;
}

const SwitchId& EdgeOrdering::minimum() const {
  if (seq_.empty()) throw std::invalid_argument("empty ordering");
  return seq_.front();
}

void EdgeOrdering::check_domain(std::span<const SwitchId> domain) const {
  if (domain.size() != seq_.size())
    throw std::invalid_argument("ordering has " + std::to_string(seq_.size()) + " entries, instance has " +
                                std::to_string(domain.size()) + " switches");
  for (const auto& e : domain)
    if (!contains(e)) throw std::invalid_argument("ordering misses switch " + e);
}

SwitchId successor(const SwitchId& e, std::span<const SwitchId> F, const EdgeOrdering& ord) {
  if (F.empty()) throw std::invalid_argument("successor of an empty set");
  std::size_t pe = ord.rank(e);
  const SwitchId* after = nullptr;
  const SwitchId* least = nullptr;
  std::size_t ra = 0, rl = 0;
  for (const auto& f : F) {
    std::size_t r = ord.rank(f);
    if (!least || r < rl) least = &f, rl = r;
    if (r >= pe && (!after || r < ra)) after = &f, ra = r;
  }
  return after ? *after : *least;
}

std::vector<SwitchId> RunTrace::switch_sequence() const {
  std::vector<SwitchId> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.applied);
  return out;
}

std::int64_t default_step_cap(int n) {
  n = std::clamp(n, 0, 50);
  return std::max(std::int64_t{1} << (n + 4), std::int64_t(n + 2) << (n + 2));
}

RunTrace run(ImprovementInstance& inst, const EdgeOrdering& ord, const SwitchId& e0, RunOptions opt) {
  ord.check_domain(inst.switch_domain());
  ord.rank(e0);
  RunTrace trace;
  trace.header.formalism = inst.formalism();
  trace.header.n = inst.size_parameter();
  trace.header.ordering = ord.id();
  trace.header.initial_pointer = e0;
  trace.header.initial_certificate = inst.certificate();
  trace.header.parameters = inst.parameters();

  std::int64_t cap = opt.max_steps;
  if (cap <= 0) cap = default_step_cap(trace.header.n);

  RuleState state{e0};
  for (;;) {
    auto I = inst.improving_set();
    if (I.empty()) break;
    if (static_cast<std::int64_t>(trace.steps.size()) >= cap)
      throw RunError("iteration cap " + std::to_string(cap) + " exceeded");
    std::sort(I.begin(), I.end(), [&](const auto& a, const auto& b) { return ord.rank(a) < ord.rank(b); });
    SwitchId e = successor(state.last, I, ord);
    auto out = inst.apply(e);
    if (opt.require_improvement && !out.improved)
      throw RunError("certificate did not improve at step " + std::to_string(trace.steps.size() + 1) + " (" + e + ")");
    TraceStep st;
    st.index = static_cast<int>(trace.steps.size()) + 1;
    st.applied = e;
    st.improving = std::move(I);
    st.responses = std::move(out.responses);
    st.certificate = std::move(out.certificate);
    st.leaving = std::move(out.leaving);
    st.degenerate = out.degenerate;
    trace.steps.push_back(std::move(st));
    state.last = e;
  }
  return trace;
}

bool leadsto_check(const RunTrace& trace, std::size_t i, std::size_t j) {
  std::size_t states = trace.steps.size() + 1;
  return i < states && j < states && i < j;
}

std::optional<std::size_t> pointer_discipline_violation(const RunTrace& trace, const EdgeOrdering& ord) {
  SwitchId last = trace.header.initial_pointer;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& st = trace.steps[k];
    if (st.improving.empty() || successor(last, st.improving, ord) != st.applied) return k;
    last = st.applied;
  }
  return std::nullopt;
}

}  // namespace clb::cunningham
