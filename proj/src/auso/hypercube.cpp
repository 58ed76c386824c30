#include "clb/auso/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>

#include "clb/lp/simplex.hpp"
#include "clb/mdp/instance.hpp"

namespace clb::auso {

int dimension(int n) {
  family::require_n(n);
  return 5 * (n - 1);
}

Vertex encode_vertex(const family::BitStrategy& s) {
  if (s.dimension() > 32) throw std::invalid_argument("vertex wider than 32 bits");
  return static_cast<Vertex>(s.mask());
}

family::BitStrategy decode_vertex(int n, Vertex v) {
  if (dimension(n) < 32 && (v >> dimension(n)) != 0) throw std::invalid_argument("vertex outside the hypercube");
  return family::BitStrategy::from_mask(n, v);
}

std::vector<std::string> coordinate_labels(int n) {
  std::vector<std::string> out;
  for (const auto& b : family::binary_layout(n)) out.push_back(b.label);
  return out;
}

Orientation::Orientation(int dim, std::vector<std::uint32_t> outmap) : dim_(dim), outmap_(std::move(outmap)) {
  if (dim < 0 || dim > 24) throw OrientationError("unsupported dimension " + std::to_string(dim));
  if (outmap_.size() != (std::size_t{1} << dim)) throw OrientationError("outmap size is not 2^d");
  const std::uint32_t full = dim == 0 ? 0u : (~0u >> (32 - dim));
  for (Vertex v = 0; v < outmap_.size(); ++v) {
    if (outmap_[v] & ~full) throw OrientationError("outmap has bits beyond the dimension");
    for (int i = 0; i < dim; ++i)
      if (outgoing(v, i) == outgoing(v ^ (1u << i), i))
        throw OrientationError("edge " + std::to_string(v) + "/" + std::to_string(i) + " is not antisymmetric");
  }
}

std::string Orientation::to_hex() const {
  const std::size_t nbits = outmap_.size() * static_cast<std::size_t>(dim_);
  std::vector<std::uint8_t> bytes((nbits + 7) / 8, 0);
  for (Vertex v = 0; v < outmap_.size(); ++v)
    for (int i = 0; i < dim_; ++i)
      if (outgoing(v, i)) {
        std::size_t k = v * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
        bytes[k / 8] |= static_cast<std::uint8_t>(1u << (k % 8));
      }
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

Orientation Orientation::from_hex(int dim, std::string_view hex) {
  const std::size_t count = std::size_t{1} << dim;
  const std::size_t nbits = count * static_cast<std::size_t>(dim);
  if (hex.size() != 2 * ((nbits + 7) / 8)) throw OrientationError("bitmap length does not match dimension");
  auto nib = [](char ch) -> unsigned {
    if (ch >= '0' && ch <= '9') return static_cast<unsigned>(ch - '0');
    if (ch >= 'a' && ch <= 'f') return static_cast<unsigned>(ch - 'a' + 10);
    if (ch >= 'A' && ch <= 'F') return static_cast<unsigned>(ch - 'A' + 10);
    throw OrientationError("bad hex digit");
  };
  std::vector<std::uint32_t> out(count, 0);
  for (std::size_t k = 0; k < nbits; ++k) {
    unsigned byte = nib(hex[2 * (k / 8)]) << 4 | nib(hex[2 * (k / 8) + 1]);
    if ((byte >> (k % 8)) & 1u) out[k / static_cast<std::size_t>(dim)] |= 1u << (k % static_cast<std::size_t>(dim));
  }
  return Orientation(dim, std::move(out));
}

std::strong_ordering compare_potential(const Potential& a, const Potential& b) {
  if (auto c = a.objective <=> b.objective; c != 0) return c;
  return std::lexicographical_compare_three_way(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

RealizedCube orient_hypercube(int n, const mdp::MdpParams& p) {
  const int d = dimension(n);
  if (n > kMaxMaterializedN) throw std::invalid_argument("orientation is only materialized for n <= 4");
  RealizedCube c;
  c.n = n;
  c.params = p;
  lp::StandardFormLP prog = lp::build_lp(n, p);
  c.variables = prog.var_names;
  const Vertex count = Vertex{1} << d;
  c.potential.resize(count);
  for (Vertex v = 0; v < count; ++v) {
    lp::BasicSolution s = lp::basic_solution(prog, lp::basis_from_bits(prog, decode_vertex(n, v)));
    if (!lp::is_feasible(s)) throw OrientationError("basis of vertex " + std::to_string(v) + " is infeasible");
    c.potential[v] = {std::move(s.objective), std::move(s.x)};
  }
  std::vector<std::uint32_t> out(count, 0);
  for (Vertex v = 0; v < count; ++v)
    for (int i = 0; i < d; ++i) {
      Vertex w = v ^ (1u << i);
      if (w < v) continue;
      auto cmp = compare_potential(c.potential[v], c.potential[w]);
      if (cmp == 0)
        throw OrientationError("vertices " + std::to_string(v) + " and " + std::to_string(w) + " have equal potential");
      (c.potential[v].objective == c.potential[w].objective ? c.tiebroken_edges : c.strict_edges)++;
      if (cmp < 0)
        out[v] |= 1u << i;
      else
        out[w] |= 1u << i;
    }
  c.orientation = Orientation(d, std::move(out));
  return c;
}

RealizedCube orient_hypercube(int n) { return orient_hypercube(n, mdp::default_params(n)); }

std::string face_string(int dim, std::uint32_t free, std::uint32_t fixed) {
  std::string s;
  for (int i = 0; i < dim; ++i) s += ((free >> i) & 1u) ? '*' : (((fixed >> i) & 1u) ? '1' : '0');
  return s;
}

FaceCheck check_faces_all(const Orientation& o, kernels::Isa isa) {
  FaceCheck fc;
  const int d = o.dimension();
  const std::uint32_t full = static_cast<std::uint32_t>(o.vertex_count() - 1);
  std::vector<std::uint32_t> counts(o.vertex_count());
  for (std::uint32_t free = 0; free <= full; ++free) {
    std::fill(counts.begin(), counts.end(), 0u);
    kernels::accumulate_face_sinks(o.outmaps(), free, counts, isa);
    const std::uint32_t fixmask = full & ~free;
    for (std::uint32_t f = fixmask;; f = (f - 1) & fixmask) {
      ++fc.checked;
      if (counts[f] != 1) {
        ++fc.failed;
        if (!fc.first_failure)
          fc.first_failure = "face " + face_string(d, free, f) + " has " + std::to_string(counts[f]) + " sinks";
      }
      if (f == 0) break;
    }
    if (free == full) break;
  }
  return fc;
}

FaceCheck check_faces_all(const Orientation& o) { return check_faces_all(o, kernels::best_isa()); }

FaceCheck check_faces_sampled(const Orientation& o, std::uint64_t count, std::uint64_t seed) {
  FaceCheck fc;
  const int d = o.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint32_t free = 0, fixed = 0;
    for (int i = 0; i < d; ++i) {
      int c = pick(rng);
      if (c == 2)
        free |= 1u << i;
      else if (c == 1)
        fixed |= 1u << i;
    }
    std::uint64_t sinks = 0;
    for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
      if ((o.outmap(fixed | sub) & free) == 0) ++sinks;
      if (sub == 0) break;
    }
    ++fc.checked;
    if (sinks != 1) {
      ++fc.failed;
      if (!fc.first_failure)
        fc.first_failure = "face " + face_string(d, free, fixed) + " has " + std::to_string(sinks) + " sinks";
    }
  }
  return fc;
}

std::optional<Vertex> cycle_witness(const Orientation& o) {
  const int d = o.dimension();
  std::vector<int> indeg(o.vertex_count());
  for (Vertex v = 0; v < o.vertex_count(); ++v) indeg[v] = d - std::popcount(o.outmap(v));
  std::deque<Vertex> q;
  for (Vertex v = 0; v < o.vertex_count(); ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::size_t seen = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    ++seen;
    for (std::uint32_t m = o.outmap(v); m; m &= m - 1) {
      Vertex w = v ^ (m & -m);
      if (--indeg[w] == 0) q.push_back(w);
    }
  }
  if (seen == o.vertex_count()) return std::nullopt;
  for (Vertex v = 0; v < o.vertex_count(); ++v)
    if (indeg[v] > 0) return v;
  return std::nullopt;
}

std::optional<std::string> potential_violation(const RealizedCube& c) {
  const auto& o = c.orientation;
  for (Vertex v = 0; v < o.vertex_count(); ++v)
    for (std::uint32_t m = o.outmap(v); m; m &= m - 1) {
      Vertex w = v ^ (m & -m);
      if (compare_potential(c.potential[v], c.potential[w]) >= 0)
        return "edge " + std::to_string(v) + "->" + std::to_string(w) + " does not increase the potential";
    }
  return std::nullopt;
}

std::vector<Vertex> global_sinks(const Orientation& o) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < o.vertex_count(); ++v)
    if (o.outmap(v) == 0) out.push_back(v);
  return out;
}

AusoReport check_auso(const Orientation& o, FaceMode mode) {
  AusoReport r;
  auto cyc = cycle_witness(o);
  r.acyclic = !cyc;
  if (cyc) r.failures.push_back("directed cycle reachable through vertex " + std::to_string(*cyc));
  r.faces_exhaustive = mode.exhaustive;
  r.faces = mode.exhaustive ? check_faces_all(o) : check_faces_sampled(o, mode.samples, mode.seed);
  if (r.faces.failed) r.failures.push_back(*r.faces.first_failure);
  r.global_sinks = global_sinks(o);
  if (r.global_sinks.size() != 1) r.failures.push_back(std::to_string(r.global_sinks.size()) + " global sinks");
  return r;
}

AusoReport check_auso(const RealizedCube& c, FaceMode mode) {
  AusoReport r = check_auso(c.orientation, mode);
  auto pv = potential_violation(c);
  r.potential_ok = !pv;
  if (pv) r.failures.insert(r.failures.begin(), *pv);
  return r;
}

ConsistencyReport check_consistency_with_Hn(const Orientation& o, int n, const mdp::RelaxedMdp& m,
                                            std::span<const Vertex> visited) {
  ConsistencyReport rep;
  auto layout = family::binary_layout(n);
  for (Vertex v : visited) {
    ++rep.strategies;
    family::BitStrategy s = decode_vertex(n, v);
    mdp::Policy pol = mdp::policy_from_bits(m, s);
    mdp::ValueVector val = mdp::policy_values(m, pol);
    for (std::size_t k = 0; k < layout.size(); ++k) {
      const int i = static_cast<int>(k);
      mdp::NodeId u = m.at(layout[k].label);
      const auto& alt = m.out_edge(u, 1 - s.bit(k));
      auto through = val[static_cast<std::size_t>(alt.to)] + alt.reward;
      auto c = through <=> val[static_cast<std::size_t>(u)];
      std::string name = family::switch_name(layout[k].label, 1 - s.bit(k));
      if (c > 0) {
        ++rep.improving_checked;
        if (!o.outgoing(v, i)) rep.disagreements.push_back("vertex " + std::to_string(v) + ": " + name + " improving but incoming");
      } else if (c < 0) {
        ++rep.degradable_checked;
        if (o.outgoing(v, i)) rep.disagreements.push_back("vertex " + std::to_string(v) + ": " + name + " degradable but outgoing");
      }
    }
  }
  return rep;
}

AusoInstance::AusoInstance(const RealizedCube& cube, Vertex start)
    : cube_(&cube), labels_(coordinate_labels(cube.n)), current_(start), path_{start} {
  if (start >= cube.orientation.vertex_count()) throw std::invalid_argument("start vertex outside the hypercube");
}

nlohmann::json AusoInstance::parameters() const {
  return {{"N", cube_->params.N.get_str()}, {"eps", cube_->params.eps.str()}, {"tiebreak", "lexicographic-bfs"}};
}

std::vector<cunningham::SwitchId> AusoInstance::improving_set() {
  std::vector<cunningham::SwitchId> out;
  for (std::uint32_t m = cube_->orientation.outmap(current_); m; m &= m - 1) {
    int i = std::countr_zero(m);
    out.push_back(family::switch_name(labels_[static_cast<std::size_t>(i)], 1 - static_cast<int>((current_ >> i) & 1u)));
  }
  return out;
}

cunningham::StepOutcome AusoInstance::apply(const cunningham::SwitchId& e) {
  auto [label, bit] = family::parse_switch(e);
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw cunningham::RunError("auso: unknown flip " + e);
  const int i = static_cast<int>(it - labels_.begin());
  if (static_cast<int>((current_ >> i) & 1u) == bit) throw cunningham::RunError("auso: " + e + " is already chosen");
  if (!cube_->orientation.outgoing(current_, i)) throw cunningham::RunError("auso: flip " + e + " is not outgoing");
  Vertex next = current_ ^ (1u << i);
  cunningham::StepOutcome out;
  out.improved = compare_potential(cube_->potential[current_], cube_->potential[next]) < 0;
  current_ = next;
  path_.push_back(next);
  out.certificate = certificate();
  return out;
}

std::vector<Vertex> path_follow(const RealizedCube& cube, Vertex start, const cunningham::EdgeOrdering& ord,
                                const cunningham::SwitchId& pointer) {
  AusoInstance inst(cube, start);
  cunningham::run(inst, ord, pointer);
  return inst.path();
}

nlohmann::json header_json(const RealizedCube& c) {
  return {{"format", "clb-auso-bitmap"},
          {"n", c.n},
          {"dimension", c.orientation.dimension()},
          {"vertices", c.orientation.vertex_count()},
          {"node_order", coordinate_labels(c.n)},
          {"N", c.params.N.get_str()},
          {"eps", c.params.eps.str()},
          {"tiebreak", "lexicographic (c^T x, x) over variables in LP column order"},
          {"bit_layout", "bit v*d+i set iff edge {v, v^(1<<i)} leaves v; bytes little-endian in bit order"},
          {"strict_edges", c.strict_edges},
          {"tiebroken_edges", c.tiebroken_edges}};
}

}  // namespace clb::auso
