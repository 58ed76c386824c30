#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "clb/auso/kernels.hpp"
#include "clb/cunningham/rule.hpp"
#include "clb/family/lower_bound.hpp"
#include "clb/mdp/relaxed_mdp.hpp"
#include "clb/numerics/rational.hpp"

namespace clb::auso {

using num::Rational;
using Vertex = std::uint32_t;

inline constexpr int kMaxMaterializedN = 4;

int dimension(int n);  // 5(n-1)
Vertex encode_vertex(const family::BitStrategy& s);
family::BitStrategy decode_vertex(int n, Vertex v);
// node label of every coordinate, canonical order
std::vector<std::string> coordinate_labels(int n);

class OrientationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// bit i of outmap[v] set iff the edge {v, v^(1<<i)} leaves v
class Orientation {
public:
  Orientation(int dim, std::vector<std::uint32_t> outmap);  // throws OrientationError unless antisymmetric

  int dimension() const { return dim_; }
  std::size_t vertex_count() const { return outmap_.size(); }
  std::uint32_t outmap(Vertex v) const { return outmap_.at(v); }
  std::span<const std::uint32_t> outmaps() const { return outmap_; }
  bool outgoing(Vertex v, int i) const { return (outmap_.at(v) >> i) & 1u; }

  // vertex-major bitmap, bit v*d+i, little-endian within each byte
  std::string to_hex() const;
  static Orientation from_hex(int dim, std::string_view hex);

  friend bool operator==(const Orientation&, const Orientation&) = default;

private:
  int dim_;
  std::vector<std::uint32_t> outmap_;
};

// (c^T x, x) compared lexicographically
struct Potential {
  Rational objective;
  std::vector<Rational> x;
};
std::strong_ordering compare_potential(const Potential& a, const Potential& b);

struct RealizedCube {
  int n = 0;
  mdp::MdpParams params;
  std::vector<std::string> variables;  // order of Potential::x
  std::vector<Potential> potential;    // indexed by vertex
  Orientation orientation{0, {0}};
  std::size_t strict_edges = 0;
  std::size_t tiebroken_edges = 0;
};

// throws for n > kMaxMaterializedN
RealizedCube orient_hypercube(int n, const mdp::MdpParams& p);
RealizedCube orient_hypercube(int n);

std::string face_string(int dim, std::uint32_t free, std::uint32_t fixed);

struct FaceCheck {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;
};
FaceCheck check_faces_all(const Orientation& o, kernels::Isa isa);
FaceCheck check_faces_all(const Orientation& o);
FaceCheck check_faces_sampled(const Orientation& o, std::uint64_t count, std::uint64_t seed);

// nullopt if acyclic, else a vertex on or behind a cycle
std::optional<Vertex> cycle_witness(const Orientation& o);
// first edge u->v with potential(u) >= potential(v)
std::optional<std::string> potential_violation(const RealizedCube& c);
std::vector<Vertex> global_sinks(const Orientation& o);

struct FaceMode {
  bool exhaustive = true;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct AusoReport {
  std::optional<bool> potential_ok;  // only with a realized cube
  bool acyclic = false;
  FaceCheck faces;
  bool faces_exhaustive = false;
  std::vector<Vertex> global_sinks;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

AusoReport check_auso(const Orientation& o, FaceMode mode = {});
AusoReport check_auso(const RealizedCube& c, FaceMode mode = {});

struct ConsistencyReport {
  std::size_t strategies = 0;
  std::size_t improving_checked = 0;
  std::size_t degradable_checked = 0;
  std::vector<std::string> disagreements;
  bool passed() const { return disagreements.empty(); }
};

// MDP improving -> outgoing, MDP degradable -> incoming, at every listed vertex
ConsistencyReport check_consistency_with_Hn(const Orientation& o, int n, const mdp::RelaxedMdp& m,
                                            std::span<const Vertex> visited);

class AusoInstance : public cunningham::ImprovementInstance {
public:
  AusoInstance(const RealizedCube& cube, Vertex start);

  std::string formalism() const override { return "auso"; }
  int size_parameter() const override { return cube_->n; }
  nlohmann::json parameters() const override;
  std::vector<cunningham::SwitchId> switch_domain() const override { return family::switch_names(cube_->n); }
  std::vector<cunningham::SwitchId> improving_set() override;
  cunningham::StepOutcome apply(const cunningham::SwitchId& e) override;
  std::string certificate() const override { return cube_->potential[current_].objective.str(); }

  Vertex current() const { return current_; }
  const std::vector<Vertex>& path() const { return path_; }

private:
  const RealizedCube* cube_;
  std::vector<std::string> labels_;
  Vertex current_;
  std::vector<Vertex> path_;
};

// vertex path from start to the sink (start included)
std::vector<Vertex> path_follow(const RealizedCube& cube, Vertex start, const cunningham::EdgeOrdering& ord,
                                const cunningham::SwitchId& pointer);

nlohmann::json header_json(const RealizedCube& c);

}  // namespace clb::auso
