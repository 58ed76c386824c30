#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "clb/numerics/rational.hpp"

namespace clb::mdp {

using num::BigInt;
using num::Rational;
using NodeId = int;

enum class Owner { Controller, Randomizer };

class MdpError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnichainViolation : public MdpError {
public:
  using MdpError::MdpError;
};

struct MdpParams {
  BigInt N = 7;
  Rational eps = Rational(1);
};

// N = 2n+1, eps = 1/N^(2n+10)
MdpParams default_params(int n);
// N >= 2n and 0 < eps <= 1/(2n)
void check_admissible(int n, const MdpParams& p);

struct MdpNode {
  NodeId id = 0;
  Owner owner = Owner::Controller;
  std::optional<int> priority;
  std::string label;
  bool auxiliary = false;  // introduced by expand_relaxed
};

struct MdpEdge {
  NodeId from = 0, to = 0;
  std::optional<Rational> probability;  // randomizer edges only
  Rational reward;
};

class RelaxedMdp {
public:
  NodeId add_node(Owner owner, std::string label, std::optional<int> priority = std::nullopt, bool auxiliary = false);
  void add_edge(NodeId from, NodeId to, std::optional<Rational> probability, Rational reward);

  std::size_t size() const { return nodes_.size(); }
  const MdpNode& node(NodeId v) const { return nodes_.at(static_cast<std::size_t>(v)); }
  std::span<const MdpNode> nodes() const { return nodes_; }
  std::span<const MdpEdge> edges() const { return edges_; }
  // edge indices leaving v, in insertion order
  std::span<const int> out(NodeId v) const { return out_.at(static_cast<std::size_t>(v)); }
  const MdpEdge& out_edge(NodeId v, int k) const { return edges_[static_cast<std::size_t>(out(v)[static_cast<std::size_t>(k)])]; }

  std::optional<NodeId> find(std::string_view label) const;
  NodeId at(std::string_view label) const;

  // the absorbing randomizer (self-loop with probability 1 and reward 0)
  NodeId sink() const;
  // probabilities sum to 1, controllers have successors, single absorbing sink
  void validate() const;
  bool is_bipartite() const;

  MdpParams params;

private:
  std::vector<MdpNode> nodes_;
  std::vector<MdpEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::unordered_map<std::string, NodeId> by_label_;
};

// successor index per controller node, -1 on randomizers
struct Policy {
  std::vector<int> choice;
  friend bool operator==(const Policy&, const Policy&) = default;
};

using ValueVector = std::vector<Rational>;

RelaxedMdp build_relaxed_mdp(int n, const MdpParams& p);
RelaxedMdp build_relaxed_mdp(int n);

// bipartite expansion; original nodes keep their ids and successor order
RelaxedMdp expand_relaxed(const RelaxedMdp& m);
// aux controllers choose their only successor
Policy lift_policy(const RelaxedMdp& expanded, const Policy& p);

void check_policy(const RelaxedMdp& m, const Policy& p);
// throws UnichainViolation naming a node that cannot reach the sink
void check_unichain(const RelaxedMdp& m, const Policy& p);
ValueVector policy_values(const RelaxedMdp& m, const Policy& p);

struct Switch {
  NodeId from = 0;
  int choice = 0;
  friend auto operator<=>(const Switch&, const Switch&) = default;
};

std::vector<Switch> improving_switches_mdp(const RelaxedMdp& m, const Policy& p, const ValueVector& vals);
std::string switch_name(const RelaxedMdp& m, const Switch& s);
Switch parse_switch_name(const RelaxedMdp& m, const std::string& name);

// sum over non-auxiliary controller nodes
Rational controller_value_sum(const RelaxedMdp& m, const ValueVector& vals);

nlohmann::json to_json(const RelaxedMdp& m);
std::string to_dot(const RelaxedMdp& m, const Policy* p = nullptr);

}  // namespace clb::mdp
