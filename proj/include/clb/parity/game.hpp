#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clb::parity {

using NodeId = int;
inline constexpr int kNoChoice = -1;

enum class Player : std::uint8_t { Zero = 0, One = 1 };

struct Node {
  NodeId id = 0;
  Player owner = Player::Zero;
  int priority = 0;
  std::string label;
};

class GameError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParityGame {
public:
  NodeId add_node(Player owner, int priority, std::string label);
  void add_edge(NodeId from, NodeId to);
  void set_priority(NodeId v, int priority);

  std::size_t size() const { return nodes_.size(); }
  std::size_t edge_count() const;
  const Node& node(NodeId v) const;
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const NodeId> successors(NodeId v) const;
  int priority(NodeId v) const { return node(v).priority; }
  Player owner(NodeId v) const { return node(v).owner; }
  const std::string& label(NodeId v) const { return node(v).label; }

  std::optional<NodeId> find(std::string_view label) const;
  NodeId at(std::string_view label) const;
  // index of w in v's successor list, or kNoChoice
  int successor_index(NodeId v, NodeId w) const;

  // throws GameError if some node has no successor
  void validate() const;

private:
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> succ_;
  std::unordered_map<std::string, NodeId> by_label_;
};

// Positional strategies as successor indices per node; kNoChoice on the other player's nodes.
struct Strategy0 {
  std::vector<int> choice;
  friend bool operator==(const Strategy0&, const Strategy0&) = default;
};
struct Strategy1 {
  std::vector<int> choice;
  friend bool operator==(const Strategy1&, const Strategy1&) = default;
};

// first successor everywhere
Strategy0 default_strategy0(const ParityGame& g);
Strategy1 default_strategy1(const ParityGame& g);

void check_strategy(const ParityGame& g, const Strategy0& s);
void check_strategy(const ParityGame& g, const Strategy1& s);

// a player-0 edge named by (node, successor index)
struct Edge0 {
  NodeId from = 0;
  int choice = 0;
  friend auto operator<=>(const Edge0&, const Edge0&) = default;
};

NodeId target(const ParityGame& g, const Strategy0& s, const Strategy1& t, NodeId v);

}  // namespace clb::parity
