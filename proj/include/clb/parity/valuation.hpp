#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clb/parity/game.hpp"

namespace clb::parity {

enum class CompareResult { Less, Greater, Equal, Incomparable };
const char* to_string(CompareResult r);

class IncomparableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct NodeValuation {
  NodeId cycle = 0;
  std::vector<NodeId> path;  // sorted ids
  int length = 0;
  friend bool operator==(const NodeValuation&, const NodeValuation&) = default;
};

using GameValuation = std::vector<NodeValuation>;

struct PlayDecomposition {
  std::vector<NodeId> prefix;
  std::vector<NodeId> cycle;  // cycle.front() has the maximal priority on the cycle
};

int reward(const ParityGame& g, NodeId v);

CompareResult compare_path_sets(const ParityGame& g, std::span<const NodeId> M, std::span<const NodeId> N);
CompareResult compare_valuations(const ParityGame& g, const NodeValuation& a, const NodeValuation& b);

PlayDecomposition play_decomposition(const ParityGame& g, const Strategy0& s, const Strategy1& t, NodeId v);
NodeValuation node_valuation(const ParityGame& g, const Strategy0& s, const Strategy1& t, NodeId v);
GameValuation game_valuation(const ParityGame& g, const Strategy0& s, const Strategy1& t);

struct BestResponse {
  Strategy1 tau;
  GameValuation xi;
  int rounds = 0;
};

// player-1 local improvement, optionally warm-started
BestResponse best_response(const ParityGame& g, const Strategy0& s, const Strategy1* warm = nullptr);

// I_sigma; throws IncomparableError if a consulted comparison is undecided
std::vector<Edge0> improving_switches(const ParityGame& g, const Strategy0& s, const GameValuation& xi);

// pointwise a ⪯ b everywhere and a ≠ b (Ξ ◁ Ξ')
bool strictly_improves(const ParityGame& g, const GameValuation& before, const GameValuation& after);

std::vector<NodeId> filtered_valuation(const ParityGame& g, const GameValuation& xi, NodeId v, NodeId r);

std::string format_valuation(const ParityGame& g, const NodeValuation& v);

}  // namespace clb::parity
