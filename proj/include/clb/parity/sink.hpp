#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clb/parity/game.hpp"

namespace clb::parity {

struct SinkReport {
  bool passed = false;
  std::optional<NodeId> sink;
  bool sink_exists = false;         // self-loop, priority 1, only node with priority <= 1
  bool reachable_from_all = false;
  bool cycles_at_sink = false;      // every cycle component of Xi_theta is the sink
  bool won_by_player1 = false;      // every cycle component at the optimum is the sink
  std::vector<std::string> failures;
};

SinkReport validate_sink_game(const ParityGame& g, const Strategy0& theta);

}  // namespace clb::parity
