#pragma once

#include <string>

#include <json.hpp>

#include "clb/parity/game.hpp"

namespace clb::parity {

nlohmann::json to_json(const ParityGame& g);
ParityGame game_from_json(const nlohmann::json& j);

// player 0 circles, player 1 boxes; strategy edges bold when given
std::string to_dot(const ParityGame& g, const Strategy0* s = nullptr, const Strategy1* t = nullptr);

}  // namespace clb::parity
