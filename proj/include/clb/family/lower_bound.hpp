#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clb/cunningham/rule.hpp"
#include "clb/parity/game.hpp"

namespace clb::family {

using cunningham::SwitchId;

void require_n(int n);

// "a_2", "e_1"
std::string node_label(char kind, int i);
// "a_2^1"
SwitchId switch_name(std::string_view label, int bit);
// "a_2^1" -> ("a_2", 1)
std::pair<std::string, int> parse_switch(std::string_view id);

// player-0 (controller) node with its bit-0 and bit-1 targets, identifications already resolved
struct BinaryNode {
  char kind = 'a';
  int index = 0;
  std::string label;
  std::string succ0, succ1;
};

// canonical order a_2..a_n, b_2..b_{n-1}, c_2..c_n, d_2..d_n, e_1..e_n
std::vector<BinaryNode> binary_layout(int n);
// (u^0, u^1) per node in canonical order
std::vector<SwitchId> switch_names(int n);

int player1_priority(char kind, int i);  // F, g, h, s, t in G_n

parity::ParityGame build_game(int n);
cunningham::EdgeOrdering build_ordering(int n);

// bit vector over the canonical player-0 order; bit = edge superscript
class BitStrategy {
public:
  explicit BitStrategy(int n);
  int n() const { return n_; }
  std::size_t dimension() const { return bits_.size(); }

  bool has(char kind, int i) const { return index(kind, i).has_value(); }
  std::optional<std::size_t> index(char kind, int i) const;
  int get(char kind, int i) const;  // throws for non-existent nodes
  // nullopt for non-existent nodes
  std::optional<int> get_if(char kind, int i) const;
  void set(char kind, int i, int bit);

  int bit(std::size_t k) const { return bits_[k]; }
  void set_bit(std::size_t k, int bit) { bits_[k] = static_cast<std::uint8_t>(bit); }

  // flips to the named edge; throws if it is already chosen or unknown
  void apply(const SwitchId& e);
  bool contains(const SwitchId& e) const;

  std::uint64_t mask() const;
  static BitStrategy from_mask(int n, std::uint64_t m);

  parity::Strategy0 to_strategy(const parity::ParityGame& g) const;
  static BitStrategy from_strategy(int n, const parity::ParityGame& g, const parity::Strategy0& s);

  std::string str() const;  // "a_2=0 a_3=0 ..."

  friend bool operator==(const BitStrategy&, const BitStrategy&) = default;

private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

// {a_*^0, b_*^0, c_*^0, d_*^1, e_1^1, e_{*>1}^0}
BitStrategy initial_strategy(int n);
// same with e_1^0
BitStrategy initial_strategy_all_e_zero(int n);
// {a_*^1, b_*^0, c_*^0, d_*^1, e_*^1}
BitStrategy terminal_strategy(int n);

}  // namespace clb::family
