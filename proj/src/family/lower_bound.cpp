#include "clb/family/lower_bound.hpp"

#include <stdexcept>

namespace clb::family {

using parity::Player;

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3 (got " + std::to_string(n) + ")");
  if (n > 30) throw std::invalid_argument("n too large (max 30)");
}

std::string node_label(char kind, int i) { return std::string(1, kind) + "_" + std::to_string(i); }

SwitchId switch_name(std::string_view label, int bit) { return std::string(label) + "^" + std::to_string(bit); }

std::pair<std::string, int> parse_switch(std::string_view id) {
  auto caret = id.rfind('^');
  if (caret == std::string_view::npos || caret + 2 != id.size() || (id.back() != '0' && id.back() != '1'))
    throw std::invalid_argument("bad switch name '" + std::string(id) + "'");
  return {std::string(id.substr(0, caret)), id.back() - '0'};
}

std::vector<BinaryNode> binary_layout(int n) {
  require_n(n);
  auto A = [n](int i) { return i == n + 1 ? std::string("t") : node_label('a', i); };
  auto B = [](int i) { return i == 1 ? std::string("g_1") : node_label('b', i); };
  auto C = [](int i) { return i == 1 ? std::string("g_1") : node_label('c', i); };
  std::vector<BinaryNode> out;
  for (int i = 2; i <= n; ++i) out.push_back({'a', i, node_label('a', i), A(i + 1), node_label('g', i)});
  for (int i = 2; i < n; ++i) out.push_back({'b', i, node_label('b', i), B(i - 1), node_label('g', i)});
  for (int i = 2; i <= n; ++i) out.push_back({'c', i, node_label('c', i), C(i - 1), node_label('g', i)});
  for (int i = 2; i <= n; ++i) out.push_back({'d', i, node_label('d', i), B(i - 1), node_label('F', i)});
  for (int i = 1; i <= n; ++i) out.push_back({'e', i, node_label('e', i), "s", node_label('F', i)});
  return out;
}

std::vector<SwitchId> switch_names(int n) {
  std::vector<SwitchId> out;
  for (const auto& b : binary_layout(n)) {
    out.push_back(switch_name(b.label, 0));
    out.push_back(switch_name(b.label, 1));
  }
  return out;
}

int player1_priority(char kind, int i) {
  switch (kind) {
    case 'F': return 6;
    case 'g': return 2 * i + 7;
    case 'h': return 2 * i + 8;
    case 's': return 8;
    case 't': return 1;
  }
  throw std::invalid_argument("not a player-1 node kind");
}

parity::ParityGame build_game(int n) {
  auto layout = binary_layout(n);
  parity::ParityGame g;
  for (const auto& b : layout) g.add_node(Player::Zero, (b.kind == 'd' || b.kind == 'e') ? 5 : 3, b.label);
  for (int i = 1; i <= n; ++i) g.add_node(Player::One, 6, node_label('F', i));
  for (int i = 1; i <= n; ++i) g.add_node(Player::One, player1_priority('g', i), node_label('g', i));
  for (int i = 1; i <= n; ++i) g.add_node(Player::One, player1_priority('h', i), node_label('h', i));
  g.add_node(Player::One, 8, "s");
  g.add_node(Player::One, 1, "t");

  for (const auto& b : layout) {
    g.add_edge(g.at(b.label), g.at(b.succ0));
    g.add_edge(g.at(b.label), g.at(b.succ1));
  }
  for (int i = 1; i <= n; ++i) {
    auto F = g.at(node_label('F', i));
    g.add_edge(F, g.at(node_label('h', i)));
    if (i > 1) g.add_edge(F, g.at(node_label('d', i)));
    g.add_edge(F, g.at(node_label('e', i)));
    g.add_edge(g.at(node_label('g', i)), F);
    g.add_edge(g.at(node_label('h', i)), g.at(i == n ? std::string("t") : node_label('a', i + 1)));
  }
  g.add_edge(g.at("s"), g.at(node_label('c', n)));
  g.add_edge(g.at("t"), g.at("t"));
  g.validate();
  return g;
}

cunningham::EdgeOrdering build_ordering(int n) {
  require_n(n);
  std::vector<SwitchId> o;
  auto e = [](char k, int i, int b) { return switch_name(node_label(k, i), b); };
  o.push_back(e('e', 1, 1));
  for (int i = 2; i < n; ++i) {
    o.push_back(e('d', i, 0));
    o.push_back(e('e', i, 1));
    o.push_back(e('b', i, 1));
    o.push_back(e('b', i, 0));
  }
  o.push_back(e('d', n, 0));
  o.push_back(e('e', n, 1));
  for (int i = 2; i <= n; ++i) {
    o.push_back(e('c', i, 0));
    o.push_back(e('c', i, 1));
  }
  for (int i = 1; i <= n; ++i) o.push_back(e('e', i, 0));
  for (int i = 2; i <= n; ++i) o.push_back(e('d', i, 1));
  for (int i = n; i >= 2; --i) {
    o.push_back(e('a', i, 1));
    o.push_back(e('a', i, 0));
  }
  return cunningham::EdgeOrdering(std::move(o), "builtin");
}

BitStrategy::BitStrategy(int n) : n_(n), bits_(static_cast<std::size_t>(5 * (n - 1)), 0) { require_n(n); }

std::optional<std::size_t> BitStrategy::index(char kind, int i) const {
  const std::size_t m = static_cast<std::size_t>(n_ - 1);
  auto ii = static_cast<std::size_t>(i);
  switch (kind) {
    case 'a': if (i >= 2 && i <= n_) return ii - 2; break;
    case 'b': if (i >= 2 && i < n_) return m + ii - 2; break;
    case 'c': if (i >= 2 && i <= n_) return 2 * m - 1 + ii - 2; break;
    case 'd': if (i >= 2 && i <= n_) return 3 * m - 1 + ii - 2; break;
    case 'e': if (i >= 1 && i <= n_) return 4 * m - 1 + ii - 1; break;
  }
  return std::nullopt;
}

int BitStrategy::get(char kind, int i) const {
  auto k = index(kind, i);
  if (!k) throw std::out_of_range("no node " + node_label(kind, i));
  return bits_[*k];
}

std::optional<int> BitStrategy::get_if(char kind, int i) const {
  auto k = index(kind, i);
  if (!k) return std::nullopt;
  return bits_[*k];
}

void BitStrategy::set(char kind, int i, int bit) {
  auto k = index(kind, i);
  if (!k) throw std::out_of_range("no node " + node_label(kind, i));
  bits_[*k] = static_cast<std::uint8_t>(bit);
}

namespace {
std::pair<char, int> split_label(const std::string& label) {
  if (label.size() < 3 || label[1] != '_') throw std::invalid_argument("bad node label " + label);
  return {label[0], std::stoi(label.substr(2))};
}
}  // namespace

bool BitStrategy::contains(const SwitchId& e) const {
  auto [label, bit] = parse_switch(e);
  auto [kind, i] = split_label(label);
  return get(kind, i) == bit;
}

void BitStrategy::apply(const SwitchId& e) {
  auto [label, bit] = parse_switch(e);
  auto [kind, i] = split_label(label);
  if (get(kind, i) == bit) throw std::invalid_argument("switch " + e + " already in strategy");
  set(kind, i, bit);
}

std::uint64_t BitStrategy::mask() const {
  if (bits_.size() > 64) throw std::out_of_range("strategy wider than 64 bits");
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) m |= std::uint64_t{1} << k;
  return m;
}

BitStrategy BitStrategy::from_mask(int n, std::uint64_t m) {
  BitStrategy s(n);
  for (std::size_t k = 0; k < s.bits_.size(); ++k) s.bits_[k] = static_cast<std::uint8_t>((m >> k) & 1);
  return s;
}

parity::Strategy0 BitStrategy::to_strategy(const parity::ParityGame& g) const {
  parity::Strategy0 s;
  s.choice.assign(g.size(), parity::kNoChoice);
  auto layout = binary_layout(n_);
  for (std::size_t k = 0; k < layout.size(); ++k) {
    auto v = g.at(layout[k].label);
    auto target = g.at(bits_[k] ? layout[k].succ1 : layout[k].succ0);
    s.choice[v] = g.successor_index(v, target);
  }
  parity::check_strategy(g, s);
  return s;
}

BitStrategy BitStrategy::from_strategy(int n, const parity::ParityGame& g, const parity::Strategy0& s) {
  BitStrategy out(n);
  auto layout = binary_layout(n);
  for (std::size_t k = 0; k < layout.size(); ++k) {
    auto v = g.at(layout[k].label);
    auto w = g.successors(v)[static_cast<std::size_t>(s.choice[v])];
    out.bits_[k] = g.label(w) == layout[k].succ1 ? 1 : 0;
  }
  return out;
}

std::string BitStrategy::str() const {
  std::string out;
  auto layout = binary_layout(n_);
  for (std::size_t k = 0; k < layout.size(); ++k)
    out += (k ? " " : "") + layout[k].label + "=" + std::to_string(bits_[k]);
  return out;
}

BitStrategy initial_strategy(int n) {
  BitStrategy s = initial_strategy_all_e_zero(n);
  s.set('e', 1, 1);
  return s;
}

BitStrategy initial_strategy_all_e_zero(int n) {
  BitStrategy s(n);
  for (int i = 2; i <= n; ++i) s.set('d', i, 1);
  return s;
}

BitStrategy terminal_strategy(int n) {
  BitStrategy s(n);
  for (int i = 2; i <= n; ++i) {
    s.set('a', i, 1);
    s.set('d', i, 1);
  }
  for (int i = 1; i <= n; ++i) s.set('e', i, 1);
  return s;
}

}  // namespace clb::family
