#include "clb/lp/standard_form.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "clb/family/lower_bound.hpp"

namespace clb::lp {

using family::node_label;
using family::switch_name;

int StandardFormLP::var_index(const std::string& name) const {
  auto it = std::find(var_names.begin(), var_names.end(), name);
  if (it == var_names.end()) return -1;
  return static_cast<int>(it - var_names.begin());
}

int StandardFormLP::row_index(const std::string& name) const {
  auto it = std::find(row_names.begin(), row_names.end(), name);
  if (it == row_names.end()) return -1;
  return static_cast<int>(it - row_names.begin());
}

namespace {

// accumulates linear rows by variable name; unknown names are non-existent variables (zero)
class Builder {
public:
  explicit Builder(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) col_[vars_[i]] = i;
  }
  void add(std::vector<Rational>& v, const std::string& name, const Rational& coef) const {
    auto it = col_.find(name);
    if (it != col_.end()) v[it->second] += coef;
  }
  std::vector<Rational> zero() const { return std::vector<Rational>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }

private:
  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> col_;
};

std::string var(char kind, int i, int bit) { return switch_name(node_label(kind, i), bit); }

}  // namespace

StandardFormLP build_lp(int n, const mdp::MdpParams& p) {
  mdp::check_admissible(n, p);
  Builder B(family::switch_names(n));
  const Rational& eps = p.eps;
  const Rational one(1), half = Rational(num::BigInt(1), num::BigInt(2));
  auto prio = [&](int omega) {
    num::BigInt mag = num::ipow(p.N, static_cast<unsigned>(omega));
    return Rational(omega % 2 ? num::BigInt(-mag) : mag);
  };
  auto g = [&](int i) { return prio(2 * i - 1); };
  auto h = [&](int i) { return prio(2 * i); };
  const Rational s = prio(0);

  // variables entering g_i; for i = 1 through b_1 = c_1 = g_1
  auto into_g = [&](int i) -> std::vector<std::string> {
    if (i == 1) return {var('b', 2, 0), var('c', 2, 0), var('d', 2, 0)};
    return {var('a', i, 1), var('b', i, 1), var('c', i, 1)};
  };

  StandardFormLP lp;
  lp.var_names = B.vars();
  lp.c = B.zero();
  for (int i = 1; i <= n; ++i) {
    for (const auto& x : into_g(i)) B.add(lp.c, x, g(i) + eps * h(i));
    B.add(lp.c, var('d', i, 1), eps * h(i));
    B.add(lp.c, var('e', i, 1), eps * h(i));
    B.add(lp.c, var('e', i, 0), s);
  }

  std::vector<std::vector<Rational>> rows;
  auto row = [&](char kind, int i, const std::vector<std::pair<std::string, Rational>>& rhs) {
    auto r = B.zero();
    B.add(r, var(kind, i, 0), one);
    B.add(r, var(kind, i, 1), one);
    for (const auto& [x, k] : rhs) B.add(r, x, -k);
    rows.push_back(std::move(r));
    lp.row_names.push_back(node_label(kind, i));
  };
  auto scaled = [](std::vector<std::string> xs, const Rational& k) {
    std::vector<std::pair<std::string, Rational>> out;
    for (auto& x : xs) out.emplace_back(std::move(x), k);
    return out;
  };
  auto entering_F = [&](int i) {  // a_i^1+b_i^1+c_i^1+d_i^1+e_i^1
    return std::vector<std::string>{var('a', i, 1), var('b', i, 1), var('c', i, 1), var('d', i, 1), var('e', i, 1)};
  };

  row('a', 2, scaled({var('b', 2, 0), var('c', 2, 0), var('d', 2, 0), var('e', 1, 1)}, eps));
  for (int i = 3; i <= n; ++i) {
    auto rhs = scaled(entering_F(i - 1), eps);
    rhs.emplace_back(var('a', i - 1, 0), one);
    row('a', i, rhs);
  }
  for (int i = 2; i < n; ++i) row('b', i, scaled({var('b', i + 1, 0), var('d', i + 1, 0)}, one));
  for (int i = 2; i < n; ++i) row('c', i, scaled({var('c', i + 1, 0)}, one));
  {
    std::vector<std::string> es;
    for (int j = 1; j <= n; ++j) es.push_back(var('e', j, 0));
    row('c', n, scaled(es, one));
  }
  for (int i = 2; i <= n; ++i) row('d', i, scaled(entering_F(i), (one - eps) * half));
  row('e', 1, scaled({var('b', 2, 0), var('c', 2, 0), var('d', 2, 0), var('e', 1, 1)}, one - eps));
  for (int i = 2; i <= n; ++i) row('e', i, scaled(entering_F(i), (one - eps) * half));

  // canonical row order a, b, c, d, e (rows were emitted with c_n last among c)
  std::vector<std::string> order;
  for (const auto& bn : family::binary_layout(n)) order.push_back(bn.label);
  lp.A = RationalMatrix(order.size(), lp.var_names.size());
  lp.b.assign(order.size(), one);
  std::vector<std::string> names = lp.row_names;
  lp.row_names = order;
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto k = static_cast<std::size_t>(std::find(names.begin(), names.end(), order[r]) - names.begin());
    for (std::size_t c = 0; c < lp.var_names.size(); ++c) lp.A(r, c) = rows[k][c];
  }
  return lp;
}

StandardFormLP build_lp(int n) { return build_lp(n, mdp::default_params(n)); }

StandardFormLP lp_from_mdp(const mdp::RelaxedMdp& m) {
  using mdp::NodeId;
  using mdp::Owner;
  m.validate();
  const NodeId t = m.sink();

  struct Outcome {
    std::map<NodeId, Rational> dist;  // next original controller
    Rational reward;                  // expected reward until then
  };
  std::vector<std::optional<Outcome>> memo(m.size());
  std::vector<char> active(m.size(), 0);
  std::function<const Outcome&(NodeId)> arrive = [&](NodeId v) -> const Outcome& {
    auto& slot = memo[static_cast<std::size_t>(v)];
    if (slot) return *slot;
    if (active[static_cast<std::size_t>(v)]) throw mdp::MdpError("cycle through " + m.node(v).label + " avoids controllers");
    active[static_cast<std::size_t>(v)] = 1;
    Outcome o;
    const auto& node = m.node(v);
    if (v == t) {
    } else if (node.owner == Owner::Controller && !node.auxiliary) {
      o.dist[v] = Rational(1);
    } else {
      if (node.owner == Owner::Controller && m.out(v).size() != 1)
        throw mdp::MdpError("auxiliary controller " + node.label + " has several successors");
      for (int k : m.out(v)) {
        const auto& e = m.edges()[static_cast<std::size_t>(k)];
        Rational pr = e.probability.value_or(Rational(1));
        const Outcome& next = arrive(e.to);
        o.reward += pr * (e.reward + next.reward);
        for (const auto& [w, q] : next.dist) o.dist[w] += pr * q;
      }
    }
    active[static_cast<std::size_t>(v)] = 0;
    slot = std::move(o);
    return *slot;
  };

  StandardFormLP lp;
  std::vector<NodeId> controllers;
  for (const auto& n : m.nodes())
    if (n.owner == Owner::Controller && !n.auxiliary) controllers.push_back(n.id);
  std::map<NodeId, std::size_t> row_of;
  for (NodeId u : controllers) {
    row_of[u] = lp.row_names.size();
    lp.row_names.push_back(m.node(u).label);
    for (int k = 0; k < static_cast<int>(m.out(u).size()); ++k)
      lp.var_names.push_back(m.node(u).label + "^" + std::to_string(k));
  }
  lp.A = RationalMatrix(lp.row_names.size(), lp.var_names.size());
  lp.b.assign(lp.row_names.size(), Rational(1));
  lp.c.assign(lp.var_names.size(), Rational(0));
  std::size_t col = 0;
  for (NodeId u : controllers) {
    for (int k = 0; k < static_cast<int>(m.out(u).size()); ++k, ++col) {
      const auto& e = m.out_edge(u, k);
      const Outcome& next = arrive(e.to);
      lp.c[col] = e.reward + next.reward;
      lp.A(row_of[u], col) += Rational(1);
      for (const auto& [w, q] : next.dist) lp.A(row_of[w], col) -= q;
    }
  }
  return lp;
}

LpComparison compare_lps(const StandardFormLP& x, const StandardFormLP& y) {
  LpComparison r;
  auto sorted = [](std::vector<std::string> v) { std::sort(v.begin(), v.end()); return v; };
  r.same_names = x.rows() == y.rows() && x.cols() == y.cols() && sorted(x.var_names) == sorted(y.var_names) &&
                 sorted(x.row_names) == sorted(y.row_names);
  if (!r.same_names) {
    r.mismatches.push_back("variable or row names differ");
    return r;
  }
  std::vector<std::size_t> colmap(x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) colmap[j] = static_cast<std::size_t>(y.var_index(x.var_names[j]));

  r.rows_equivalent = true;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto k = static_cast<std::size_t>(y.row_index(x.row_names[i]));
    std::optional<Rational> factor;  // y_row = factor * x_row
    bool ok = true;
    for (std::size_t j = 0; j <= x.cols() && ok; ++j) {
      const Rational& a = j < x.cols() ? x.A(i, j) : x.b[i];
      const Rational& b = j < x.cols() ? y.A(k, colmap[j]) : y.b[k];
      if (a.is_zero() || b.is_zero()) {
        ok = a.is_zero() && b.is_zero();
        continue;
      }
      Rational f = b / a;
      if (!factor) factor = f;
      else ok = *factor == f;
    }
    if (!ok) {
      r.rows_equivalent = false;
      r.mismatches.push_back("row " + x.row_names[i] + " is not a multiple of its partner");
    }
  }
  r.objective_equal = true;
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (x.c[j] != y.c[colmap[j]]) {
      r.objective_equal = false;
      r.mismatches.push_back("objective coefficient of " + x.var_names[j] + " differs: " + x.c[j].str() + " vs " +
                             y.c[colmap[j]].str());
    }
  return r;
}

namespace {
void term(std::ostream& os, const Rational& k, const std::string& name, bool first) {
  if (k.sign() < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  Rational a = k.abs();
  if (a != Rational(1)) os << a.str() << " ";
  os << name;
}
}  // namespace

std::string to_lp_text(const StandardFormLP& lp, const std::string& title) {
  std::ostringstream os;
  os << "\\ " << title << ": " << lp.cols() << " variables, " << lp.rows() << " constraints\n";
  os << "Maximize\n obj: ";
  bool first = true;
  for (std::size_t j = 0; j < lp.cols(); ++j)
    if (!lp.c[j].is_zero()) term(os, lp.c[j], lp.var_names[j], first), first = false;
  if (first) os << "0";
  os << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    os << " " << lp.row_names[i] << ": ";
    first = true;
    for (std::size_t j = 0; j < lp.cols(); ++j)
      if (!lp.A(i, j).is_zero()) term(os, lp.A(i, j), lp.var_names[j], first), first = false;
    os << " = " << lp.b[i].str() << "\n";
  }
  os << "Bounds\n";
  for (const auto& v : lp.var_names) os << " " << v << " >= 0\n";
  os << "End\n";
  return os.str();
}

nlohmann::json to_json(const StandardFormLP& lp) {
  nlohmann::json A = nlohmann::json::array();
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < lp.cols(); ++j) row.push_back(lp.A(i, j).str());
    A.push_back(row);
  }
  auto strs = [](const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
  };
  return {{"sense", "max"}, {"A", A}, {"b", strs(lp.b)}, {"c", strs(lp.c)},
          {"var_names", lp.var_names}, {"row_names", lp.row_names}};
}

}  // namespace clb::lp
