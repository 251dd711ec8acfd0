#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/network.hpp"

namespace bnet {

// Signed interaction graph: edge regulator -> target of sign s exists iff
// flipping the regulator changes the target's rule somewhere, in the
// direction given by s. An edge may carry both signs (non-monotone
// dependence). Computed by exhaustive comparison over the support of each
// rule.
struct signed_interaction_graph {
  int arity = 0;
  std::vector<std::uint8_t> cells;  // [regulator * arity + target], bit0 = +, bit1 = -

  std::uint8_t cell(int regulator, int target) const {
    return cells[static_cast<std::size_t>(regulator) * static_cast<std::size_t>(arity) +
                 static_cast<std::size_t>(target)];
  }
  bool has_positive(int regulator, int target) const { return cell(regulator, target) & 1u; }
  bool has_negative(int regulator, int target) const { return cell(regulator, target) & 2u; }
  bool has_edge(int regulator, int target) const { return cell(regulator, target) != 0; }

  std::vector<int> regulators(int target) const {
    std::vector<int> out;
    for (int i = 0; i < arity; ++i)
      if (has_edge(i, target)) out.push_back(i);
    return out;
  }
  std::vector<int> targets(int regulator) const {
    std::vector<int> out;
    for (int j = 0; j < arity; ++j)
      if (has_edge(regulator, j)) out.push_back(j);
    return out;
  }
  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto v : cells) c += v != 0;
    return c;
  }

  // Every cell of this graph is also present (with at least the same signs)
  // in the other graph.
  bool subgraph_of(const signed_interaction_graph& other) const {
    if (arity != other.arity) return false;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k] & ~other.cells[k]) return false;
    return true;
  }
};

namespace detail {

// Rebuild an expression with its support variables renumbered to local
// positions 0..m-1 given by `vars`.
inline expr_ptr positional_expr(const expr_ptr& e, const std::vector<int>& vars) {
  switch (e->kind) {
    case expr_kind::constant:
      return e;
    case expr_kind::variable:
      for (std::size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == e->var) return expr::variable(static_cast<int>(k));
      return e;
    case expr_kind::negation:
      return expr::negate(positional_expr(e->operands[0], vars));
    default: {
      std::vector<expr_ptr> ops;
      ops.reserve(e->operands.size());
      for (const auto& op : e->operands) ops.push_back(positional_expr(op, vars));
      return e->kind == expr_kind::conjunction ? expr::conjunction(std::move(ops))
                                               : expr::disjunction(std::move(ops));
    }
  }
}

}  // namespace detail

inline signed_interaction_graph interaction_graph(const boolean_network& net) {
  const int n = net.arity();
  signed_interaction_graph g;
  g.arity = n;
  g.cells.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);

  for (int j = 0; j < n; ++j) {
    const std::uint32_t support = support_mask(*net.rule(j));
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if ((support >> i) & 1u) vars.push_back(i);
    const int m = static_cast<int>(vars.size());
    if (m == 0) continue;
    if (m > 26)
      throw capacity_error("interaction sign computation limited to rules over 26 variables");

    expr_ptr positional = detail::positional_expr(net.rule(j), vars);
    std::vector<word> table = truth_table_words(*positional, m);
    auto bit = [&](std::uint32_t a) -> bool { return (table[a >> 6] >> (a & 63)) & 1; };

    for (int k = 0; k < m; ++k) {
      bool pos = false, neg = false;
      const std::uint32_t step = std::uint32_t(1) << k;
      for (std::uint32_t a = 0; a < (std::uint32_t(1) << m) && !(pos && neg); ++a) {
        if (a & step) continue;  // enumerate each pair from its k=0 side
        const bool v0 = bit(a), v1 = bit(a | step);
        if (!v0 && v1) pos = true;
        if (v0 && !v1) neg = true;
      }
      g.cells[static_cast<std::size_t>(vars[k]) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>((pos ? 1 : 0) | (neg ? 2 : 0));
    }
  }
  return g;
}

inline bool is_autoregulated(const signed_interaction_graph& g, int i) {
  return g.has_edge(i, i);
}

inline bool is_autoregulated(const boolean_network& net, int i) {
  return is_autoregulated(interaction_graph(net), i);
}

// A component is a mediator when none of its regulators regulates any of its
// targets (signs ignored).
inline bool is_mediator(const signed_interaction_graph& g, int i) {
  for (int r = 0; r < g.arity; ++r) {
    if (!g.has_edge(r, i)) continue;
    for (int t = 0; t < g.arity; ++t)
      if (g.has_edge(i, t) && g.has_edge(r, t)) return false;
  }
  return true;
}

inline bool is_mediator(const boolean_network& net, int i) {
  return is_mediator(interaction_graph(net), i);
}

// Exactly one regulator and one target.
inline bool is_linear(const signed_interaction_graph& g, int i) {
  return g.regulators(i).size() == 1 && g.targets(i).size() == 1;
}

inline bool is_linear(const boolean_network& net, int i) {
  return is_linear(interaction_graph(net), i);
}

inline std::string self_loop_signs(const signed_interaction_graph& g, int i) {
  if (g.has_positive(i, i) && g.has_negative(i, i)) return "positive and negative";
  if (g.has_positive(i, i)) return "positive";
  if (g.has_negative(i, i)) return "negative";
  return "none";
}

}  // namespace bnet
