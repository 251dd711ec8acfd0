#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/trapspaces.hpp"

namespace bnet {

namespace detail {

inline void check_eliminable(const boolean_network& net, int component,
                             const signed_interaction_graph& g) {
  if (component < 0 || component >= net.arity())
    throw std::out_of_range("component index out of range");
  if (net.arity() == 1)
    throw std::invalid_argument("cannot eliminate the only component");
  if (g.has_edge(component, component))
    throw std::invalid_argument("component '" + net.name(component) +
                                "' is autoregulated (" + self_loop_signs(g, component) +
                                " self-loop); only non-autoregulated components can be eliminated");
}

}  // namespace detail

// The representative state of a partial state x over the components other
// than `component`: x extended at the eliminated coordinate by the value the
// coordinate's own rule takes there (well defined because the component is
// not autoregulated).
inline state representative(const boolean_network& net, int component, const state& x_rest) {
  detail::check_eliminable(net, component, interaction_graph(net));
  if (x_rest.arity != net.arity() - 1)
    throw std::invalid_argument("partial state must cover all components but the eliminated one");
  const std::uint32_t low_mask = (std::uint32_t(1) << component) - 1;
  std::uint32_t embedded = (x_rest.bits & low_mask) | ((x_rest.bits & ~low_mask) << 1);
  if (evaluate(*net.rule(component), embedded))
    embedded |= std::uint32_t(1) << component;
  return state{embedded, net.arity()};
}

// Eliminate a non-autoregulated component: substitute its rule into every
// other rule and drop it. Rules that never mention the eliminated variable
// are kept unchanged. The substituted rules are algebraically simplified so
// the reduced network serializes readably.
inline boolean_network eliminate(const boolean_network& net, int component) {
  const signed_interaction_graph g = interaction_graph(net);
  detail::check_eliminable(net, component, g);

  // The rule may mention its own variable vacuously; fixing it to 0 is exact
  // for a non-autoregulated component and makes the substitution closed.
  expr_ptr inserted = net.rule(component);
  if ((support_mask(*inserted) >> component) & 1u)
    inserted = simplify(restrict_to(inserted, subspace::full(net.arity()).with_fixed(component, false)));

  std::vector<std::string> names;
  std::vector<expr_ptr> rules;
  names.reserve(static_cast<std::size_t>(net.arity() - 1));
  rules.reserve(static_cast<std::size_t>(net.arity() - 1));
  for (int j = 0; j < net.arity(); ++j) {
    if (j == component) continue;
    names.push_back(net.name(j));
    expr_ptr r = net.rule(j);
    if ((support_mask(*r) >> component) & 1u)
      r = simplify(substitute(r, component, inserted));
    rules.push_back(shift_vars_above(r, component));
  }
  return boolean_network(std::move(names), std::move(rules));
}

struct mts_preservation_pair {
  subspace reduced_mts;
  std::optional<subspace> source_mts;  // nullopt: new in the reduction
};

struct mts_preservation_report {
  bool strictly_preserved = false;
  std::vector<mts_preservation_pair> pairs;
};

// Minimal trap spaces are strictly preserved when every minimal trap space of
// the reduction is the exact projection of a minimal trap space of the
// source. The report pairs each reduced minimal trap space with its source or
// marks it as new.
inline mts_preservation_report mts_preservation(const boolean_network& net, int component,
                                                int cap = default_subspace_arity) {
  const boolean_network reduced = eliminate(net, component);
  const std::vector<subspace> source = minimal_trap_spaces(net, cap);
  const std::vector<subspace> target = minimal_trap_spaces(reduced, cap);
  const std::vector<int> keep = all_but(net.arity(), component);

  mts_preservation_report report;
  report.strictly_preserved = true;
  for (const subspace& t : target) {
    std::optional<subspace> match;
    for (const subspace& s : source)
      if (project(s, keep) == t) {
        match = s;
        break;
      }
    if (!match) report.strictly_preserved = false;
    report.pairs.push_back({t, match});
  }
  return report;
}

inline bool strictly_preserves_mts(const boolean_network& net, int component,
                                   int cap = default_subspace_arity) {
  return mts_preservation(net, component, cap).strictly_preserved;
}

struct elimination_witness {
  int eliminated = 0;
  bool mediator = false;
  bool linear = false;
  boolean_network reduced;
  std::optional<mts_preservation_report> mts;
};

inline elimination_witness eliminate_with_witness(const boolean_network& net, int component,
                                                  bool check_mts = false,
                                                  int cap = default_subspace_arity) {
  const signed_interaction_graph g = interaction_graph(net);
  detail::check_eliminable(net, component, g);
  elimination_witness w{component, is_mediator(g, component), is_linear(g, component),
                        eliminate(net, component), std::nullopt};
  if (check_mts) w.mts = mts_preservation(net, component, cap);
  return w;
}

}  // namespace bnet
