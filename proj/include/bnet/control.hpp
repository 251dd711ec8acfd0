#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnet/dynamics.hpp"
#include "bnet/errors.hpp"
#include "bnet/network.hpp"
#include "bnet/subspace.hpp"
#include "bnet/trapspaces.hpp"

namespace bnet {

// Apply a control strategy: rules of the fixed coordinates are replaced by
// their constants, free coordinates keep their rules.
inline boolean_network apply_control(const boolean_network& net, const subspace& strategy) {
  if (strategy.arity != net.arity())
    throw std::invalid_argument("strategy arity does not match network arity");
  std::vector<expr_ptr> rules;
  rules.reserve(static_cast<std::size_t>(net.arity()));
  for (int i = 0; i < net.arity(); ++i)
    rules.push_back(strategy.is_fixed(i) ? expr::constant(strategy.fixed_value(i))
                                         : net.rule(i));
  return boolean_network(net.names(), std::move(rules));
}

// Control strategies may not fix components that are fixed in the target
// phenotype; the two fix disjoint coordinate sets.
inline void check_strategy_phenotype(const subspace& strategy, const subspace& phenotype) {
  if (strategy.arity != phenotype.arity)
    throw std::invalid_argument("strategy and phenotype arity mismatch");
  if (strategy.fixed_mask & phenotype.fixed_mask)
    throw std::invalid_argument(
        "strategy fixes a component that is fixed in the phenotype (" +
        to_string(strategy) + " vs " + to_string(phenotype) + ")");
}

// Every attractor of the controlled dynamics lies inside the phenotype.
inline bool is_attractor_cs(const boolean_network& net, const subspace& strategy,
                            const subspace& phenotype, update_mode mode,
                            int cap = default_enumeration_arity) {
  check_strategy_phenotype(strategy, phenotype);
  for (const attractor& a : attractors(apply_control(net, strategy), mode, cap))
    for (std::uint32_t x : a.states)
      if (!phenotype.contains(x)) return false;
  return true;
}

// Every minimal trap space of the controlled network lies inside the
// phenotype.
inline bool is_mts_cs(const boolean_network& net, const subspace& strategy,
                      const subspace& phenotype, int cap = default_subspace_arity) {
  check_strategy_phenotype(strategy, phenotype);
  for (const subspace& t : minimal_trap_spaces(apply_control(net, strategy), cap))
    if (!phenotype.contains_subspace(t)) return false;
  return true;
}

// The propagation fixpoint of the controlled network lies inside the
// phenotype.
inline bool is_vp_cs(const boolean_network& net, const subspace& strategy,
                     const subspace& phenotype) {
  check_strategy_phenotype(strategy, phenotype);
  return phenotype.contains_subspace(percolation_fixpoint(apply_control(net, strategy)));
}

struct control_criterion {
  enum class kind_t { attractor, mts, vp };
  kind_t kind = kind_t::vp;
  update_mode mode = update_mode::asynchronous;  // attractor only

  static control_criterion attractor(update_mode m) {
    return {kind_t::attractor, m};
  }
  static control_criterion mts() { return {kind_t::mts, update_mode::asynchronous}; }
  static control_criterion vp() { return {kind_t::vp, update_mode::asynchronous}; }
};

inline std::optional<control_criterion> parse_criterion(const std::string& text) {
  if (text == "attractor:sync") return control_criterion::attractor(update_mode::synchronous);
  if (text == "attractor:async") return control_criterion::attractor(update_mode::asynchronous);
  if (text == "attractor:general") return control_criterion::attractor(update_mode::general);
  if (text == "mts") return control_criterion::mts();
  if (text == "vp") return control_criterion::vp();
  return std::nullopt;
}

inline std::string to_string(const control_criterion& c) {
  switch (c.kind) {
    case control_criterion::kind_t::mts: return "mts";
    case control_criterion::kind_t::vp: return "vp";
    case control_criterion::kind_t::attractor:
      switch (c.mode) {
        case update_mode::synchronous: return "attractor:sync";
        case update_mode::asynchronous: return "attractor:async";
        case update_mode::general: return "attractor:general";
      }
  }
  return "?";
}

inline bool is_control_strategy(const boolean_network& net, const subspace& strategy,
                                const subspace& phenotype, const control_criterion& criterion,
                                int enum_cap = default_enumeration_arity,
                                int subspace_cap = default_subspace_arity) {
  switch (criterion.kind) {
    case control_criterion::kind_t::attractor:
      return is_attractor_cs(net, strategy, phenotype, criterion.mode, enum_cap);
    case control_criterion::kind_t::mts:
      return is_mts_cs(net, strategy, phenotype, subspace_cap);
    case control_criterion::kind_t::vp:
      return is_vp_cs(net, strategy, phenotype);
  }
  return false;
}

namespace detail {

// Candidate strategies fix only phenotype-free components, at most max_fixed
// of them, enumerated by ascending fixed count and then positionwise
// (0 < 1 < *), which coincides with ascending combination order with the
// leftmost chosen position most significant in the value counter.
template <class F>
inline bool for_each_candidate_strategy(const subspace& phenotype, int max_fixed, F&& fn) {
  const int n = phenotype.arity;
  std::vector<int> free_positions;
  for (int i = 0; i < n; ++i)
    if (!phenotype.is_fixed(i)) free_positions.push_back(i);
  const int f = static_cast<int>(free_positions.size());
  if (max_fixed > f)
    throw std::invalid_argument("max_fixed exceeds the number of phenotype-free components");

  std::vector<int> combo;
  auto emit_values = [&](const std::vector<int>& positions) -> bool {
    const int k = static_cast<int>(positions.size());
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << k); ++v) {
      subspace s = subspace::full(n);
      for (int j = 0; j < k; ++j) {
        const bool bit = (v >> (k - 1 - j)) & 1u;  // leftmost position most significant
        s = s.with_fixed(positions[static_cast<std::size_t>(j)], bit);
      }
      if (!fn(s)) return false;
    }
    return true;
  };

  auto combos = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return emit_values(combo);
    for (int p = start; p <= f - remaining; ++p) {
      combo.push_back(free_positions[static_cast<std::size_t>(p)]);
      if (!self(self, p + 1, remaining - 1)) return false;
      combo.pop_back();
    }
    return true;
  };

  for (int k = 0; k <= max_fixed; ++k)
    if (!combos(combos, 0, k)) return false;
  return true;
}

inline bool is_sub_assignment(const subspace& small, const subspace& big) {
  return (small.fixed_mask & big.fixed_mask) == small.fixed_mask &&
         (big.values & small.fixed_mask) == small.values;
}

}  // namespace detail

// Enumerate control strategies for the phenotype under the criterion. With
// minimal_only, strategies whose fixed assignment extends an already returned
// strategy's assignment are dropped (and skipped without evaluation).
inline std::vector<subspace> find_control_strategies(
    const boolean_network& net, const subspace& phenotype, const control_criterion& criterion,
    int max_fixed, bool minimal_only = false, int enum_cap = default_enumeration_arity,
    int subspace_cap = default_subspace_arity) {
  if (phenotype.arity != net.arity())
    throw std::invalid_argument("phenotype arity does not match network arity");
  std::vector<subspace> found;
  detail::for_each_candidate_strategy(phenotype, max_fixed, [&](const subspace& s) {
    if (minimal_only)
      for (const subspace& m : found)
        if (detail::is_sub_assignment(m, s)) return true;
    if (is_control_strategy(net, s, phenotype, criterion, enum_cap, subspace_cap))
      found.push_back(s);
    return true;
  });
  return found;
}

inline std::vector<subspace> find_control_strategies(
    const boolean_network& net, const subspace& phenotype, const control_criterion& criterion) {
  return find_control_strategies(net, phenotype, criterion, phenotype.free_count());
}

inline bool exists_control_strategy(const boolean_network& net, const subspace& phenotype,
                                    const control_criterion& criterion,
                                    int enum_cap = default_enumeration_arity,
                                    int subspace_cap = default_subspace_arity) {
  bool found = false;
  detail::for_each_candidate_strategy(
      phenotype, phenotype.free_count(), [&](const subspace& s) {
        if (is_control_strategy(net, s, phenotype, criterion, enum_cap, subspace_cap)) {
          found = true;
          return false;
        }
        return true;
      });
  return found;
}

// One-call evaluation of all five verdicts for a strategy, with the
// supporting artifacts: the first offending attractor or minimal trap space
// and the full percolation trace.
struct control_record {
  bool sync = false, async = false, general = false, mts = false, vp = false;
  std::optional<attractor> offending_sync, offending_async, offending_general;
  std::optional<subspace> offending_mts;
  percolation_trace trace;  // from the full space on the controlled network

  bool all() const { return sync && async && general && mts && vp; }
};

inline bool trace_inside(const percolation_trace& trace, const subspace& phenotype) {
  return phenotype.contains_subspace(trace.steps.back());
}

inline control_record control_report(const boolean_network& net, const subspace& phenotype,
                                     const subspace& strategy,
                                     int enum_cap = default_enumeration_arity,
                                     int subspace_cap = default_subspace_arity) {
  check_strategy_phenotype(strategy, phenotype);
  const boolean_network controlled = apply_control(net, strategy);
  control_record r;

  auto check_mode = [&](update_mode mode, bool& ok, std::optional<attractor>& offending) {
    ok = true;
    for (const attractor& a : attractors(controlled, mode, enum_cap)) {
      bool inside = true;
      for (std::uint32_t x : a.states)
        if (!phenotype.contains(x)) {
          inside = false;
          break;
        }
      if (!inside) {
        ok = false;
        offending = a;
        return;
      }
    }
  };
  check_mode(update_mode::synchronous, r.sync, r.offending_sync);
  check_mode(update_mode::asynchronous, r.async, r.offending_async);
  check_mode(update_mode::general, r.general, r.offending_general);

  r.mts = true;
  for (const subspace& t : minimal_trap_spaces(controlled, subspace_cap))
    if (!phenotype.contains_subspace(t)) {
      r.mts = false;
      r.offending_mts = t;
      break;
    }

  r.trace = percolate_trace(controlled, subspace::full(net.arity()));
  r.vp = trace_inside(r.trace, phenotype);
  return r;
}

}  // namespace bnet
