#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/network.hpp"
#include "bnet/subspace.hpp"

namespace bnet {

inline void check_subspace_cap(int arity, int cap, const char* what) {
  if (arity > cap)
    throw capacity_error(std::string(what) + " scans 3^" + std::to_string(arity) +
                         " subspaces; the cap is 3^" + std::to_string(cap) +
                         " (raise it with --max-subspace-arity / the cap argument)");
}

// The constant value of component i's rule over the subspace s, if any.
// Exact: the rule is partially evaluated against the fixed coordinates and
// the remainder is checked exhaustively over its own support.
inline std::optional<bool> constant_value_on(const boolean_network& net, int i,
                                             const subspace& s) {
  expr_ptr rest = simplify(restrict_to(net.rule(i), s));
  if (rest->kind == expr_kind::constant) return rest->value;
  std::uint32_t support = support_mask(*rest);
  std::vector<int> vars;
  for (int k = 0; k < net.arity(); ++k)
    if ((support >> k) & 1u) vars.push_back(k);
  if (vars.size() > 26)
    throw capacity_error("constancy check limited to rules over 26 free variables");
  const std::uint32_t combos = std::uint32_t(1) << vars.size();
  std::optional<bool> seen;
  for (std::uint32_t a = 0; a < combos; ++a) {
    std::uint32_t packed = s.values;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if ((a >> k) & 1u) packed |= std::uint32_t(1) << vars[k];
    const bool v = evaluate(*rest, packed);
    if (!seen)
      seen = v;
    else if (*seen != v)
      return std::nullopt;
  }
  return seen;
}

// A subspace is a trap space when every fixed coordinate's rule is constantly
// equal to the fixed value over the subspace.
inline bool is_trap_space(const boolean_network& net, const subspace& s) {
  if (s.arity != net.arity())
    throw std::invalid_argument("subspace arity does not match network arity");
  for (int i = 0; i < net.arity(); ++i) {
    if (!s.is_fixed(i)) continue;
    std::optional<bool> c = constant_value_on(net, i, s);
    if (!c || *c != s.fixed_value(i)) return false;
  }
  return true;
}

// The propagation function: the smallest subspace containing the image of s.
// Coordinate i is fixed in the result iff the rule of i is constant on s.
// Defined for arbitrary subspaces, not only trap spaces.
inline subspace percolate(const boolean_network& net, const subspace& s) {
  if (s.arity != net.arity())
    throw std::invalid_argument("subspace arity does not match network arity");
  subspace out = subspace::full(net.arity());
  for (int i = 0; i < net.arity(); ++i) {
    std::optional<bool> c = constant_value_on(net, i, s);
    if (c) out = out.with_fixed(i, *c);
  }
  return out;
}

struct percolation_trace {
  std::vector<subspace> steps;  // seed first, ending at the first repeated value
  bool reached_fixpoint = false;
};

// Iterate the propagation function until the first repeated subspace. From a
// trap-space seed the sequence is inclusion-decreasing and stabilizes within
// arity steps; from other seeds it may cycle, which is reported through
// reached_fixpoint = false.
inline percolation_trace percolate_trace(const boolean_network& net, const subspace& seed) {
  percolation_trace trace;
  trace.steps.push_back(seed);
  while (true) {
    const subspace next = percolate(net, trace.steps.back());
    for (const subspace& prev : trace.steps) {
      if (prev == next) {
        trace.steps.push_back(next);
        trace.reached_fixpoint = next == trace.steps[trace.steps.size() - 2];
        return trace;
      }
    }
    trace.steps.push_back(next);
  }
}

inline subspace percolation_fixpoint(const boolean_network& net, const subspace& seed) {
  percolation_trace trace = percolate_trace(net, seed);
  if (!trace.reached_fixpoint) {
    std::string cycle;
    for (const subspace& s : trace.steps) {
      if (!cycle.empty()) cycle += " -> ";
      cycle += to_string(s);
    }
    throw non_monotone_percolation(
        "propagation from a non-trap-space seed entered a cycle: " + cycle);
  }
  return trace.steps.back();
}

// The propagation fixpoint from the full space (always defined: the full
// space is a trap space).
inline subspace percolation_fixpoint(const boolean_network& net) {
  return percolation_fixpoint(net, subspace::full(net.arity()));
}

namespace detail {

template <class F>
inline void trap_space_scan(const boolean_network& net, F&& emit) {
  const int n = net.arity();
  const truth_tables& tt = net.tables();
  const std::size_t n_words = words_for_space(n);
  const word full_mask = last_word_mask(n);

  // DFS over trit assignments with an incrementally built cube mask per depth.
  std::vector<std::vector<word>> cube(static_cast<std::size_t>(n) + 1,
                                      std::vector<word>(n_words));
  for (std::size_t w = 0; w < n_words; ++w) cube[0][w] = ~word(0);
  cube[0].back() = full_mask;

  subspace current = subspace::full(n);

  // rule i constantly equals v over the cube?
  auto constant_on_cube = [&](int i, bool v, const std::vector<word>& mask) {
    const std::vector<word>& f = tt.fn[static_cast<std::size_t>(i)];
    for (std::size_t w = 0; w < n_words; ++w) {
      const word bad = v ? (mask[w] & ~f[w]) : (mask[w] & f[w]);
      if (bad) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      for (int i = 0; i < n; ++i) {
        if (!current.is_fixed(i)) continue;
        if (!constant_on_cube(i, current.fixed_value(i), cube[static_cast<std::size_t>(depth)]))
          return;
      }
      emit(current);
      return;
    }
    const std::size_t d = static_cast<std::size_t>(depth);
    // free
    cube[d + 1] = cube[d];
    self(self, depth + 1);
    // fixed to 0 / 1
    for (int v = 0; v <= 1; ++v) {
      for (std::size_t w = 0; w < n_words; ++w) {
        const word pat = variable_word(depth, w);
        cube[d + 1][w] = cube[d][w] & (v ? pat : ~pat);
      }
      current = current.with_fixed(depth, v != 0);
      self(self, depth + 1);
      current = current.with_free(depth);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// All trap spaces, ordered by number of fixed coordinates then positionwise
// with 0 < 1 < *.
inline std::vector<subspace> trap_spaces(const boolean_network& net,
                                         int cap = default_subspace_arity) {
  check_subspace_cap(net.arity(), cap, "trap space enumeration");
  std::vector<subspace> out;
  detail::trap_space_scan(net, [&](const subspace& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), subspace_canonical_less);
  return out;
}

// Inclusion-minimal trap spaces, ordered positionwise with 0 < 1 < *.
// Processing candidates by descending fixed count makes a single containment
// pass against the already accepted minima sufficient: any trap space
// strictly inside s fixes strictly more coordinates and therefore contains an
// accepted minimal trap space.
inline std::vector<subspace> minimal_trap_spaces(const boolean_network& net,
                                                 int cap = default_subspace_arity) {
  std::vector<subspace> all = trap_spaces(net, cap);
  std::sort(all.begin(), all.end(), [](const subspace& a, const subspace& b) {
    return a.fixed_count() > b.fixed_count();
  });
  std::vector<subspace> minimal;
  for (const subspace& s : all) {
    bool has_smaller = false;
    for (const subspace& m : minimal)
      if (s.contains_subspace(m) && !(m == s)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), subspace_lex_less);
  return minimal;
}

}  // namespace bnet
