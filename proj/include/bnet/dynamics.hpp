#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/network.hpp"

namespace bnet {

// Update schemes. Synchronous: each non-fixed state steps to its image.
// Asynchronous: one unstable component changes per transition. General
// asynchronous: any nonempty subset of the unstable components changes.
// Self-loops are never part of a transition relation.
enum class update_mode { synchronous, asynchronous, general };

inline const char* to_string(update_mode m) {
  switch (m) {
    case update_mode::synchronous: return "synchronous";
    case update_mode::asynchronous: return "asynchronous";
    case update_mode::general: return "general";
  }
  return "?";
}

inline void check_enumeration_cap(int arity, int cap, const char* what) {
  if (arity > cap)
    throw capacity_error(std::string(what) + " requires explicit enumeration of 2^" +
                         std::to_string(arity) + " states; the cap is 2^" +
                         std::to_string(cap) +
                         " (raise it with --max-states / the cap argument)");
}

// Explicit transition system over bit-packed states. The relation is stored
// as one update mask per state (image XOR state); successors for every mode
// are enumerated from the mask, which keeps the general asynchronous
// relation affordable at the arity cap.
class transition_system {
 public:
  update_mode mode;
  int arity = 0;
  std::vector<std::uint32_t> update_mask;

  // Enumerates successors of x (order unspecified).
  template <class F>
  void for_each_successor(std::uint32_t x, F&& fn) const {
    const std::uint32_t delta = update_mask[x];
    if (delta == 0) return;
    switch (mode) {
      case update_mode::synchronous:
        fn(x ^ delta);
        return;
      case update_mode::asynchronous:
        for (std::uint32_t m = delta; m;) {
          const std::uint32_t bit = m & (0u - m);
          fn(x ^ bit);
          m ^= bit;
        }
        return;
      case update_mode::general:
        // all nonempty submasks of delta
        for (std::uint32_t m = delta;;) {
          fn(x ^ m);
          m = (m - 1) & delta;
          if (m == 0) return;
        }
    }
  }

  std::vector<std::uint32_t> successors(std::uint32_t x) const {
    std::vector<std::uint32_t> out;
    for_each_successor(x, [&](std::uint32_t y) { out.push_back(y); });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t out_degree(std::uint32_t x) const {
    const std::uint32_t delta = update_mask[x];
    if (delta == 0) return 0;
    switch (mode) {
      case update_mode::synchronous: return 1;
      case update_mode::asynchronous: return static_cast<std::size_t>(__builtin_popcount(delta));
      case update_mode::general:
        return (std::size_t(1) << __builtin_popcount(delta)) - 1;
    }
    return 0;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (std::uint32_t x = 0; x < update_mask.size(); ++x) total += out_degree(x);
    return total;
  }
};

inline transition_system build_transition_system(const boolean_network& net, update_mode mode,
                                                 int cap = default_enumeration_arity) {
  check_enumeration_cap(net.arity(), cap, "transition system construction");
  const int n = net.arity();
  const std::uint32_t size = space_size(n);
  transition_system ts;
  ts.mode = mode;
  ts.arity = n;
  ts.update_mask.assign(size, 0);
  const truth_tables& tt = net.tables();
  for (int i = 0; i < n; ++i) {
    const std::vector<word>& f = tt.fn[static_cast<std::size_t>(i)];
    const std::uint32_t bit = std::uint32_t(1) << i;
    for (std::size_t w = 0; w < f.size(); ++w) {
      // states whose component i differs from its image
      word diff = f[w] ^ variable_word(i, w);
      if (w + 1 == f.size()) diff &= last_word_mask(n);
      while (diff) {
        const int b = __builtin_ctzll(diff);
        ts.update_mask[(w << 6) | static_cast<unsigned>(b)] |= bit;
        diff &= diff - 1;
      }
    }
  }
  return ts;
}

// Successors of a single state, computed directly from the rules (no cap).
inline std::vector<state> successors(const boolean_network& net, const state& x,
                                     update_mode mode) {
  if (x.arity != net.arity())
    throw std::invalid_argument("state arity does not match network arity");
  const std::uint32_t delta = net.evaluate_packed(x.bits) ^ x.bits;
  std::vector<std::uint32_t> packed;
  if (delta != 0) {
    switch (mode) {
      case update_mode::synchronous:
        packed.push_back(x.bits ^ delta);
        break;
      case update_mode::asynchronous:
        for (std::uint32_t m = delta; m;) {
          const std::uint32_t bit = m & (0u - m);
          packed.push_back(x.bits ^ bit);
          m ^= bit;
        }
        break;
      case update_mode::general:
        for (std::uint32_t m = delta;;) {
          packed.push_back(x.bits ^ m);
          m = (m - 1) & delta;
          if (m == 0) break;
        }
        break;
    }
  }
  std::sort(packed.begin(), packed.end());
  std::vector<state> out;
  out.reserve(packed.size());
  for (std::uint32_t p : packed) out.push_back(state{p, x.arity});
  return out;
}

// An attractor: a terminal strongly connected component of the transition
// system, equivalently an inclusion-minimal trap set.
struct attractor {
  std::vector<std::uint32_t> states;  // sorted ascending
  int arity = 0;
  bool cyclic = false;  // false: fixed point

  bool contains(std::uint32_t x) const {
    return std::binary_search(states.begin(), states.end(), x);
  }
};

namespace detail {

// Iterative Tarjan SCC over the implicit successor relation. Returns the
// attractors (terminal SCCs); cross-SCC exits are detected during the single
// pass, so no second edge sweep is needed.
inline std::vector<attractor> terminal_sccs(const transition_system& ts) {
  const std::uint32_t size = space_size(ts.arity);
  constexpr std::uint32_t none = ~std::uint32_t(0);
  std::vector<std::uint32_t> index(size, none), lowlink(size, 0), scc_id(size, none);
  std::vector<bool> on_stack(size, false), has_exit(size, false);
  std::vector<std::uint32_t> stack;

  struct frame {
    std::uint32_t v;
    std::uint32_t iter;       // mode-specific successor cursor
    bool iter_started;
    std::uint32_t pending;    // child awaiting lowlink merge
  };
  std::vector<frame> frames;
  std::uint32_t next_index = 0, next_scc = 0;

  auto next_successor = [&ts](frame& f) -> std::uint32_t {
    const std::uint32_t delta = ts.update_mask[f.v];
    if (delta == 0) return none;
    switch (ts.mode) {
      case update_mode::synchronous:
        if (f.iter_started) return none;
        f.iter_started = true;
        return f.v ^ delta;
      case update_mode::asynchronous: {
        if (!f.iter_started) {
          f.iter_started = true;
          f.iter = delta;
        }
        if (f.iter == 0) return none;
        const std::uint32_t bit = f.iter & (0u - f.iter);
        f.iter ^= bit;
        return f.v ^ bit;
      }
      case update_mode::general: {
        if (!f.iter_started) {
          f.iter_started = true;
          f.iter = delta;
        }
        if (f.iter == 0) return none;
        const std::uint32_t m = f.iter;
        f.iter = (m - 1) & delta;
        return f.v ^ m;
      }
    }
    return none;
  };

  std::vector<attractor> out;

  for (std::uint32_t root = 0; root < size; ++root) {
    if (index[root] != none) continue;
    frames.push_back({root, 0, false, none});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      frame& f = frames.back();
      if (f.pending != none) {
        lowlink[f.v] = std::min(lowlink[f.v], lowlink[f.pending]);
        if (scc_id[f.pending] != none) has_exit[f.v] = true;
        f.pending = none;
      }
      const std::uint32_t w = next_successor(f);
      if (w != none) {
        if (index[w] == none) {
          f.pending = w;
          frames.push_back({w, 0, false, none});
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        } else {
          has_exit[f.v] = true;  // edge into an already finished SCC
        }
        continue;
      }
      // v exhausted; pop an SCC if v is a root
      const std::uint32_t v = f.v;
      if (lowlink[v] == index[v]) {
        bool exits = false;
        std::vector<std::uint32_t> members;
        while (true) {
          const std::uint32_t u = stack.back();
          stack.pop_back();
          on_stack[u] = false;
          scc_id[u] = next_scc;
          exits = exits || has_exit[u];
          members.push_back(u);
          if (u == v) break;
        }
        ++next_scc;
        if (!exits) {
          attractor a;
          a.arity = ts.arity;
          a.states = std::move(members);
          std::sort(a.states.begin(), a.states.end());
          a.cyclic = a.states.size() > 1;
          out.push_back(std::move(a));
        }
      }
      frames.pop_back();
    }
  }

  std::sort(out.begin(), out.end(),
            [](const attractor& a, const attractor& b) { return a.states[0] < b.states[0]; });
  return out;
}

}  // namespace detail

inline std::vector<attractor> attractors(const transition_system& ts) {
  return detail::terminal_sccs(ts);
}

inline std::vector<attractor> attractors(const boolean_network& net, update_mode mode,
                                         int cap = default_enumeration_arity) {
  return detail::terminal_sccs(build_transition_system(net, mode, cap));
}

// All states with f(x) = x; independent of the update mode.
inline std::vector<state> fixed_points(const boolean_network& net,
                                       int cap = default_enumeration_arity) {
  check_enumeration_cap(net.arity(), cap, "fixed point enumeration");
  std::vector<state> out;
  const truth_tables& tt = net.tables();
  const std::uint32_t size = space_size(net.arity());
  for (std::uint32_t x = 0; x < size; ++x) {
    bool fixed = true;
    for (int i = 0; i < net.arity() && fixed; ++i)
      fixed = tt.value(i, x) == ((x >> i) & 1u);
    if (fixed) out.push_back(state{x, net.arity()});
  }
  return out;
}

// True iff no transition leaves A.
inline bool is_trap_set(const boolean_network& net, const std::vector<state>& set,
                        update_mode mode) {
  std::unordered_set<std::uint32_t> members;
  for (const state& x : set) {
    if (x.arity != net.arity())
      throw std::invalid_argument("state arity does not match network arity");
    members.insert(x.bits);
  }
  for (const state& x : set)
    for (const state& y : successors(net, x, mode))
      if (!members.count(y.bits)) return false;
  return true;
}

// Smallest trap set containing the seeds: the forward closure under the
// transition relation.
inline std::vector<state> forward_closure(const boolean_network& net,
                                          const std::vector<state>& seeds, update_mode mode) {
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> work;
  for (const state& x : seeds)
    if (seen.insert(x.bits).second) work.push_back(x.bits);
  while (!work.empty()) {
    std::uint32_t x = work.back();
    work.pop_back();
    for (const state& y : successors(net, state{x, net.arity()}, mode))
      if (seen.insert(y.bits).second) work.push_back(y.bits);
  }
  std::vector<std::uint32_t> packed(seen.begin(), seen.end());
  std::sort(packed.begin(), packed.end());
  std::vector<state> out;
  out.reserve(packed.size());
  for (std::uint32_t p : packed) out.push_back(state{p, net.arity()});
  return out;
}

inline std::vector<state> attractor_states(const attractor& a) {
  std::vector<state> out;
  out.reserve(a.states.size());
  for (std::uint32_t p : a.states) out.push_back(state{p, a.arity});
  return out;
}

}  // namespace bnet
