#pragma once

#include <string>
#include <vector>

#include "bnet/dynamics.hpp"
#include "bnet/state.hpp"
#include "bnet/subspace.hpp"

namespace bnet {

inline std::string format_states(const std::vector<state>& xs) {
  std::string out;
  for (const state& x : xs) {
    if (!out.empty()) out += ",";
    out += to_string(x);
  }
  return out;
}

inline std::string format_attractor(const attractor& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    if (i) out += ",";
    out += to_string(state{a.states[i], a.arity});
  }
  return out + "}";
}

inline std::string format_attractors(const std::vector<attractor>& as) {
  std::string out;
  for (const attractor& a : as) {
    if (!out.empty()) out += " ";
    out += format_attractor(a);
  }
  return out.empty() ? "(none)" : out;
}

inline std::string format_subspaces(const std::vector<subspace>& ss) {
  std::string out;
  for (const subspace& s : ss) {
    if (!out.empty()) out += " ";
    out += to_string(s);
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace bnet
