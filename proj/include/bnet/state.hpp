#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnet/errors.hpp"

namespace bnet {

// A state of a network on n components, bit-packed with component 0 in the
// least significant bit. The textual form reads left to right in declaration
// order, so "110" is component 0 = 1, component 1 = 1, component 2 = 0
// (packed value 0b011).
struct state {
  std::uint32_t bits = 0;
  int arity = 0;

  bool get(int i) const { return (bits >> i) & 1u; }

  friend bool operator==(const state&, const state&) = default;
  friend bool operator<(const state& a, const state& b) {
    return a.arity != b.arity ? a.arity < b.arity : a.bits < b.bits;
  }
};

inline std::uint32_t space_size(int arity) { return std::uint32_t(1) << arity; }

inline std::string to_string(const state& x) {
  std::string out(static_cast<std::size_t>(x.arity), '0');
  for (int i = 0; i < x.arity; ++i)
    if (x.get(i)) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

inline state state_from_string(std::string_view text) {
  state x{0, static_cast<int>(text.size())};
  if (text.size() > 31) throw std::invalid_argument("state literal too long");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      x.bits |= std::uint32_t(1) << i;
    else if (text[i] != '0')
      throw std::invalid_argument("state literal may contain only 0 and 1");
  }
  return x;
}

inline void check_index(const state& x, int i) {
  if (i < 0 || i >= x.arity) throw std::out_of_range("component index out of range");
}

inline state flip(state x, int i) {
  check_index(x, i);
  x.bits ^= std::uint32_t(1) << i;
  return x;
}

inline state flip(state x, const std::vector<int>& indices) {
  for (int i : indices) {
    check_index(x, i);
    x.bits ^= std::uint32_t(1) << i;
  }
  return x;
}

// Projection onto the listed components; the result's component k is the
// source's component keep[k].
inline state project(const state& x, const std::vector<int>& keep) {
  state out{0, static_cast<int>(keep.size())};
  for (std::size_t k = 0; k < keep.size(); ++k) {
    check_index(x, keep[k]);
    if (x.get(keep[k])) out.bits |= std::uint32_t(1) << k;
  }
  return out;
}

inline std::vector<state> project(const std::vector<state>& xs,
                                  const std::vector<int>& keep) {
  std::vector<state> out;
  out.reserve(xs.size());
  for (const state& x : xs) {
    state p = project(x, keep);
    bool seen = false;
    for (const state& q : out)
      if (q == p) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

// All component indices except `drop`, in order. The usual projection used by
// component elimination.
inline std::vector<int> all_but(int arity, int drop) {
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(arity - 1));
  for (int i = 0; i < arity; ++i)
    if (i != drop) keep.push_back(i);
  return keep;
}

}  // namespace bnet
