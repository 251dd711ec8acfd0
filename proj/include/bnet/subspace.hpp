#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/state.hpp"

namespace bnet {

// A subspace of B^n as a trit vector over {0, 1, *}: fixed_mask has a bit per
// fixed component, values carries the fixed values (zero on free positions).
// Doubles as trap space, phenotype and control strategy.
struct subspace {
  std::uint32_t fixed_mask = 0;
  std::uint32_t values = 0;
  int arity = 0;

  static subspace full(int n) { return subspace{0, 0, n}; }

  static subspace point(const state& x) {
    std::uint32_t all = x.arity >= 32 ? ~std::uint32_t(0) : space_size(x.arity) - 1;
    return subspace{all, x.bits, x.arity};
  }

  bool is_fixed(int i) const { return (fixed_mask >> i) & 1u; }
  bool is_free(int i) const { return !is_fixed(i); }
  bool fixed_value(int i) const { return (values >> i) & 1u; }

  int fixed_count() const { return __builtin_popcount(fixed_mask); }
  int free_count() const { return arity - fixed_count(); }
  std::uint32_t free_mask() const {
    return ~fixed_mask & (space_size(arity) - 1);
  }

  // Number of states, 2^(n - |fixed|).
  std::uint64_t size() const { return std::uint64_t(1) << free_count(); }

  bool contains(std::uint32_t packed) const {
    return (packed & fixed_mask) == values;
  }
  bool contains(const state& x) const {
    return x.arity == arity && contains(x.bits);
  }

  // Set containment: other is a subset of this iff every component fixed here
  // is fixed to the same value there.
  bool contains_subspace(const subspace& other) const {
    return (other.fixed_mask & fixed_mask) == fixed_mask &&
           (other.values & fixed_mask) == values;
  }

  subspace with_fixed(int i, bool v) const {
    subspace s = *this;
    s.fixed_mask |= std::uint32_t(1) << i;
    if (v)
      s.values |= std::uint32_t(1) << i;
    else
      s.values &= ~(std::uint32_t(1) << i);
    return s;
  }

  subspace with_free(int i) const {
    subspace s = *this;
    s.fixed_mask &= ~(std::uint32_t(1) << i);
    s.values &= ~(std::uint32_t(1) << i);
    return s;
  }

  friend bool operator==(const subspace&, const subspace&) = default;
};

inline std::string to_string(const subspace& s) {
  std::string out(static_cast<std::size_t>(s.arity), '*');
  for (int i = 0; i < s.arity; ++i)
    if (s.is_fixed(i)) out[static_cast<std::size_t>(i)] = s.fixed_value(i) ? '1' : '0';
  return out;
}

inline subspace subspace_from_string(std::string_view text) {
  if (text.size() > 31)
    throw parse_error(parse_error_kind::subspace_length, 1, 1,
                      "subspace literal too long");
  subspace s = subspace::full(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': s = s.with_fixed(static_cast<int>(i), false); break;
      case '1': s = s.with_fixed(static_cast<int>(i), true); break;
      case '*': break;
      default:
        throw parse_error(parse_error_kind::subspace_character, 1, i + 1,
                          std::string("illegal character '") + text[i] +
                              "' in subspace literal (expected 0, 1 or *)");
    }
  }
  return s;
}

inline subspace project(const subspace& s, const std::vector<int>& keep) {
  subspace out = subspace::full(static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    int i = keep[k];
    if (i < 0 || i >= s.arity) throw std::out_of_range("component index out of range");
    if (s.is_fixed(i)) out = out.with_fixed(static_cast<int>(k), s.fixed_value(i));
  }
  return out;
}

// Insert a free coordinate at `position` (0 <= position <= arity); existing
// coordinates at or above it shift up. The default appends at the end, which
// realizes the cylinder construction over the dropped last component.
inline subspace extend_free(const subspace& s, int position) {
  if (position < 0 || position > s.arity)
    throw std::out_of_range("insertion position out of range");
  subspace out = subspace::full(s.arity + 1);
  for (int i = 0; i < s.arity; ++i) {
    int j = i < position ? i : i + 1;
    if (s.is_fixed(i)) out = out.with_fixed(j, s.fixed_value(i));
  }
  return out;
}

inline subspace extend_free(const subspace& s) { return extend_free(s, s.arity); }

// Enumerate the states of s in ascending packed order.
template <class F>
inline void for_each_state(const subspace& s, F&& fn) {
  std::uint32_t free = s.free_mask();
  std::uint32_t m = 0;
  while (true) {
    fn(s.values | m);
    m = (m - free) & free;
    if (m == 0) break;
  }
}

inline std::vector<state> states_of(const subspace& s) {
  std::vector<state> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for_each_state(s, [&](std::uint32_t x) { out.push_back(state{x, s.arity}); });
  return out;
}

// Positionwise order with 0 < 1 < *; used for canonical report listings.
inline int trit_rank(const subspace& s, int i) {
  return s.is_fixed(i) ? (s.fixed_value(i) ? 1 : 0) : 2;
}

inline bool subspace_lex_less(const subspace& a, const subspace& b) {
  if (a.arity != b.arity) return a.arity < b.arity;
  for (int i = 0; i < a.arity; ++i) {
    int ra = trit_rank(a, i), rb = trit_rank(b, i);
    if (ra != rb) return ra < rb;
  }
  return false;
}

// Fixed-count-major order used for trap-space listings.
inline bool subspace_canonical_less(const subspace& a, const subspace& b) {
  if (a.fixed_count() != b.fixed_count()) return a.fixed_count() < b.fixed_count();
  return subspace_lex_less(a, b);
}

}  // namespace bnet
