#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bnet/subspace.hpp"

namespace bnet {

enum class expr_kind { constant, variable, negation, conjunction, disjunction };

class expr;
using expr_ptr = std::shared_ptr<const expr>;

// Immutable expression tree over {0, 1, x_i, !, &, |}. Conjunction and
// disjunction are n-ary; operand order is preserved through every transform
// so that serialized output renders as written.
class expr {
 public:
  expr_kind kind;
  bool value = false;                // constant
  int var = -1;                      // variable
  std::vector<expr_ptr> operands;    // negation: 1, conjunction/disjunction: >= 1

  static expr_ptr constant(bool v) {
    auto e = std::make_shared<expr>();
    e->kind = expr_kind::constant;
    e->value = v;
    return e;
  }
  static expr_ptr variable(int index) {
    auto e = std::make_shared<expr>();
    e->kind = expr_kind::variable;
    e->var = index;
    return e;
  }
  static expr_ptr negate(expr_ptr operand) {
    auto e = std::make_shared<expr>();
    e->kind = expr_kind::negation;
    e->operands.push_back(std::move(operand));
    return e;
  }
  static expr_ptr conjunction(std::vector<expr_ptr> operands) {
    if (operands.size() == 1) return operands.front();
    auto e = std::make_shared<expr>();
    e->kind = expr_kind::conjunction;
    e->operands = std::move(operands);
    return e;
  }
  static expr_ptr disjunction(std::vector<expr_ptr> operands) {
    if (operands.size() == 1) return operands.front();
    auto e = std::make_shared<expr>();
    e->kind = expr_kind::disjunction;
    e->operands = std::move(operands);
    return e;
  }
};

inline bool evaluate(const expr& e, std::uint32_t packed_state) {
  switch (e.kind) {
    case expr_kind::constant: return e.value;
    case expr_kind::variable: return (packed_state >> e.var) & 1u;
    case expr_kind::negation: return !evaluate(*e.operands[0], packed_state);
    case expr_kind::conjunction:
      for (const auto& op : e.operands)
        if (!evaluate(*op, packed_state)) return false;
      return true;
    case expr_kind::disjunction:
      for (const auto& op : e.operands)
        if (evaluate(*op, packed_state)) return true;
      return false;
  }
  return false;
}

// Bitmask of variables occurring syntactically.
inline std::uint32_t support_mask(const expr& e) {
  switch (e.kind) {
    case expr_kind::constant: return 0;
    case expr_kind::variable: return std::uint32_t(1) << e.var;
    default: {
      std::uint32_t m = 0;
      for (const auto& op : e.operands) m |= support_mask(*op);
      return m;
    }
  }
}

inline int max_variable(const expr& e) {
  std::uint32_t m = support_mask(e);
  return m == 0 ? -1 : 31 - __builtin_clz(m);
}

inline bool expr_equal(const expr& a, const expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case expr_kind::constant: return a.value == b.value;
    case expr_kind::variable: return a.var == b.var;
    default:
      if (a.operands.size() != b.operands.size()) return false;
      for (std::size_t i = 0; i < a.operands.size(); ++i)
        if (!expr_equal(*a.operands[i], *b.operands[i])) return false;
      return true;
  }
}

// Replace every occurrence of x_var by `replacement`; untouched subtrees are
// shared with the input.
inline expr_ptr substitute(const expr_ptr& e, int var, const expr_ptr& replacement) {
  if (!(support_mask(*e) >> var & 1u)) return e;
  switch (e->kind) {
    case expr_kind::variable: return replacement;
    case expr_kind::negation: return expr::negate(substitute(e->operands[0], var, replacement));
    default: {
      std::vector<expr_ptr> ops;
      ops.reserve(e->operands.size());
      for (const auto& op : e->operands) ops.push_back(substitute(op, var, replacement));
      return e->kind == expr_kind::conjunction ? expr::conjunction(std::move(ops))
                                               : expr::disjunction(std::move(ops));
    }
  }
}

// Fix the variables fixed in s to their values (used by partial evaluation;
// the result still mentions only variables free in s).
inline expr_ptr restrict_to(const expr_ptr& e, const subspace& s) {
  if ((support_mask(*e) & s.fixed_mask) == 0) return e;
  switch (e->kind) {
    case expr_kind::variable: return expr::constant(s.fixed_value(e->var));
    case expr_kind::negation: return expr::negate(restrict_to(e->operands[0], s));
    default: {
      std::vector<expr_ptr> ops;
      ops.reserve(e->operands.size());
      for (const auto& op : e->operands) ops.push_back(restrict_to(op, s));
      return e->kind == expr_kind::conjunction ? expr::conjunction(std::move(ops))
                                               : expr::disjunction(std::move(ops));
    }
  }
}

// Decrement every variable index above `removed`; the expression must not
// mention `removed` itself.
inline expr_ptr shift_vars_above(const expr_ptr& e, int removed) {
  if ((support_mask(*e) & ~((std::uint32_t(1) << (removed + 1)) - 1)) == 0) return e;
  switch (e->kind) {
    case expr_kind::variable:
      return e->var > removed ? expr::variable(e->var - 1) : e;
    case expr_kind::negation:
      return expr::negate(shift_vars_above(e->operands[0], removed));
    default: {
      std::vector<expr_ptr> ops;
      ops.reserve(e->operands.size());
      for (const auto& op : e->operands) ops.push_back(shift_vars_above(op, removed));
      return e->kind == expr_kind::conjunction ? expr::conjunction(std::move(ops))
                                               : expr::disjunction(std::move(ops));
    }
  }
}

namespace detail {

// literal = variable or negated variable; cube = literal or conjunction of
// literals. Factoring works on those shapes only.
inline bool is_literal(const expr& e) {
  return e.kind == expr_kind::variable ||
         (e.kind == expr_kind::negation && e.operands[0]->kind == expr_kind::variable);
}

inline bool literal_equal(const expr& a, const expr& b) { return expr_equal(a, b); }

inline bool is_cube(const expr& e) {
  if (is_literal(e)) return true;
  if (e.kind != expr_kind::conjunction) return false;
  for (const auto& op : e.operands)
    if (!is_literal(*op)) return false;
  return true;
}

inline std::vector<expr_ptr> cube_literals(const expr_ptr& e) {
  if (is_literal(*e)) return {e};
  return e->operands;
}

inline bool contains_literal(const std::vector<expr_ptr>& lits, const expr& l) {
  for (const auto& c : lits)
    if (literal_equal(*c, l)) return true;
  return false;
}

inline bool complement_literals(const expr& a, const expr& b) {
  if (a.kind == expr_kind::negation && b.kind == expr_kind::variable)
    return a.operands[0]->var == b.var;
  if (b.kind == expr_kind::negation && a.kind == expr_kind::variable)
    return b.operands[0]->var == a.var;
  return false;
}

}  // namespace detail

expr_ptr simplify(const expr_ptr& e);

namespace detail {

inline expr_ptr rebuild_nary(expr_kind kind, std::vector<expr_ptr> ops) {
  if (ops.empty()) return expr::constant(kind == expr_kind::conjunction);
  if (ops.size() == 1) return ops.front();
  return kind == expr_kind::conjunction ? expr::conjunction(std::move(ops))
                                        : expr::disjunction(std::move(ops));
}

inline expr_ptr simplify_nary(expr_kind kind, const std::vector<expr_ptr>& raw) {
  const bool is_and = kind == expr_kind::conjunction;
  const bool absorbing = !is_and;   // 1 for |, 0 for &
  std::vector<expr_ptr> ops;

  // flatten + fold constants
  for (const auto& r : raw) {
    expr_ptr c = simplify(r);
    if (c->kind == kind) {
      for (const auto& sub : c->operands) ops.push_back(sub);
      continue;
    }
    if (c->kind == expr_kind::constant) {
      if (c->value == absorbing) return expr::constant(absorbing);
      continue;  // neutral element
    }
    ops.push_back(std::move(c));
  }

  // dedupe (keep first occurrence) and complementary-literal annihilation
  std::vector<expr_ptr> kept;
  for (const auto& c : ops) {
    bool duplicate = false;
    for (const auto& k : kept) {
      if (expr_equal(*k, *c)) { duplicate = true; break; }
      if (is_literal(*k) && is_literal(*c) && complement_literals(*k, *c))
        return expr::constant(absorbing);
    }
    if (!duplicate) kept.push_back(c);
  }

  // absorption between cubes: within |, a cube whose literals include all
  // literals of a sibling cube is redundant (dually for &).
  std::vector<expr_ptr> result;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool absorbed = false;
    if (is_cube(*kept[i])) {
      auto li = cube_literals(kept[i]);
      for (std::size_t j = 0; j < kept.size() && !absorbed; ++j) {
        if (i == j || !is_cube(*kept[j])) continue;
        auto lj = cube_literals(kept[j]);
        if (lj.size() > li.size() || (lj.size() == li.size() && j > i)) continue;
        bool subset = true;
        for (const auto& l : lj)
          if (!contains_literal(li, *l)) { subset = false; break; }
        if (subset && lj.size() < li.size()) absorbed = true;
      }
    }
    if (!absorbed) result.push_back(kept[i]);
  }

  // common-factor extraction over a disjunction of cubes, e.g.
  // x1&!x2 | x1&x2  ->  x1 & (!x2 | x2)  ->  x1
  if (!is_and && result.size() >= 2) {
    bool all_cubes = true;
    for (const auto& c : result)
      if (!is_cube(*c)) { all_cubes = false; break; }
    if (all_cubes) {
      std::vector<expr_ptr> common = cube_literals(result.front());
      for (std::size_t i = 1; i < result.size() && !common.empty(); ++i) {
        auto li = cube_literals(result[i]);
        std::vector<expr_ptr> next;
        for (const auto& l : common)
          if (contains_literal(li, *l)) next.push_back(l);
        common = std::move(next);
      }
      if (!common.empty()) {
        std::vector<expr_ptr> residues;
        for (const auto& c : result) {
          std::vector<expr_ptr> rest;
          for (const auto& l : cube_literals(c))
            if (!contains_literal(common, *l)) rest.push_back(l);
          residues.push_back(rebuild_nary(expr_kind::conjunction, std::move(rest)));
        }
        expr_ptr folded = simplify_nary(expr_kind::disjunction, residues);
        std::vector<expr_ptr> factors = common;
        factors.push_back(folded);
        return simplify_nary(expr_kind::conjunction, factors);
      }
    }
  }

  return rebuild_nary(kind, std::move(result));
}

}  // namespace detail

// Light algebraic simplification: constant folding, flattening, idempotence,
// complementary literals, cube absorption and common-factor extraction. Used
// after substitution so that reduced networks stay readable; operand order is
// preserved wherever operands survive.
inline expr_ptr simplify(const expr_ptr& e) {
  switch (e->kind) {
    case expr_kind::constant:
    case expr_kind::variable:
      return e;
    case expr_kind::negation: {
      expr_ptr c = simplify(e->operands[0]);
      if (c->kind == expr_kind::constant) return expr::constant(!c->value);
      if (c->kind == expr_kind::negation) return c->operands[0];
      return c == e->operands[0] ? e : expr::negate(c);
    }
    case expr_kind::conjunction:
      return detail::simplify_nary(expr_kind::conjunction, e->operands);
    case expr_kind::disjunction:
      return detail::simplify_nary(expr_kind::disjunction, e->operands);
  }
  return e;
}

// Rendering with precedence ! > & > |; parentheses only where required.
inline void render(const expr& e, const std::vector<std::string>& names,
                   std::string& out) {
  switch (e.kind) {
    case expr_kind::constant:
      out += e.value ? '1' : '0';
      return;
    case expr_kind::variable:
      out += names[static_cast<std::size_t>(e.var)];
      return;
    case expr_kind::negation: {
      out += '!';
      const expr& c = *e.operands[0];
      if (c.kind == expr_kind::conjunction || c.kind == expr_kind::disjunction) {
        out += '(';
        render(c, names, out);
        out += ')';
      } else {
        render(c, names, out);
      }
      return;
    }
    case expr_kind::conjunction:
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += " & ";
        const expr& c = *e.operands[i];
        if (c.kind == expr_kind::disjunction) {
          out += '(';
          render(c, names, out);
          out += ')';
        } else {
          render(c, names, out);
        }
      }
      return;
    case expr_kind::disjunction:
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += " | ";
        render(*e.operands[i], names, out);
      }
      return;
  }
}

inline std::string to_string(const expr& e, const std::vector<std::string>& names) {
  std::string out;
  render(e, names, out);
  return out;
}

// ---- bit-sliced truth tables -------------------------------------------

using word = std::uint64_t;

inline std::size_t words_for_space(int arity) {
  return arity <= 6 ? 1 : (std::size_t(1) << (arity - 6));
}

inline word last_word_mask(int arity) {
  return arity >= 6 ? ~word(0) : (word(1) << (1 << arity)) - 1;
}

// Word w of the truth table of variable k over a 2^n space: bit x of word w
// equals bit k of the packed state (w * 64 + x).
inline word variable_word(int k, std::size_t word_index) {
  static constexpr word low[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (k < 6) return low[k];
  return (word_index >> (k - 6)) & 1 ? ~word(0) : word(0);
}

namespace detail {

inline void eval_words(const expr& e, std::vector<word>& out) {
  const std::size_t n_words = out.size();
  switch (e.kind) {
    case expr_kind::constant: {
      const word v = e.value ? ~word(0) : word(0);
      for (auto& w : out) w = v;
      return;
    }
    case expr_kind::variable:
      for (std::size_t w = 0; w < n_words; ++w) out[w] = variable_word(e.var, w);
      return;
    case expr_kind::negation:
      eval_words(*e.operands[0], out);
      for (auto& w : out) w = ~w;
      return;
    case expr_kind::conjunction:
    case expr_kind::disjunction: {
      eval_words(*e.operands[0], out);
      std::vector<word> tmp(n_words);
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        eval_words(*e.operands[i], tmp);
        if (e.kind == expr_kind::conjunction)
          for (std::size_t w = 0; w < n_words; ++w) out[w] &= tmp[w];
        else
          for (std::size_t w = 0; w < n_words; ++w) out[w] |= tmp[w];
      }
      return;
    }
  }
}

}  // namespace detail

// Truth table of e over the full 2^arity space, 64 states per word, bit x of
// word w = value at packed state (w * 64 + x). Bits beyond 2^arity are zero.
inline std::vector<word> truth_table_words(const expr& e, int arity) {
  std::vector<word> out(words_for_space(arity));
  detail::eval_words(e, out);
  out.back() &= last_word_mask(arity);
  return out;
}

}  // namespace bnet
