#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnet/interaction.hpp"
#include "bnet/network.hpp"
#include "bnet/subspace.hpp"

namespace bnet {

// Deterministic generator with a splittable stream per sample index: the
// stream for (seed, index) is the same at any worker count, which keeps
// randomized searches reproducible.
class split_rng {
 public:
  explicit split_rng(std::uint64_t stream_seed) : s_(stream_seed) {}

  static split_rng for_sample(std::uint64_t seed, std::uint64_t index) {
    return split_rng(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ull)));
  }

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool coin() { return next() & 1u; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
    z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
    return z ^ (z >> 33);
  }
  std::uint64_t s_;
};

namespace detail {

// Random expression tree of bounded depth over the allowed variables.
inline expr_ptr random_expr(split_rng& rng, const std::vector<int>& allowed, int depth) {
  if (depth == 0 || allowed.empty()) {
    if (allowed.empty() || rng.below(16) == 0)
      return expr::constant(rng.coin());
    return expr::variable(allowed[rng.below(static_cast<std::uint32_t>(allowed.size()))]);
  }
  switch (rng.below(10)) {
    case 0:
    case 1:
      return expr::variable(allowed[rng.below(static_cast<std::uint32_t>(allowed.size()))]);
    case 2:
    case 3:
      return expr::negate(random_expr(rng, allowed, depth - 1));
    case 4:
    case 5:
    case 6:
      return expr::conjunction({random_expr(rng, allowed, depth - 1),
                                random_expr(rng, allowed, depth - 1)});
    default:
      return expr::disjunction({random_expr(rng, allowed, depth - 1),
                                random_expr(rng, allowed, depth - 1)});
  }
}

inline std::vector<std::string> component_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace detail

struct generator_options {
  int max_depth = 4;
  bool eliminable_last = false;  // the last component's rule avoids itself
  bool mediator_last = false;    // the last component is a linear-ish mediator
};

// Draw a random network. With mediator_last the last component is built
// structurally as a mediator: its rule is a literal of one regulator j, and
// the components allowed to read the last variable never read j, so no
// regulator of the last component can regulate one of its targets. With only
// eliminable_last the last rule simply avoids its own variable.
inline boolean_network random_network(split_rng& rng, int n, generator_options opts = {}) {
  std::vector<int> all;
  for (int i = 0; i < n; ++i) all.push_back(i);

  std::vector<expr_ptr> rules(static_cast<std::size_t>(n));
  if (opts.mediator_last && n >= 2) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint32_t>(n - 1)));
    expr_ptr lit = expr::variable(j);
    if (rng.coin()) lit = expr::negate(lit);
    rules[static_cast<std::size_t>(n - 1)] = lit;
    for (int i = 0; i < n - 1; ++i) {
      const bool may_read_last = rng.coin();
      std::vector<int> allowed;
      for (int v : all) {
        if (v == n - 1 && !may_read_last) continue;
        if (v == j && may_read_last) continue;  // targets of the last component avoid j
        allowed.push_back(v);
      }
      rules[static_cast<std::size_t>(i)] = detail::random_expr(rng, allowed, opts.max_depth);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<int> allowed = all;
      if ((opts.eliminable_last || opts.mediator_last) && i == n - 1)
        allowed.pop_back();
      rules[static_cast<std::size_t>(i)] = detail::random_expr(rng, allowed, opts.max_depth);
    }
  }
  return boolean_network(detail::component_names(n), std::move(rules));
}

// Random phenotype fixing one or two components. The last component can be
// forced fixed or free.
enum class phenotype_shape { any, last_fixed, last_free };

inline subspace random_phenotype(split_rng& rng, int n, phenotype_shape shape) {
  subspace p = subspace::full(n);
  int k = n >= 2 ? 1 + static_cast<int>(rng.below(2)) : 1;
  if (shape == phenotype_shape::last_fixed) {
    p = p.with_fixed(n - 1, rng.coin());
    --k;
  }
  const int limit = shape == phenotype_shape::last_free ? n - 1 : n;
  for (int tries = 0; k > 0 && tries < 8; ++tries) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint32_t>(limit)));
    if (p.is_fixed(i)) continue;
    p = p.with_fixed(i, rng.coin());
    --k;
  }
  if (p.fixed_count() == 0 && limit > 0)
    p = p.with_fixed(0, rng.coin());
  return p;
}

}  // namespace bnet
