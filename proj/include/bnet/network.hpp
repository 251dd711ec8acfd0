#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/expr.hpp"
#include "bnet/state.hpp"

namespace bnet {

// Per-component truth tables over the whole state space, bit-sliced 64 states
// per word. Only built for arity <= truth_table_arity_cap.
inline constexpr int truth_table_arity_cap = 24;

struct truth_tables {
  int arity = 0;
  std::vector<std::vector<word>> fn;  // fn[component][word]

  bool value(int component, std::uint32_t packed) const {
    return (fn[static_cast<std::size_t>(component)][packed >> 6] >> (packed & 63)) & 1;
  }
};

// A Boolean network: n named components, one update rule per component.
// Immutable value type; copies share the underlying data. Rule truth tables
// are derived on first use and memoized (arity <= 24).
class boolean_network {
 public:
  boolean_network(std::vector<std::string> names, std::vector<expr_ptr> rules)
      : d_(std::make_shared<data>()) {
    if (names.empty() || names.size() != rules.size())
      throw std::invalid_argument("network needs one rule per component, at least one component");
    if (names.size() > 31) throw std::invalid_argument("at most 31 components supported");
    d_->names = std::move(names);
    d_->rules = std::move(rules);
    for (std::size_t i = 0; i < d_->names.size(); ++i) {
      if (d_->index.count(d_->names[i]))
        throw std::invalid_argument("duplicate component name '" + d_->names[i] + "'");
      d_->index.emplace(d_->names[i], static_cast<int>(i));
    }
    const int n = arity();
    for (const auto& r : d_->rules)
      if (max_variable(*r) >= n)
        throw std::invalid_argument("rule references a variable beyond the network arity");
  }

  int arity() const { return static_cast<int>(d_->names.size()); }
  const std::vector<std::string>& names() const { return d_->names; }
  const std::string& name(int i) const { return d_->names[static_cast<std::size_t>(i)]; }
  const expr_ptr& rule(int i) const { return d_->rules[static_cast<std::size_t>(i)]; }
  const std::vector<expr_ptr>& rules() const { return d_->rules; }

  std::optional<int> index_of(std::string_view component) const {
    auto it = d_->index.find(std::string(component));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t evaluate_packed(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (int i = 0; i < arity(); ++i)
      if (bnet::evaluate(*rule(i), x)) y |= std::uint32_t(1) << i;
    return y;
  }

  state evaluate(const state& x) const {
    if (x.arity != arity())
      throw std::invalid_argument("state arity does not match network arity");
    return state{evaluate_packed(x.bits), arity()};
  }

  const truth_tables& tables() const {
    std::lock_guard<std::mutex> lock(d_->tt_mutex);
    if (!d_->tt) {
      if (arity() > truth_table_arity_cap)
        throw capacity_error("truth tables are limited to " +
                             std::to_string(truth_table_arity_cap) + " components (network has " +
                             std::to_string(arity()) + ")");
      auto tt = std::make_shared<truth_tables>();
      tt->arity = arity();
      tt->fn.reserve(static_cast<std::size_t>(arity()));
      for (int i = 0; i < arity(); ++i)
        tt->fn.push_back(truth_table_words(*rule(i), arity()));
      d_->tt = std::move(tt);
    }
    return *d_->tt;
  }

  friend bool operator==(const boolean_network& a, const boolean_network& b) {
    if (a.d_ == b.d_) return true;
    if (a.names() != b.names()) return false;
    for (int i = 0; i < a.arity(); ++i)
      if (!expr_equal(*a.rule(i), *b.rule(i))) return false;
    return true;
  }

 private:
  struct data {
    std::vector<std::string> names;
    std::vector<expr_ptr> rules;
    std::unordered_map<std::string, int> index;
    mutable std::mutex tt_mutex;
    mutable std::shared_ptr<const truth_tables> tt;
  };
  std::shared_ptr<data> d_;
};

// Pointwise semantic equality, exhaustive over the state space.
inline bool semantically_equal(const boolean_network& a, const boolean_network& b) {
  if (a.arity() != b.arity()) return false;
  for (std::uint32_t x = 0; x < space_size(a.arity()); ++x)
    if (a.evaluate_packed(x) != b.evaluate_packed(x)) return false;
  return true;
}

}  // namespace bnet
