#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnet {

// Requested analysis would exceed an explicit-enumeration cap. Callers can
// retry with a larger limit; the CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class parse_error_kind {
  syntax,
  undeclared_variable,
  duplicate_component,
  subspace_length,
  subspace_character,
};

class parse_error : public std::runtime_error {
 public:
  parse_error(parse_error_kind kind, std::size_t line, std::size_t column,
              const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  parse_error_kind kind() const { return kind_; }
  std::size_t line() const { return line_; }      // 1-based
  std::size_t column() const { return column_; }  // 1-based

 private:
  parse_error_kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Percolation from a seed that is not a trap space may enter a cycle instead
// of stabilizing. The iteration stops at the first repeated subspace and
// reports the anomaly through this exception.
class non_monotone_percolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default arity caps for exhaustive analyses. Enumeration over 2^n states is
// allowed up to max_enumeration_arity; enumeration over 3^n subspaces up to
// max_subspace_arity. Both are overridable per call and via CLI flags.
inline constexpr int default_enumeration_arity = 20;
inline constexpr int default_subspace_arity = 14;

}  // namespace bnet
