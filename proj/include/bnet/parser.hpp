#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnet/errors.hpp"
#include "bnet/expr.hpp"
#include "bnet/network.hpp"
#include "bnet/subspace.hpp"

namespace bnet {

// Line-oriented network format, one declaration per line:
//
//   name, expression      # comment
//
// Operators: ! (not), & (and), | (or), parentheses, constants 0/1.
// Precedence ! > & > |. Identifiers are [A-Za-z_][A-Za-z0-9_]*. Component
// order is declaration order. An optional BoolNet-style "targets, factors"
// header line is skipped so that third-party models load unmodified.

namespace detail {

struct decl_line {
  std::string name;
  std::string body;            // expression text
  std::size_t line_no;         // 1-based
  std::size_t body_column;     // 1-based column where body starts
};

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<decl_line> split_declarations(std::string_view text) {
  std::vector<decl_line> decls;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool first_decl = true;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t b = 0, e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    if (b < e) {
      std::size_t comma = line.find(',', b);
      if (comma == std::string_view::npos || comma >= e)
        throw parse_error(parse_error_kind::syntax, line_no, e,
                          "expected 'name, expression'");
      std::size_t name_end = comma;
      while (name_end > b && std::isspace(static_cast<unsigned char>(line[name_end - 1]))) --name_end;
      std::string name(line.substr(b, name_end - b));
      if (name.empty() || !is_ident_start(name[0]))
        throw parse_error(parse_error_kind::syntax, line_no, b + 1,
                          "component name must start with a letter or underscore");
      for (char c : name)
        if (!is_ident_char(c))
          throw parse_error(parse_error_kind::syntax, line_no, b + 1,
                            "component name contains an illegal character");
      std::size_t body_begin = comma + 1;
      while (body_begin < e && std::isspace(static_cast<unsigned char>(line[body_begin]))) ++body_begin;
      std::string body(line.substr(body_begin, e - body_begin));
      if (body.empty())
        throw parse_error(parse_error_kind::syntax, line_no, comma + 2,
                          "missing expression after ','");
      if (first_decl) {
        first_decl = false;
        std::string lowered = name;
        for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        std::string lowered_body = body;
        for (char& c : lowered_body) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lowered == "targets" && lowered_body == "factors") {
          if (eol == std::string_view::npos) break;
          pos = eol + 1;
          continue;  // header line
        }
      }
      decls.push_back({std::move(name), std::move(body), line_no, body_begin + 1});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return decls;
}

class expr_parser {
 public:
  expr_parser(const decl_line& decl, const std::unordered_map<std::string, int>& index)
      : decl_(decl), index_(index) {}

  expr_ptr parse() {
    expr_ptr e = parse_or();
    skip_ws();
    if (pos_ < decl_.body.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(parse_error_kind::syntax, decl_.line_no, column(), message);
  }
  std::size_t column() const { return decl_.body_column + pos_; }

  void skip_ws() {
    while (pos_ < decl_.body.size() && std::isspace(static_cast<unsigned char>(decl_.body[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < decl_.body.size() && decl_.body[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  expr_ptr parse_or() {
    std::vector<expr_ptr> ops{parse_and()};
    while (eat('|')) ops.push_back(parse_and());
    return expr::disjunction(std::move(ops));
  }

  expr_ptr parse_and() {
    std::vector<expr_ptr> ops{parse_unary()};
    while (eat('&')) ops.push_back(parse_unary());
    return expr::conjunction(std::move(ops));
  }

  expr_ptr parse_unary() {
    if (eat('!')) return expr::negate(parse_unary());
    return parse_atom();
  }

  expr_ptr parse_atom() {
    skip_ws();
    if (pos_ >= decl_.body.size()) fail("expected expression");
    char c = decl_.body[pos_];
    if (c == '(') {
      ++pos_;
      expr_ptr e = parse_or();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return expr::constant(c == '1');
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < decl_.body.size() && is_ident_char(decl_.body[pos_])) ++pos_;
      std::string id = decl_.body.substr(start, pos_ - start);
      auto it = index_.find(id);
      if (it == index_.end())
        throw parse_error(parse_error_kind::undeclared_variable, decl_.line_no,
                          decl_.body_column + start, "undeclared variable '" + id + "'");
      return expr::variable(it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const decl_line& decl_;
  const std::unordered_map<std::string, int>& index_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline boolean_network parse_network(std::string_view text) {
  auto decls = detail::split_declarations(text);
  if (decls.empty())
    throw parse_error(parse_error_kind::syntax, 1, 1, "no component declarations found");
  std::unordered_map<std::string, int> index;
  std::vector<std::string> names;
  names.reserve(decls.size());
  for (const auto& d : decls) {
    if (index.count(d.name))
      throw parse_error(parse_error_kind::duplicate_component, d.line_no, 1,
                        "duplicate component name '" + d.name + "'");
    index.emplace(d.name, static_cast<int>(names.size()));
    names.push_back(d.name);
  }
  std::vector<expr_ptr> rules;
  rules.reserve(decls.size());
  for (const auto& d : decls) rules.push_back(detail::expr_parser(d, index).parse());
  return boolean_network(std::move(names), std::move(rules));
}

// Canonical text form; expressions render as stored (no reordering, no
// simplification). Round-trips through parse_network.
inline std::string serialize_network(const boolean_network& net) {
  std::string out;
  for (int i = 0; i < net.arity(); ++i) {
    out += net.name(i);
    out += ", ";
    render(*net.rule(i), net.names(), out);
    out += '\n';
  }
  return out;
}

inline subspace parse_subspace(std::string_view text, const boolean_network& net) {
  if (static_cast<int>(text.size()) != net.arity())
    throw parse_error(parse_error_kind::subspace_length, 1, 1,
                      "subspace literal has length " + std::to_string(text.size()) +
                          " but the network has " + std::to_string(net.arity()) +
                          " components");
  return subspace_from_string(text);
}

}  // namespace bnet
