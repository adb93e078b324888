#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "postlat/error.hpp"
#include "postlat/truth_table.hpp"

namespace postlat {

class parse_error : public input_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : input_error(message + " at position " + std::to_string(position)), position_(position) {}
  /// 1-based character position of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expr {
  enum class Kind { Var, Const, Not, And, Or, Xor, Implies, Maj, Minr, Tmin };

  Kind kind = Kind::Const;
  /// Variable index (1-based) for Var, 0 or 1 for Const.
  int value = 0;
  std::vector<Expr> args;

  static Expr var(int i) { return {Kind::Var, i, {}}; }
  static Expr constant(bool v) { return {Kind::Const, v ? 1 : 0, {}}; }
  static Expr unary(Kind k, Expr a) { return {k, 0, {std::move(a)}}; }
  static Expr binary(Kind k, Expr a, Expr b) { return {k, 0, {std::move(a), std::move(b)}}; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Grammar, loosest first: `->` (right assoc), `+`, `|`, `&` (left assoc),
/// prefix `!`, then atoms x<i>, 0, 1, maj/minr/tmin(e,e,e) and parentheses.
/// ¬ ∧ ∨ → are accepted as aliases.
Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);
int max_variable(const Expr& e);
TruthTable to_table(const Expr& e, std::optional<int> arity = std::nullopt);

}  // namespace postlat
