#pragma once

#include <genfourier/errors.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genfourier::funcmodel {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over one real variable `u`.
///
/// Grammar of the text form (used by the catalog file format):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := primary ('^' factor)?          (right associative)
///   primary:= number | 'u' | name '(' expr ')' | '(' expr ')'
///   name   := sin | cos | exp | floor | abs
/// Numbers are C-locale doubles (decimal or scientific notation).
class Expr {
public:
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Floor, Abs };

  static ExprPtr number(double v);
  static ExprPtr variable();
  static ExprPtr unary(Kind k, ExprPtr a);
  static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);

  Kind kind() const { return kind_; }
  double number_value() const { return value_; }
  const ExprPtr& child() const { return a_; }  // unary operand
  const ExprPtr& lhs() const { return a_; }
  const ExprPtr& rhs() const { return b_; }

  double operator()(double u) const { return eval(u); }
  double eval(double u) const;

  /// True when the tree contains no occurrence of the variable.
  bool is_constant() const;

  /// Canonical text form; parse_expression(to_string()) reproduces the tree.
  std::string to_string() const;

private:
  Expr(Kind k, double v, ExprPtr a, ExprPtr b)
      : kind_(k), value_(v), a_(std::move(a)), b_(std::move(b)) {}

  Kind kind_;
  double value_ = 0.0;
  ExprPtr a_;
  ExprPtr b_;
};

/// Parses the catalog expression grammar.  Throws ParseError on bad input.
ExprPtr parse_expression(std::string_view text);

/// Attempts to read the tree as a polynomial in u; returns ascending
/// coefficients [c0, c1, ...] on success.  Division is only accepted by a
/// constant, '^' only with a non-negative integer exponent.  Degrees above
/// `max_degree` are rejected.
std::optional<std::vector<double>> as_polynomial(const ExprPtr& e, int max_degree = 16);

// Convenience builders for programmatic expressions.
ExprPtr operator+(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a, ExprPtr b);
ExprPtr operator*(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a);

}  // namespace genfourier::funcmodel
