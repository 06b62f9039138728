#pragma once

// Expression language for user-supplied series f(t).
//
//   expr     := term (("+" | "-") term)*
//   term     := unary (("*" | "/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" exponent)?
//   atom     := integer | "t" | "lambda" | "(" expr ")" | ident "(" expr ")"
//   exponent := integer | "(" ["-"] integer ["/" integer] ")"
//
// ident is one of exp, log, sqrt. A rational literal such as 1/2 is read as
// the division of two integers.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dseries/fps.hpp"
#include "dseries/presets.hpp"

namespace dseries {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { Number, T, Lambda, Neg, Add, Sub, Mul, Div, Pow, Call };

  Op op;
  Rat value;            // Number literal, or Pow exponent
  std::string fn;       // Call name
  std::vector<ExprPtr> args;

  bool has_lambda() const;
  std::size_t depth() const;
};

bool operator==(const Expr& a, const Expr& b);

// Throws SyntaxError, UnknownFunction.
ExprPtr parse_expr(std::string_view src);

// Canonical text; parse_expr(pretty(e)) reproduces e for parsed trees.
std::string pretty(const Expr& e);

// Evaluates e to a series of the requested order. Quotients cancel the
// largest common power of t first; the working order grows to absorb it.
// Throws NonUnitConstantTerm, BadConstantTerm, NoExactRoot, LambdaModeRequired,
// InsufficientOrder.
Series eval_expr(const Expr& e, std::size_t order, const LambdaMode& mode);

// Throws NotDelta.
DeltaSeries require_delta(const Series& s);

}  // namespace dseries
