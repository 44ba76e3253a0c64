#pragma once

/*
 * Surface expression syntax for the command line:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := '-' factor | primary ('^' nonneg-integer)?
 *   primary:= rational | 'X' | 'Y' | '(' expr ')'
 *           | 'comm' '(' expr ',' expr ')' | 'box' '(' expr ')'
 *           | 'T' '(' positive-integer ')'
 *
 * box and T use the ambient F supplied by the caller.
 */

#include "freealg/ncpoly.hpp"

#include <memory>
#include <optional>

namespace freealg {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, SymX, SymY, Add, Sub, Mul, Neg, Pow, Comm, Box, TSeq };

  Kind kind;
  Rational number;    // Number
  ExprPtr lhs, rhs;   // binary ops; lhs only for Neg/Pow/Box
  int exponent = 0;   // Pow
  int index = 0;      // TSeq
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

ExprPtr parse_expr(const std::string& src);  // throws ParseError

// minimal-parentheses printer; parse_expr(print_expr(e)) is structurally e
std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct EvalContext {
  std::optional<NCPoly> f;  // ambient F for box / T
};

NCPoly eval_expr(const ExprPtr& e, const EvalContext& ctx);

}  // namespace freealg
