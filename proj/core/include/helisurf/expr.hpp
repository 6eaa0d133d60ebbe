#pragma once

// Profile-function expressions in one variable `u`.
//
// Grammar (whitespace ignored):
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)?
//   exponent := '-'? number | '(' exponent ')'
//   primary  := number | 'u' | func '(' expr ')' | '(' expr ')'
//   func     := sin | cos | tan | exp | log | sqrt | sinh | cosh | asinh | acosh
//
// so '^' binds tighter than unary minus, which binds tighter than '*' '/'.
// Exponents are constants; "-u^2" means -(u^2).

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "helisurf/jet.hpp"

namespace helisurf {

enum class Function { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Asinh, Acosh };

std::string_view function_name(Function f) noexcept;
std::optional<Function> function_from_name(std::string_view name) noexcept;

class Expression {
 public:
  enum class Kind { Variable, Number, Add, Sub, Mul, Div, Neg, Pow, Call };

  static Expression variable();
  /// Throws DomainError for non-finite values.
  static Expression number(double value);
  static Expression add(Expression lhs, Expression rhs);
  static Expression sub(Expression lhs, Expression rhs);
  static Expression mul(Expression lhs, Expression rhs);
  static Expression div(Expression lhs, Expression rhs);
  /// Negating a literal folds into a negative literal.
  static Expression negate(Expression operand);
  static Expression power(Expression base, double exponent);
  static Expression call(Function f, Expression argument);

  Kind kind() const noexcept;
  double number_value() const;    // Number
  double exponent() const;        // Pow
  Function function() const;      // Call
  const Expression& lhs() const;  // binary ops; base of Pow; operand of Neg/Call
  const Expression& rhs() const;  // binary ops

  /// Value and first two derivatives with respect to u.
  Jet2 eval_jet(double u) const;
  double eval(double u) const { return eval_jet(u).value; }

  /// Canonical text that parses back to a structurally identical tree.
  std::string to_string() const;

  /// Structural equality (same tree, bitwise-equal literals).
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws ParseError (with byte offset and expected-token set) on malformed
/// or empty input and on unknown identifiers.
Expression parse(std::string_view text);

inline Jet2 eval_jet(const Expression& e, double u) { return e.eval_jet(u); }
inline std::string print(const Expression& e) { return e.to_string(); }

}  // namespace helisurf
