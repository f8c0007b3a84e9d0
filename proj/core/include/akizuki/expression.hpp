#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "akizuki/instance.hpp"
#include "akizuki/normal_form.hpp"

namespace akizuki {

// Immutable expression over the atoms t, w = t(z - a_0), g_i = (z_i - a_i)^2 and
// rational constants, closed under + - * and division by units of C_M.
// Nodes are shared, so copies are cheap.
class Expression {
 public:
  enum class Kind { constant, t, w, generator, negate, add, subtract, multiply, divide, power };

  static Expression constant(mpq_class value);
  static Expression constant(long value) { return constant(mpq_class(value)); }
  static Expression t();
  static Expression w();
  static Expression generator(std::size_t index);
  // Negative exponents mean powers of the inverse.
  static Expression power(Expression base, long exponent);

  Kind kind() const noexcept { return node_->kind; }
  const mpq_class& value() const { return node_->value; }
  std::size_t generator_index() const noexcept { return node_->index; }
  long exponent() const noexcept { return node_->exponent; }
  const Expression& lhs() const { return node_->children.at(0); }
  const Expression& rhs() const { return node_->children.at(1); }
  const Expression& operand() const { return node_->children.at(0); }

  std::size_t depth() const;
  // Largest generator index used, or -1 when none.
  long max_generator() const;
  // Parses back to an equal tree (up to redundant parentheses).
  std::string to_string() const;

  friend Expression operator+(Expression a, Expression b);
  friend Expression operator-(Expression a, Expression b);
  friend Expression operator*(Expression a, Expression b);
  friend Expression operator/(Expression a, Expression b);
  friend Expression operator-(Expression a);

 private:
  struct Node {
    Kind kind;
    mpq_class value;
    std::size_t index = 0;
    long exponent = 0;
    std::vector<Expression> children;
  };

  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expression make(Kind kind, std::vector<Expression> children);

  std::shared_ptr<const Node> node_;
};

// Grammar: sum := product (('+'|'-') product)*; product := unary (('*'|'/') unary)*;
// unary := '-' unary | factor; factor := primary ('^' ['-'] integer)?;
// primary := integer | 't' | 'w' | 'g' integer | '(' sum ')'.
// A literal p/q is division of constants. Juxtaposition (2t) means product.
Expression parse_expression(std::string_view text);

// Normal form of e at level m, computed bottom-up. Division requires a unit
// denominator (NotInvertible otherwise); generators need headroom at level m.
NormalForm eval_expression(const AkizukiInstance& inst, const Expression& e, std::size_t m);

}  // namespace akizuki
