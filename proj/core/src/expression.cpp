#include "akizuki/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "akizuki/errors.hpp"

namespace akizuki {

Expression Expression::make(Kind kind, std::vector<Expression> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children = std::move(children);
  return Expression(std::move(node));
}

Expression Expression::constant(mpq_class value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::constant;
  value.canonicalize();
  node->value = std::move(value);
  return Expression(std::move(node));
}

Expression Expression::t() { return make(Kind::t, {}); }

Expression Expression::w() { return make(Kind::w, {}); }

Expression Expression::generator(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::generator;
  node->index = index;
  return Expression(std::move(node));
}

Expression Expression::power(Expression base, long exponent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::power;
  node->exponent = exponent;
  node->children.push_back(std::move(base));
  return Expression(std::move(node));
}

Expression operator+(Expression a, Expression b) {
  return Expression::make(Expression::Kind::add, {std::move(a), std::move(b)});
}
Expression operator-(Expression a, Expression b) {
  return Expression::make(Expression::Kind::subtract, {std::move(a), std::move(b)});
}
Expression operator*(Expression a, Expression b) {
  return Expression::make(Expression::Kind::multiply, {std::move(a), std::move(b)});
}
Expression operator/(Expression a, Expression b) {
  return Expression::make(Expression::Kind::divide, {std::move(a), std::move(b)});
}
Expression operator-(Expression a) { return Expression::make(Expression::Kind::negate, {std::move(a)}); }

std::size_t Expression::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

long Expression::max_generator() const {
  long best = kind() == Kind::generator ? static_cast<long>(generator_index()) : -1;
  for (const auto& c : node_->children) best = std::max(best, c.max_generator());
  return best;
}

std::string Expression::to_string() const {
  switch (kind()) {
    case Kind::constant: {
      const auto text = value().get_str();
      return sgn(value()) < 0 || value().get_den() != 1 ? "(" + text + ")" : text;
    }
    case Kind::t:
      return "t";
    case Kind::w:
      return "w";
    case Kind::generator:
      return "g" + std::to_string(generator_index());
    case Kind::negate:
      return "(-" + operand().to_string() + ")";
    case Kind::add:
      return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::subtract:
      return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
    case Kind::multiply:
      return "(" + lhs().to_string() + "*" + rhs().to_string() + ")";
    case Kind::divide:
      return "(" + lhs().to_string() + "/" + rhs().to_string() + ")";
    case Kind::power:
      return "(" + operand().to_string() + "^" + std::to_string(exponent()) + ")";
  }
  return {};
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  Expression sum() {
    Expression e = product();
    while (true) {
      skip_space();
      if (at_end()) return e;
      if (peek() == '+') {
        next();
        e = e + product();
      } else if (peek() == '-') {
        next();
        e = e - product();
      } else {
        return e;
      }
    }
  }

  Expression product() {
    Expression e = unary();
    while (true) {
      skip_space();
      if (at_end()) return e;
      const char c = peek();
      if (c == '*') {
        next();
        e = e * unary();
      } else if (c == '/') {
        next();
        e = e / unary();
      } else if (c == '(' || c == 't' || c == 'w' || c == 'g' || std::isdigit(static_cast<unsigned char>(c))) {
        e = e * unary();
      } else {
        return e;
      }
    }
  }

  Expression unary() {
    skip_space();
    if (!at_end() && peek() == '-') {
      next();
      return -unary();
    }
    if (!at_end() && peek() == '+') {
      next();
      return unary();
    }
    return factor();
  }

  Expression factor() {
    Expression base = primary();
    skip_space();
    if (!at_end() && peek() == '^') {
      next();
      skip_space();
      bool negative = false;
      if (!at_end() && peek() == '-') {
        next();
        negative = true;
      }
      const long e = integer();
      return Expression::power(std::move(base), negative ? -e : e);
    }
    return base;
  }

  Expression primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      next();
      Expression e = sum();
      skip_space();
      if (at_end() || next() != ')') fail("expected ')'");
      return e;
    }
    if (c == 't') {
      next();
      return Expression::t();
    }
    if (c == 'w') {
      next();
      return Expression::w();
    }
    if (c == 'g') {
      next();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected generator index after 'g'");
      return Expression::generator(static_cast<std::size_t>(integer()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(next());
      return Expression::constant(mpq_class(mpz_class(digits)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  long integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer out of range");
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

NormalForm divide(const AkizukiInstance& inst, const NormalForm& num, const NormalForm& den,
                  const Expression& source) {
  if (!den.is_unit()) {
    throw NotInvertible("not in C_M: denominator " + source.to_string() + " is not a unit of C_M");
  }
  return nf_mul(inst, num, nf_invert(inst, den));
}

}  // namespace

Expression parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

NormalForm eval_expression(const AkizukiInstance& inst, const Expression& e, std::size_t m) {
  if (m > inst.exact_z_precision()) {
    throw PrecisionExhausted("level " + std::to_string(m) + " exceeds instance capacity " +
                             std::to_string(inst.exact_z_precision()));
  }
  const Field field = inst.field();
  switch (e.kind()) {
    case Expression::Kind::constant:
      return NormalForm::from_base(TruncatedSeries::constant(field.from_rational(e.value()), m));
    case Expression::Kind::t:
      return NormalForm::from_base(TruncatedSeries::monomial(field.one(), 1, m));
    case Expression::Kind::w:
      return NormalForm::w(field, m);
    case Expression::Kind::generator:
      return generator_nf(inst, e.generator_index(), m);
    case Expression::Kind::negate:
      return -eval_expression(inst, e.operand(), m);
    case Expression::Kind::add:
      return eval_expression(inst, e.lhs(), m) + eval_expression(inst, e.rhs(), m);
    case Expression::Kind::subtract:
      return eval_expression(inst, e.lhs(), m) - eval_expression(inst, e.rhs(), m);
    case Expression::Kind::multiply:
      return nf_mul(inst, eval_expression(inst, e.lhs(), m), eval_expression(inst, e.rhs(), m));
    case Expression::Kind::divide:
      return divide(inst, eval_expression(inst, e.lhs(), m), eval_expression(inst, e.rhs(), m), e.rhs());
    case Expression::Kind::power: {
      NormalForm base = eval_expression(inst, e.operand(), m);
      if (e.exponent() < 0) {
        if (!base.is_unit()) {
          throw NotInvertible("not in C_M: " + e.operand().to_string() + " is not a unit of C_M");
        }
        base = nf_invert(inst, base);
      }
      return nf_power(inst, std::move(base), static_cast<std::size_t>(e.exponent() < 0 ? -e.exponent() : e.exponent()));
    }
  }
  throw ParseError("unknown expression node");
}

}  // namespace akizuki
