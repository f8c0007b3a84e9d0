#pragma once

// Brute-force reference arithmetic for the tests. Deliberately independent of
// TruncatedSeries and of the normal-form machinery: plain coefficient vectors,
// schoolbook products, and z / w / s_r rebuilt straight from the exponent and
// unit lists.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "akizuki/expression.hpp"
#include "akizuki/field.hpp"
#include "akizuki/instance.hpp"
#include "akizuki/series.hpp"

namespace oracle {

using akizuki::Field;
using akizuki::FieldElement;

struct Poly {
  Field field;
  std::vector<FieldElement> c;  // c.size() is the precision

  Poly(Field f, std::size_t precision) : field(f), c(precision, f.zero()) {}

  static Poly from(const akizuki::TruncatedSeries& s) {
    Poly p(s.field(), s.precision());
    for (std::size_t i = 0; i < s.precision(); ++i) p.c[i] = s[i];
    return p;
  }
  akizuki::TruncatedSeries to_series() const { return akizuki::TruncatedSeries(field, c); }

  std::size_t precision() const { return c.size(); }
};

inline Poly monomial(Field f, long coeff, std::size_t exp, std::size_t precision) {
  Poly p(f, precision);
  if (exp < precision) p.c[exp] = f.from_int(coeff);
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(a.field, a.precision());
  for (std::size_t i = 0; i < a.precision(); ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly out(a.field, a.precision());
  for (std::size_t i = 0; i < a.precision(); ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.field, a.precision());
  for (std::size_t k = 0; k < a.precision(); ++k) {
    FieldElement acc = a.field.zero();
    for (std::size_t i = 0; i <= k; ++i) acc += a.c[i] * b.c[k - i];
    out.c[k] = acc;
  }
  return out;
}

// Solves a * b = 1 coefficient by coefficient.
inline Poly inverse(const Poly& a) {
  if (a.c[0].is_zero()) throw std::domain_error("oracle: non-unit");
  Poly b(a.field, a.precision());
  const FieldElement inv0 = a.field.one() / a.c[0];
  for (std::size_t k = 0; k < a.precision(); ++k) {
    FieldElement rhs = k == 0 ? a.field.one() : a.field.zero();
    for (std::size_t i = 1; i <= k; ++i) rhs -= a.c[i] * b.c[k - i];
    b.c[k] = rhs * inv0;
  }
  return b;
}

// sum_{j > i} a_j t^{n_j - n_i} = z_i - a_i, from the raw exponent and unit lists.
inline Poly z_tail(const akizuki::AkizukiInstance& inst, std::size_t i, std::size_t precision) {
  const auto exps = inst.exponents();
  const auto units = inst.units();
  if (precision + exps[i] > 2 * exps.back() + 2) throw std::domain_error("oracle: z not determined");
  Poly p(inst.field(), precision);
  for (std::size_t j = i + 1; j < exps.size(); ++j) {
    const std::size_t e = exps[j] - exps[i];
    if (e < precision) p.c[e] = units[j];
  }
  return p;
}

// z modulo t^precision.
inline Poly z(const akizuki::AkizukiInstance& inst, std::size_t precision) {
  Poly p = z_tail(inst, 0, precision);
  p.c[0] = inst.units()[0];
  return p;
}

// w = t (z - a_0).
inline Poly w(const akizuki::AkizukiInstance& inst, std::size_t precision) {
  Poly tail = z_tail(inst, 0, precision);
  Poly out(inst.field(), precision);
  for (std::size_t i = 1; i < precision; ++i) out.c[i] = tail.c[i - 1];
  return out;
}

// Evaluates an expression directly in A^ modulo t^m; g_i = (z_i - a_i)^2.
inline Poly eval(const akizuki::AkizukiInstance& inst, const akizuki::Expression& e, std::size_t m) {
  using Kind = akizuki::Expression::Kind;
  const Field f = inst.field();
  switch (e.kind()) {
    case Kind::constant: {
      Poly p(f, m);
      p.c[0] = f.from_rational(e.value());
      return p;
    }
    case Kind::t:
      return monomial(f, 1, 1, m);
    case Kind::w:
      return w(inst, m);
    case Kind::generator: {
      const Poly zi = z_tail(inst, e.generator_index(), m);
      return mul(zi, zi);
    }
    case Kind::negate:
      return sub(Poly(f, m), eval(inst, e.operand(), m));
    case Kind::add:
      return add(eval(inst, e.lhs(), m), eval(inst, e.rhs(), m));
    case Kind::subtract:
      return sub(eval(inst, e.lhs(), m), eval(inst, e.rhs(), m));
    case Kind::multiply:
      return mul(eval(inst, e.lhs(), m), eval(inst, e.rhs(), m));
    case Kind::divide:
      return mul(eval(inst, e.lhs(), m), inverse(eval(inst, e.rhs(), m)));
    case Kind::power: {
      Poly base = eval(inst, e.operand(), m);
      if (e.exponent() < 0) base = inverse(base);
      Poly out = monomial(f, 1, 0, m);
      const long k = e.exponent() < 0 ? -e.exponent() : e.exponent();
      for (long i = 0; i < k; ++i) out = mul(out, base);
      return out;
    }
  }
  throw std::logic_error("oracle: unknown node");
}

}  // namespace oracle
