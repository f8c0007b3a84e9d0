#pragma once

#include <cstddef>

#include "akizuki/instance.hpp"
#include "akizuki/normal_form.hpp"

namespace akizuki {

/// A generalized fraction [(X + Y w) / t^n] in H^1_M(C_M).
///
/// The class of X + Y w over t^n depends only on (X, Y) modulo t^n, and
/// [f / t^n] = [t f / t^{n+1}]. Values are kept canonical: the exponent is
/// minimal, i.e. X and Y are not both divisible by t unless n = 1. The zero
/// class is exponent 1 with numerator (0, 0). With that, structural equality
/// coincides with equality of classes.
class H1Class {
 public:
  // The class of f / t^n; requires f.level() >= n. n = 0 gives the zero class.
  static H1Class make(const NormalForm& f, std::size_t n);
  static H1Class zero(Field field);

  const NormalForm& numerator() const noexcept { return numerator_; }
  std::size_t exponent() const noexcept { return numerator_.level(); }
  Field field() const noexcept { return numerator_.field(); }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  // A (non-canonical) numerator representing this class over t^n, n >= exponent().
  NormalForm numerator_at(std::size_t n) const;

  H1Class operator-() const;
  friend bool operator==(const H1Class& a, const H1Class& b) = default;

 private:
  explicit H1Class(NormalForm numerator) : numerator_(std::move(numerator)) {}

  NormalForm numerator_;
};

// Vanishing test: X and Y both in t^n A. Valid for canonical or raw data.
bool h1_is_zero(const NormalForm& numerator);
bool h1_is_zero(const H1Class& omega);

// Equality by raising both sides to the larger exponent; does not rely on canonical form.
bool h1_eq(const H1Class& a, const H1Class& b);

H1Class h1_add(const H1Class& a, const H1Class& b);
inline H1Class operator+(const H1Class& a, const H1Class& b) { return h1_add(a, b); }

// f * omega; requires f.level() >= omega.exponent().
H1Class h1_act(const AkizukiInstance& inst, const NormalForm& f, const H1Class& omega);

}  // namespace akizuki
