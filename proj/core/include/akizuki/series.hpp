#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "akizuki/field.hpp"

namespace akizuki {

/// An element of k[[t]] known modulo t^N, with N = precision().
///
/// Precision is part of the value: two series are equal only when their
/// precisions agree, and arithmetic on operands of different precision throws
/// PrecisionMismatch. truncate() is the only way to lower precision; extend()
/// raises it by zero padding and is reserved for callers that know the padded
/// coefficients are exact (e.g. finite polynomials).
class TruncatedSeries {
 public:
  // The zero series. Precision must be positive.
  TruncatedSeries(Field field, std::size_t precision);
  // Precision is coeffs.size(); all coefficients must live in `field`.
  TruncatedSeries(Field field, std::vector<FieldElement> coeffs);

  static TruncatedSeries constant(const FieldElement& c, std::size_t precision);
  static TruncatedSeries one(Field field, std::size_t precision);
  // c * t^exponent, or zero when exponent >= precision.
  static TruncatedSeries monomial(const FieldElement& c, std::size_t exponent, std::size_t precision);

  Field field() const noexcept { return field_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }
  const FieldElement& operator[](std::size_t i) const { return coeffs_[i]; }
  // Bounds-checked; throws PrecisionExhausted for i >= precision.
  const FieldElement& coefficient(std::size_t i) const;

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return !coeffs_.front().is_zero(); }
  // Least i with a nonzero coefficient, nullopt for the zero series.
  std::optional<std::size_t> valuation() const noexcept;

  // Reduction modulo t^n, n <= precision().
  TruncatedSeries truncate(std::size_t n) const;
  // Zero padding up to precision n >= precision().
  TruncatedSeries extend(std::size_t n) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const FieldElement& c);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const FieldElement& c) { return a *= c; }
  friend TruncatedSeries operator*(const FieldElement& c, TruncatedSeries a) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void check_compatible(const TruncatedSeries& other) const;

  Field field_;
  std::vector<FieldElement> coeffs_;
};

// Multiplicative inverse modulo t^N; throws NotInvertible when the constant term is zero.
TruncatedSeries invert(const TruncatedSeries& a);

// Multiplication by t^k. For k >= 0 the precision is kept (top terms fall off).
// For k < 0 the first |k| coefficients must vanish (else DivisibilityError) and
// the result has precision N - |k|; PrecisionExhausted if nothing would remain.
TruncatedSeries shift(const TruncatedSeries& a, long k);

// t^k * a at precision N + k. Exact: a mod t^N determines t^k a mod t^(N+k).
TruncatedSeries lift(const TruncatedSeries& a, std::size_t k);

// a^e by repeated squaring.
TruncatedSeries power(TruncatedSeries a, std::size_t e);

}  // namespace akizuki
