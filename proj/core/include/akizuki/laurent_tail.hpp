#pragma once

#include <cstddef>
#include <vector>

#include "akizuki/field.hpp"
#include "akizuki/series.hpp"

namespace akizuki {

// A principal part d_1 t^-1 + ... + d_n t^-n, the model of K/A (and of the
// completed quotient, which is canonically the same group). Stored trimmed so
// that d_depth != 0; the zero class has depth 0.
class LaurentTail {
 public:
  explicit LaurentTail(Field field);
  // terms[j - 1] is the coefficient of t^-j.
  LaurentTail(Field field, std::vector<FieldElement> terms);

  Field field() const noexcept { return field_; }
  std::size_t depth() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Coefficient of t^-j (j >= 1); zero beyond the depth.
  FieldElement coefficient(std::size_t j) const;

  // A numerator f at precision n with from_fraction(f, n) == *this.
  // Throws PrecisionExhausted when depth() > n.
  TruncatedSeries numerator(std::size_t n) const;

  LaurentTail& operator+=(const LaurentTail& rhs);
  LaurentTail& operator-=(const LaurentTail& rhs);
  LaurentTail operator-() const;
  friend LaurentTail operator+(LaurentTail a, const LaurentTail& b) { return a += b; }
  friend LaurentTail operator-(LaurentTail a, const LaurentTail& b) { return a -= b; }
  friend bool operator==(const LaurentTail& a, const LaurentTail& b);

 private:
  void trim();

  Field field_;
  std::vector<FieldElement> terms_;
};

// The class of f / t^n in K/A. Requires n <= f.precision() (else PrecisionExhausted).
LaurentTail tail_from_fraction(const TruncatedSeries& f, std::size_t n);

// c * tail, dropping non-negative powers of t. Requires c.precision() >= tail.depth().
LaurentTail tail_scale(const TruncatedSeries& c, const LaurentTail& tail);

}  // namespace akizuki
