#pragma once

#include <cstddef>

#include "akizuki/instance.hpp"
#include "akizuki/series.hpp"

namespace akizuki {

// The class of X + Y w modulo t^m C_M, where w = t(z - a_0) and m = level().
// Every element of C_M has such a representative, and (X mod t^m, Y mod t^m)
// is determined by the class, so the pair is a complete invariant.
class NormalForm {
 public:
  // x and y must share field and precision; that precision is the level.
  NormalForm(TruncatedSeries x, TruncatedSeries y);

  static NormalForm zero(Field field, std::size_t level);
  static NormalForm one(Field field, std::size_t level);
  static NormalForm w(Field field, std::size_t level);
  // An element of A, i.e. (a, 0).
  static NormalForm from_base(TruncatedSeries a);

  const TruncatedSeries& x() const noexcept { return x_; }
  const TruncatedSeries& y() const noexcept { return y_; }
  std::size_t level() const noexcept { return x_.precision(); }
  Field field() const noexcept { return x_.field(); }

  bool is_zero() const noexcept { return x_.is_zero() && y_.is_zero(); }
  // Units of the local ring C_M are exactly the classes with X a unit of A.
  bool is_unit() const noexcept { return x_.is_unit(); }

  NormalForm truncate(std::size_t m) const;

  NormalForm& operator+=(const NormalForm& rhs);
  NormalForm& operator-=(const NormalForm& rhs);
  NormalForm operator-() const;
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  // A-scaling (a X, a Y).
  friend NormalForm operator*(const TruncatedSeries& a, const NormalForm& f);
  friend bool operator==(const NormalForm& a, const NormalForm& b) = default;

 private:
  TruncatedSeries x_;
  TruncatedSeries y_;
};

// Product in C_M at level m using w^2 = 2 t s_r w - t^2 s_r^2 + t^{2n_r+2}(z_r - a_r)^2,
// whose last term lies in t^m C_M once 2 n_r + 2 >= m.
NormalForm nf_mul(const AkizukiInstance& inst, const NormalForm& f, const NormalForm& g);
// Same with an explicit reduction index; any r in [reduction_index(m), R] gives the same pair.
NormalForm nf_mul(const AkizukiInstance& inst, const NormalForm& f, const NormalForm& g, std::size_t r);

// Inverse in the local ring: P = (X + 2Y t s_r) / D, Q = -Y / D, D = (X + Y t s_r)^2.
// Throws NotInvertible when X is not a unit (the element lies in M).
NormalForm nf_invert(const AkizukiInstance& inst, const NormalForm& f);
NormalForm nf_invert(const AkizukiInstance& inst, const NormalForm& f, std::size_t r);

NormalForm nf_power(const AkizukiInstance& inst, NormalForm f, std::size_t e);

// Normal form of g_i = (z_i - a_i)^2 = (w - t s_i)^2 / t^{2n_i+2} at level m.
// Requires i < R and m <= 2 (n_R - n_i); throws PrecisionExhausted otherwise.
NormalForm generator_nf(const AkizukiInstance& inst, std::size_t i, std::size_t m);

// The inclusion C_M -> A^: X + Y w modulo t^level.
TruncatedSeries nf_embed(const AkizukiInstance& inst, const NormalForm& f);

}  // namespace akizuki
