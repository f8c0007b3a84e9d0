#include "akizuki/local_cohomology.hpp"

#include <algorithm>
#include <string>

#include "akizuki/errors.hpp"

namespace akizuki {

H1Class H1Class::make(const NormalForm& f, std::size_t n) {
  if (n == 0) return zero(f.field());
  if (f.level() < n) {
    throw PrecisionExhausted("numerator at level " + std::to_string(f.level()) + " cannot be divided by t^" +
                             std::to_string(n));
  }
  TruncatedSeries x = f.x().truncate(n);
  TruncatedSeries y = f.y().truncate(n);
  while (x.precision() > 1 && x[0].is_zero() && y[0].is_zero()) {
    x = shift(x, -1);
    y = shift(y, -1);
  }
  return H1Class(NormalForm(std::move(x), std::move(y)));
}

H1Class H1Class::zero(Field field) { return H1Class(NormalForm::zero(field, 1)); }

NormalForm H1Class::numerator_at(std::size_t n) const {
  if (n < exponent()) {
    throw PrecisionExhausted("class over t^" + std::to_string(exponent()) + " cannot be written over t^" +
                             std::to_string(n));
  }
  const std::size_t k = n - exponent();
  return {lift(numerator_.x(), k), lift(numerator_.y(), k)};
}

H1Class H1Class::operator-() const { return H1Class(-numerator_); }

bool h1_is_zero(const NormalForm& numerator) { return numerator.is_zero(); }

bool h1_is_zero(const H1Class& omega) { return h1_is_zero(omega.numerator()); }

bool h1_eq(const H1Class& a, const H1Class& b) {
  if (a.field() != b.field()) return false;
  const std::size_t n = std::max(a.exponent(), b.exponent());
  return a.numerator_at(n) == b.numerator_at(n);
}

H1Class h1_add(const H1Class& a, const H1Class& b) {
  const std::size_t n = std::max(a.exponent(), b.exponent());
  return H1Class::make(a.numerator_at(n) + b.numerator_at(n), n);
}

H1Class h1_act(const AkizukiInstance& inst, const NormalForm& f, const H1Class& omega) {
  const std::size_t n = omega.exponent();
  if (f.level() < n) {
    throw PrecisionExhausted("acting element at level " + std::to_string(f.level()) + " on a class over t^" +
                             std::to_string(n));
  }
  return H1Class::make(nf_mul(inst, f.truncate(n), omega.numerator()), n);
}

}  // namespace akizuki
