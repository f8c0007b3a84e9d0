#include "akizuki/normal_form.hpp"

#include <string>

#include "akizuki/errors.hpp"

namespace akizuki {

namespace {

void check_level(const AkizukiInstance& inst, std::size_t m) {
  if (m > inst.precision()) {
    throw PrecisionExhausted("level " + std::to_string(m) + " exceeds working precision " +
                             std::to_string(inst.precision()));
  }
}

void check_reduction_index(const AkizukiInstance& inst, std::size_t m, std::size_t r) {
  if (r > inst.max_index() || r < inst.reduction_index(m)) {
    throw PrecisionExhausted("reduction index " + std::to_string(r) + " not admissible at level " +
                             std::to_string(m));
  }
}

}  // namespace

NormalForm::NormalForm(TruncatedSeries x, TruncatedSeries y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.field() != y_.field()) throw FieldMismatch("normal form components over different fields");
  if (x_.precision() != y_.precision()) {
    throw PrecisionMismatch("normal form components at precisions " + std::to_string(x_.precision()) + " and " +
                            std::to_string(y_.precision()));
  }
}

NormalForm NormalForm::zero(Field field, std::size_t level) {
  return {TruncatedSeries(field, level), TruncatedSeries(field, level)};
}

NormalForm NormalForm::one(Field field, std::size_t level) {
  return {TruncatedSeries::one(field, level), TruncatedSeries(field, level)};
}

NormalForm NormalForm::w(Field field, std::size_t level) {
  return {TruncatedSeries(field, level), TruncatedSeries::one(field, level)};
}

NormalForm NormalForm::from_base(TruncatedSeries a) {
  TruncatedSeries zero(a.field(), a.precision());
  return {std::move(a), std::move(zero)};
}

NormalForm NormalForm::truncate(std::size_t m) const { return {x_.truncate(m), y_.truncate(m)}; }

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
  x_ += rhs.x_;
  y_ += rhs.y_;
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& rhs) {
  x_ -= rhs.x_;
  y_ -= rhs.y_;
  return *this;
}

NormalForm NormalForm::operator-() const { return {-x_, -y_}; }

NormalForm operator*(const TruncatedSeries& a, const NormalForm& f) { return {a * f.x_, a * f.y_}; }

NormalForm nf_mul(const AkizukiInstance& inst, const NormalForm& f, const NormalForm& g) {
  if (f.level() != g.level()) {
    throw PrecisionMismatch("normal forms at levels " + std::to_string(f.level()) + " and " +
                            std::to_string(g.level()));
  }
  check_level(inst, f.level());
  return nf_mul(inst, f, g, inst.reduction_index(f.level()));
}

NormalForm nf_mul(const AkizukiInstance& inst, const NormalForm& f, const NormalForm& g, std::size_t r) {
  const std::size_t m = f.level();
  if (g.level() != m) {
    throw PrecisionMismatch("normal forms at levels " + std::to_string(m) + " and " + std::to_string(g.level()));
  }
  check_level(inst, m);
  check_reduction_index(inst, m, r);

  const TruncatedSeries ts = inst.t_partial_sum(r, m);
  const TruncatedSeries yy = f.y() * g.y();
  TruncatedSeries x = f.x() * g.x() - yy * (ts * ts);
  TruncatedSeries y = f.x() * g.y() + g.x() * f.y() + (inst.field().from_int(2) * yy) * ts;
  return {std::move(x), std::move(y)};
}

NormalForm nf_invert(const AkizukiInstance& inst, const NormalForm& f) {
  check_level(inst, f.level());
  return nf_invert(inst, f, inst.reduction_index(f.level()));
}

NormalForm nf_invert(const AkizukiInstance& inst, const NormalForm& f, std::size_t r) {
  const std::size_t m = f.level();
  check_level(inst, m);
  check_reduction_index(inst, m, r);
  if (!f.is_unit()) throw NotInvertible("element lies in the maximal ideal of C_M (X has no constant term)");

  const TruncatedSeries ts = inst.t_partial_sum(r, m);
  const TruncatedSeries d_inv = invert(power(f.x() + f.y() * ts, 2));
  TruncatedSeries p = (f.x() + inst.field().from_int(2) * (f.y() * ts)) * d_inv;
  TruncatedSeries q = -(f.y() * d_inv);
  return {std::move(p), std::move(q)};
}

NormalForm nf_power(const AkizukiInstance& inst, NormalForm f, std::size_t e) {
  NormalForm result = NormalForm::one(f.field(), f.level());
  while (e != 0) {
    if (e & 1U) result = nf_mul(inst, result, f);
    e >>= 1U;
    if (e != 0) f = nf_mul(inst, f, f);
  }
  return result;
}

NormalForm generator_nf(const AkizukiInstance& inst, std::size_t i, std::size_t m) {
  check_level(inst, m);
  const auto exps = inst.exponents();
  const std::size_t big_r = inst.max_index();
  if (i >= big_r) {
    throw PrecisionExhausted("generator g_" + std::to_string(i) + " needs index below R = " + std::to_string(big_r));
  }
  // least r whose discarded remainder t^{2(n_r - n_i)} g_r vanishes at level m
  std::size_t r = i + 1;
  while (r <= big_r && 2 * (exps[r] - exps[i]) < m) ++r;
  if (r > big_r) {
    throw PrecisionExhausted("generator g_" + std::to_string(i) + " at level " + std::to_string(m) +
                             " exceeds headroom " + std::to_string(2 * (exps[big_r] - exps[i])));
  }

  const std::size_t denom = 2 * exps[i] + 2;
  const std::size_t wide = m + denom;
  const TruncatedSeries si = inst.partial_sum(i, wide);
  const TruncatedSeries sr = inst.partial_sum(r, wide);
  const TruncatedSeries t2 = TruncatedSeries::monomial(inst.field().one(), 2, wide);
  const TruncatedSeries two_t = TruncatedSeries::monomial(inst.field().from_int(2), 1, wide);

  // both numerators are divisible by t^{2n_i+2} because n_{i+1} >= 2 n_i + 2
  TruncatedSeries x = shift(t2 * (si * si - sr * sr), -static_cast<long>(denom));
  TruncatedSeries y = shift(two_t * (sr - si), -static_cast<long>(denom));
  return {std::move(x), std::move(y)};
}

TruncatedSeries nf_embed(const AkizukiInstance& inst, const NormalForm& f) {
  check_level(inst, f.level());
  return f.x() + f.y() * inst.w().truncate(f.level());
}

}  // namespace akizuki
