#include "akizuki/duality.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "akizuki/errors.hpp"

namespace akizuki {

namespace {

void check_pair_precision(const ResiduePair& pair, std::size_t n) {
  if (pair.precision() < n) {
    throw PrecisionExhausted("residue pair known to precision " + std::to_string(pair.precision()) +
                             ", class needs " + std::to_string(n));
  }
}

void check_level(const AkizukiInstance& inst, std::size_t n) {
  if (n > inst.precision()) {
    throw PrecisionExhausted("level " + std::to_string(n) + " exceeds working precision " +
                             std::to_string(inst.precision()));
  }
}

void check_level(const AkizukiInstance& inst, std::size_t n, std::size_t r) {
  check_level(inst, n);
  if (r > inst.max_index() || r < inst.reduction_index(n)) {
    throw PrecisionExhausted("reduction index " + std::to_string(r) + " not admissible at level " +
                             std::to_string(n));
  }
}

}  // namespace

ResiduePair::ResiduePair(TruncatedSeries sigma_, TruncatedSeries rho_) : sigma(std::move(sigma_)), rho(std::move(rho_)) {
  if (sigma.field() != rho.field()) throw FieldMismatch("residue pair over different fields");
  if (sigma.precision() != rho.precision()) throw PrecisionMismatch("residue pair components differ in precision");
}

ContinuousHom ContinuousHom::make(TruncatedSeries alpha, TruncatedSeries beta) {
  if (alpha.field() != beta.field()) throw FieldMismatch("hom data over different fields");
  if (alpha.precision() != beta.precision()) throw PrecisionMismatch("hom data at different precisions");
  while (alpha.precision() > 1 && alpha[0].is_zero() && beta[0].is_zero()) {
    alpha = shift(alpha, -1);
    beta = shift(beta, -1);
  }
  return ContinuousHom(std::move(alpha), std::move(beta));
}

ContinuousHom ContinuousHom::zero(Field field) { return ContinuousHom(TruncatedSeries(field, 1), TruncatedSeries(field, 1)); }

std::pair<TruncatedSeries, TruncatedSeries> ContinuousHom::data_at(std::size_t n) const {
  if (n < level()) {
    throw PrecisionExhausted("hom of level " + std::to_string(level()) + " does not vanish on t^" +
                             std::to_string(n) + " C_M");
  }
  return {lift(alpha_, n - level()), lift(beta_, n - level())};
}

ContinuousHom operator+(const ContinuousHom& a, const ContinuousHom& b) {
  const std::size_t n = std::max(a.level(), b.level());
  auto [aa, ab] = a.data_at(n);
  auto [ba, bb] = b.data_at(n);
  return ContinuousHom::make(aa + ba, ab + bb);
}

LaurentTail residue(const ResiduePair& pair, const H1Class& omega) {
  return residue(pair, omega.numerator(), omega.exponent());
}

LaurentTail residue(const ResiduePair& pair, const NormalForm& numerator, std::size_t n) {
  check_pair_precision(pair, n);
  const NormalForm num = numerator.truncate(n);
  return tail_from_fraction(num.x() * pair.sigma.truncate(n) + num.y() * pair.rho.truncate(n), n);
}

LaurentTail hom_eval(const ContinuousHom& hom, const NormalForm& f) {
  const std::size_t n = hom.level();
  if (f.level() < n) {
    throw PrecisionExhausted("argument at level " + std::to_string(f.level()) + " for a hom of level " +
                             std::to_string(n));
  }
  const NormalForm g = f.truncate(n);
  return tail_from_fraction(g.x() * hom.alpha() + g.y() * hom.beta(), n);
}

ContinuousHom phi(const AkizukiInstance& inst, const ResiduePair& pair, const H1Class& omega) {
  const std::size_t n = omega.exponent();
  check_level(inst, n);
  return phi(inst, pair, omega, inst.reduction_index(n));
}

ContinuousHom phi(const AkizukiInstance& inst, const ResiduePair& pair, const H1Class& omega, std::size_t r) {
  const std::size_t n = omega.exponent();
  check_level(inst, n, r);
  check_pair_precision(pair, n);
  const Field field = inst.field();
  const TruncatedSeries sigma = pair.sigma.truncate(n);
  const TruncatedSeries rho = pair.rho.truncate(n);
  const TruncatedSeries ts = inst.t_partial_sum(r, n);
  const auto& x = omega.numerator().x();
  const auto& y = omega.numerator().y();

  TruncatedSeries alpha = x * sigma + y * rho;
  TruncatedSeries beta = x * rho + y * (field.from_int(2) * (ts * rho) - ts * ts * sigma);
  return ContinuousHom::make(std::move(alpha), std::move(beta));
}

H1Class phi_inverse(const AkizukiInstance& inst, const ResiduePair& pair, const ContinuousHom& hom) {
  const std::size_t n = hom.level();
  check_level(inst, n);
  H1Class omega = phi_inverse(inst, pair, hom, inst.reduction_index(n));
  assert(phi(inst, pair, omega) == hom);
  return omega;
}

H1Class phi_inverse(const AkizukiInstance& inst, const ResiduePair& pair, const ContinuousHom& hom, std::size_t r) {
  if (!pair.rho_invertible()) throw NotInvertible("rho not invertible: duality inverse undefined");
  const std::size_t n = hom.level();
  check_level(inst, n, r);
  check_pair_precision(pair, n);
  const Field field = inst.field();
  const TruncatedSeries sigma = pair.sigma.truncate(n);
  const TruncatedSeries rho = pair.rho.truncate(n);
  const TruncatedSeries ts = inst.t_partial_sum(r, n);
  const auto& alpha = hom.alpha();
  const auto& beta = hom.beta();

  const TruncatedSeries u = invert(power(rho - ts * sigma, 2));
  TruncatedSeries x = (alpha * ts * (sigma * ts - field.from_int(2) * rho) + beta * rho) * u;
  TruncatedSeries y = (alpha * rho - beta * sigma) * u;
  return H1Class::make(NormalForm(std::move(x), std::move(y)), n);
}

ResiduePair endo_extract(const AkizukiInstance& inst, const DualityMap& map, std::size_t n) {
  if (n == 0 || n > inst.precision()) {
    throw PrecisionExhausted("extraction level " + std::to_string(n) + " outside [1, " +
                             std::to_string(inst.precision()) + "]");
  }
  const Field field = inst.field();
  const H1Class probe = H1Class::make(NormalForm::one(field, n), n);
  const ContinuousHom image = map(probe);
  if (image.level() > n) {
    throw InconsistentBlackbox("image of [1/t^" + std::to_string(n) + "] has level " +
                               std::to_string(image.level()) + "; a C_M-linear map cannot raise the level");
  }
  TruncatedSeries sigma = hom_eval(image, NormalForm::one(field, n)).numerator(n);
  TruncatedSeries rho = hom_eval(image, NormalForm::w(field, n)).numerator(n);
  return ResiduePair(std::move(sigma), std::move(rho));
}

}  // namespace akizuki
