#include "akizuki/completion.hpp"

#include <string>

#include "akizuki/errors.hpp"

namespace akizuki {

CompletionElement::CompletionElement(TruncatedSeries rho_, TruncatedSeries sigma_)
    : rho(std::move(rho_)), sigma(std::move(sigma_)) {
  if (rho.field() != sigma.field()) throw FieldMismatch("completion element over different fields");
  if (rho.precision() != sigma.precision()) throw PrecisionMismatch("completion components differ in precision");
}

CompletionElement CompletionElement::zero(Field field, std::size_t precision) {
  return {TruncatedSeries(field, precision), TruncatedSeries(field, precision)};
}

CompletionElement CompletionElement::one(Field field, std::size_t precision) {
  return {TruncatedSeries::one(field, precision), TruncatedSeries(field, precision)};
}

CompletionElement comp_add(const CompletionElement& u, const CompletionElement& v) {
  return {u.rho + v.rho, u.sigma + v.sigma};
}

CompletionElement comp_mul(const AkizukiInstance& inst, const CompletionElement& u, const CompletionElement& v) {
  const TruncatedSeries w = inst.w().truncate(std::min(inst.precision(), u.precision()));
  const TruncatedSeries ss = u.sigma * v.sigma;
  TruncatedSeries rho = u.rho * v.rho - ss * (w * w);
  TruncatedSeries sigma = u.sigma * v.rho + v.sigma * u.rho - inst.field().from_int(2) * (ss * w);
  return {std::move(rho), std::move(sigma)};
}

CompletionElement comp_mul_general(const AkizukiInstance& inst, const CompletionElement& u,
                                   const CompletionElement& v, const CompletionElement& unit) {
  if (!unit.rho.is_unit()) throw NotInvertible("unit element must have invertible rho");
  const ResiduePair pu = u.as_pair();
  const ResiduePair pv = v.as_pair();
  const ResiduePair p0 = unit.as_pair();
  const DualityMap composed = [&](const H1Class& omega) {
    return phi(inst, pu, phi_inverse(inst, p0, phi(inst, pv, omega)));
  };
  const ResiduePair extracted = endo_extract(inst, composed, inst.precision());
  return {extracted.rho, extracted.sigma};
}

CompletionElement comp_embed(const AkizukiInstance& inst, const NormalForm& f) {
  if (f.level() != inst.precision()) {
    throw PrecisionExhausted("embedding into the completion needs level " + std::to_string(inst.precision()) +
                             ", got " + std::to_string(f.level()));
  }
  TruncatedSeries rho = nf_embed(inst, f);
  return {rho, TruncatedSeries(f.field(), rho.precision())};
}

}  // namespace akizuki
