#pragma once

#include "akizuki/duality.hpp"
#include "akizuki/instance.hpp"
#include "akizuki/normal_form.hpp"
#include "akizuki/series.hpp"

namespace akizuki {

// Phi_{sigma,rho}, viewed as rho + sigma X in A^[X] / (X + t(z - a_0))^2.
struct CompletionElement {
  TruncatedSeries rho;
  TruncatedSeries sigma;

  CompletionElement(TruncatedSeries rho_, TruncatedSeries sigma_);

  static CompletionElement zero(Field field, std::size_t precision);
  // The standard unit Phi_{0,1}.
  static CompletionElement one(Field field, std::size_t precision);

  std::size_t precision() const noexcept { return rho.precision(); }
  ResiduePair as_pair() const { return ResiduePair(sigma, rho); }

  friend bool operator==(const CompletionElement&, const CompletionElement&) = default;
};

CompletionElement comp_add(const CompletionElement& u, const CompletionElement& v);

// Closed form for the unit (sigma_0, rho_0) = (0, 1):
// rho = rho1 rho2 - sigma1 sigma2 w^2, sigma = sigma1 rho2 + sigma2 rho1 - 2 sigma1 sigma2 w.
CompletionElement comp_mul(const AkizukiInstance& inst, const CompletionElement& u, const CompletionElement& v);

// Phi_u o Phi_unit^-1 o Phi_v evaluated as a composition of maps and read back
// through endo_extract at level N. Throws NotInvertible unless unit.rho is a unit.
CompletionElement comp_mul_general(const AkizukiInstance& inst, const CompletionElement& u,
                                   const CompletionElement& v, const CompletionElement& unit);

// C_M -> A^ -> A^[X]/(X + w)^2. Requires f.level() == N.
CompletionElement comp_embed(const AkizukiInstance& inst, const NormalForm& f);

}  // namespace akizuki
