#pragma once

#include <cstddef>
#include <functional>

#include "akizuki/instance.hpp"
#include "akizuki/laurent_tail.hpp"
#include "akizuki/local_cohomology.hpp"
#include "akizuki/normal_form.hpp"
#include "akizuki/series.hpp"

namespace akizuki {

// Parameters (sigma, rho) of the residue map res_{sigma,rho}. Both components
// share one precision, which bounds the exponents of classes they can act on.
struct ResiduePair {
  TruncatedSeries sigma;
  TruncatedSeries rho;

  ResiduePair(TruncatedSeries sigma_, TruncatedSeries rho_);

  std::size_t precision() const noexcept { return sigma.precision(); }
  Field field() const noexcept { return sigma.field(); }
  bool rho_invertible() const noexcept { return rho.is_unit(); }

  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

/// A continuous A-linear map phi: C_M -> K/A, stored as (n, alpha, beta) with
/// phi(t^n C_M) = 0, phi(1) = [alpha / t^n], phi(w) = [beta / t^n].
///
/// Any (alpha, beta) modulo t^n defines such a map through the normal form
/// X + Y w + t^n Z. Values are canonical: n is minimal, the zero map has n = 1.
class ContinuousHom {
 public:
  // alpha and beta at precision n.
  static ContinuousHom make(TruncatedSeries alpha, TruncatedSeries beta);
  static ContinuousHom zero(Field field);

  std::size_t level() const noexcept { return alpha_.precision(); }
  const TruncatedSeries& alpha() const noexcept { return alpha_; }
  const TruncatedSeries& beta() const noexcept { return beta_; }
  Field field() const noexcept { return alpha_.field(); }
  bool is_zero() const noexcept { return alpha_.is_zero() && beta_.is_zero(); }

  // (alpha, beta) written over t^n for n >= level().
  std::pair<TruncatedSeries, TruncatedSeries> data_at(std::size_t n) const;

  friend ContinuousHom operator+(const ContinuousHom& a, const ContinuousHom& b);
  friend bool operator==(const ContinuousHom& a, const ContinuousHom& b) = default;

 private:
  ContinuousHom(TruncatedSeries alpha, TruncatedSeries beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  TruncatedSeries alpha_;
  TruncatedSeries beta_;
};

// res_{sigma,rho}[(X + Y w) / t^n] = [(X sigma + Y rho) / t^n].
LaurentTail residue(const ResiduePair& pair, const H1Class& omega);
// The same map on an arbitrary (not necessarily canonical) representative over t^n.
LaurentTail residue(const ResiduePair& pair, const NormalForm& numerator, std::size_t n);

// phi(f) = [(X alpha + Y beta) / t^n]; requires f.level() >= phi.level().
LaurentTail hom_eval(const ContinuousHom& phi, const NormalForm& f);

// Phi_{sigma,rho}(omega) = (f |-> res(f omega)). With r = reduction_index(n):
// alpha = X sigma + Y rho, beta = X rho + Y (2 t s_r rho - t^2 s_r^2 sigma).
ContinuousHom phi(const AkizukiInstance& inst, const ResiduePair& pair, const H1Class& omega);
ContinuousHom phi(const AkizukiInstance& inst, const ResiduePair& pair, const H1Class& omega, std::size_t r);

// Explicit inverse of Phi_{sigma,rho} for invertible rho. With u = (rho - t s_r sigma)^-2:
// X = (alpha t s_r (sigma t s_r - 2 rho) + beta rho) u, Y = (alpha rho - beta sigma) u.
// Throws NotInvertible when rho is not a unit.
H1Class phi_inverse(const AkizukiInstance& inst, const ResiduePair& pair, const ContinuousHom& hom);
H1Class phi_inverse(const AkizukiInstance& inst, const ResiduePair& pair, const ContinuousHom& hom, std::size_t r);

// A C_M-linear map H^1 -> Hom^c(C_M, K/A), supplied by the caller.
using DualityMap = std::function<ContinuousHom(const H1Class&)>;

// Reads sigma_n = numerator of map([1/t^n])(1) and rho_n = numerator of
// map([1/t^n])(w), both at precision n. If map is C_M-linear it agrees with
// Phi_{sigma_n,rho_n} on every class of exponent <= n.
// Throws InconsistentBlackbox when the probe image has level > n.
ResiduePair endo_extract(const AkizukiInstance& inst, const DualityMap& map, std::size_t n);

}  // namespace akizuki
