#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akizuki/field.hpp"
#include "akizuki/series.hpp"

namespace akizuki {

// How the exponents n_0 = 0 < n_1 < ... of z = sum a_i t^{n_i} are chosen.
class ExponentRule {
 public:
  // n_r = 2 n_{r-1} + 2: 0, 2, 6, 14, 30, 62, ...
  static ExponentRule minimal() { return ExponentRule{}; }
  // Must start at 0 and satisfy n_r >= 2 n_{r-1} + 2.
  static ExponentRule explicit_list(std::vector<std::size_t> exponents);

  bool is_minimal() const noexcept { return !list_.has_value(); }
  const std::vector<std::size_t>& list() const { return *list_; }

 private:
  std::optional<std::vector<std::size_t>> list_;
};

/// A finite-precision model of Akizuki's data over A = k[t]_(t).
///
/// z = a_0 + a_1 t^{n_1} + a_2 t^{n_2} + ... with units a_i and
/// n_r >= 2 n_{r-1} + 2. The instance keeps n_0..n_R where R is the least
/// index with 2 n_R + 2 >= N; no later exponent can affect anything modulo t^N.
/// It is immutable and may be shared freely between threads.
class AkizukiInstance {
 public:
  // units may be shorter than R + 1 (the last entry is repeated) or empty (all ones).
  // Throws InvalidInstance on exponent-condition violations, zero units or N < 2.
  static AkizukiInstance make(Field field, std::size_t precision, const ExponentRule& rule,
                              std::vector<FieldElement> units = {});
  // Minimal exponents, all units 1.
  static AkizukiInstance make_default(Field field = Field::rationals(), std::size_t precision = 31);

  Field field() const noexcept { return field_; }
  std::size_t precision() const noexcept { return precision_; }
  // R, the index of the last materialized exponent.
  std::size_t max_index() const noexcept { return exponents_.size() - 1; }
  std::span<const std::size_t> exponents() const noexcept { return exponents_; }
  std::span<const FieldElement> units() const noexcept { return units_; }

  const TruncatedSeries& z() const noexcept { return z_; }
  // w = t (z - a_0) modulo t^N.
  const TruncatedSeries& w() const noexcept { return w_; }

  // s_r = a_1 t^{n_1} + ... + a_r t^{n_r} at precision N; s_0 = 0.
  const TruncatedSeries& partial_sum(std::size_t r) const;
  // s_r is a polynomial, so any precision is exact.
  TruncatedSeries partial_sum(std::size_t r, std::size_t precision) const;
  // t s_r at the given precision.
  TruncatedSeries t_partial_sum(std::size_t r, std::size_t precision) const;

  // Least r with 2 n_r + 2 >= m, for 1 <= m <= N.
  std::size_t reduction_index(std::size_t m) const;

  // z is determined exactly modulo t^{2 n_R + 2}, since n_{R+1} >= 2 n_R + 2.
  std::size_t exact_z_precision() const noexcept { return 2 * exponents_.back() + 2; }

  std::string describe() const;

 private:
  AkizukiInstance() = default;

  Field field_;
  std::size_t precision_ = 0;
  std::vector<std::size_t> exponents_;
  std::vector<FieldElement> units_;
  TruncatedSeries z_{Field::rationals(), 1};
  TruncatedSeries w_{Field::rationals(), 1};
  std::vector<TruncatedSeries> partial_sums_;
};

}  // namespace akizuki
