#include "akizuki/series.hpp"

#include <string>

#include "akizuki/errors.hpp"

namespace akizuki {

TruncatedSeries::TruncatedSeries(Field field, std::size_t precision)
    : field_(field), coeffs_(precision, field.zero()) {
  if (precision == 0) throw PrecisionExhausted("series precision must be positive");
}

TruncatedSeries::TruncatedSeries(Field field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PrecisionExhausted("series precision must be positive");
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw FieldMismatch("coefficient outside series field");
  }
}

TruncatedSeries TruncatedSeries::constant(const FieldElement& c, std::size_t precision) {
  return monomial(c, 0, precision);
}

TruncatedSeries TruncatedSeries::one(Field field, std::size_t precision) {
  return constant(field.one(), precision);
}

TruncatedSeries TruncatedSeries::monomial(const FieldElement& c, std::size_t exponent,
                                          std::size_t precision) {
  TruncatedSeries out(c.field(), precision);
  if (exponent < precision) out.coeffs_[exponent] = c;
  return out;
}

const FieldElement& TruncatedSeries::coefficient(std::size_t i) const {
  if (i >= coeffs_.size()) {
    throw PrecisionExhausted("coefficient of t^" + std::to_string(i) + " unknown at precision " +
                             std::to_string(coeffs_.size()));
  }
  return coeffs_[i];
}

bool TruncatedSeries::is_zero() const noexcept { return !valuation().has_value(); }

std::optional<std::size_t> TruncatedSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t n) const {
  if (n > precision()) {
    throw PrecisionExhausted("cannot truncate precision " + std::to_string(precision()) + " up to " +
                             std::to_string(n));
  }
  return TruncatedSeries(field_, std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

TruncatedSeries TruncatedSeries::extend(std::size_t n) const {
  if (n < precision()) return truncate(n);
  auto coeffs = coeffs_;
  coeffs.resize(n, field_.zero());
  return TruncatedSeries(field_, std::move(coeffs));
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (field_ != other.field_) throw FieldMismatch("series over different fields");
  if (precision() != other.precision()) {
    throw PrecisionMismatch("precision mismatch: " + std::to_string(precision()) + " vs " +
                            std::to_string(other.precision()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) { return *this = *this * rhs; }

TruncatedSeries& TruncatedSeries::operator*=(const FieldElement& c) {
  if (c.field() != field_) throw FieldMismatch("scalar outside series field");
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const std::size_t n = a.precision();
  TruncatedSeries out(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries invert(const TruncatedSeries& a) {
  if (!a.is_unit()) throw NotInvertible("series with zero constant term is not a unit");
  const std::size_t n = a.precision();
  const FieldElement lead_inv = a[0].inverse();
  std::vector<FieldElement> b(n, a.field().zero());
  b[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    FieldElement acc = a.field().zero();
    for (std::size_t i = 1; i <= k; ++i) {
      if (!a[i].is_zero()) acc += a[i] * b[k - i];
    }
    b[k] = -(acc * lead_inv);
  }
  return TruncatedSeries(a.field(), std::move(b));
}

TruncatedSeries shift(const TruncatedSeries& a, long k) {
  const std::size_t n = a.precision();
  if (k >= 0) {
    const auto up = static_cast<std::size_t>(k);
    std::vector<FieldElement> coeffs(n, a.field().zero());
    for (std::size_t i = up; i < n; ++i) coeffs[i] = a[i - up];
    return TruncatedSeries(a.field(), std::move(coeffs));
  }
  const auto down = static_cast<std::size_t>(-k);
  if (down >= n) {
    throw PrecisionExhausted("division by t^" + std::to_string(down) + " leaves no known coefficients at precision " +
                             std::to_string(n));
  }
  for (std::size_t i = 0; i < down; ++i) {
    if (!a[i].is_zero()) {
      throw DivisibilityError("series is not divisible by t^" + std::to_string(down));
    }
  }
  return TruncatedSeries(a.field(), std::vector<FieldElement>(a.coefficients().begin() + static_cast<long>(down),
                                                              a.coefficients().end()));
}

TruncatedSeries lift(const TruncatedSeries& a, std::size_t k) {
  std::vector<FieldElement> coeffs(k, a.field().zero());
  coeffs.insert(coeffs.end(), a.coefficients().begin(), a.coefficients().end());
  return TruncatedSeries(a.field(), std::move(coeffs));
}

TruncatedSeries power(TruncatedSeries a, std::size_t e) {
  TruncatedSeries result = TruncatedSeries::one(a.field(), a.precision());
  while (e != 0) {
    if (e & 1U) result = result * a;
    e >>= 1U;
    if (e != 0) a = a * a;
  }
  return result;
}

}  // namespace akizuki
