#include "akizuki/laurent_tail.hpp"

#include <string>

#include "akizuki/errors.hpp"

namespace akizuki {

LaurentTail::LaurentTail(Field field) : field_(field) {}

LaurentTail::LaurentTail(Field field, std::vector<FieldElement> terms) : field_(field), terms_(std::move(terms)) {
  for (const auto& d : terms_) {
    if (d.field() != field_) throw FieldMismatch("tail coefficient outside field");
  }
  trim();
}

void LaurentTail::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

FieldElement LaurentTail::coefficient(std::size_t j) const {
  if (j == 0 || j > terms_.size()) return field_.zero();
  return terms_[j - 1];
}

TruncatedSeries LaurentTail::numerator(std::size_t n) const {
  if (depth() > n) {
    throw PrecisionExhausted("tail of depth " + std::to_string(depth()) + " has no numerator over t^" +
                             std::to_string(n));
  }
  std::vector<FieldElement> coeffs(n, field_.zero());
  for (std::size_t j = 1; j <= depth(); ++j) coeffs[n - j] = terms_[j - 1];
  return TruncatedSeries(field_, std::move(coeffs));
}

LaurentTail& LaurentTail::operator+=(const LaurentTail& rhs) {
  if (field_ != rhs.field_) throw FieldMismatch("tails over different fields");
  if (rhs.terms_.size() > terms_.size()) terms_.resize(rhs.terms_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.terms_.size(); ++i) terms_[i] += rhs.terms_[i];
  trim();
  return *this;
}

LaurentTail& LaurentTail::operator-=(const LaurentTail& rhs) { return *this += -rhs; }

LaurentTail LaurentTail::operator-() const {
  LaurentTail out(*this);
  for (auto& d : out.terms_) d = -d;
  return out;
}

bool operator==(const LaurentTail& a, const LaurentTail& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

LaurentTail tail_from_fraction(const TruncatedSeries& f, std::size_t n) {
  if (n > f.precision()) {
    throw PrecisionExhausted("fraction over t^" + std::to_string(n) + " needs precision " + std::to_string(n) +
                             ", numerator has " + std::to_string(f.precision()));
  }
  std::vector<FieldElement> terms;
  terms.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) terms.push_back(f[n - j]);
  return LaurentTail(f.field(), std::move(terms));
}

LaurentTail tail_scale(const TruncatedSeries& c, const LaurentTail& tail) {
  if (c.field() != tail.field()) throw FieldMismatch("scalar and tail over different fields");
  const std::size_t depth = tail.depth();
  if (depth == 0) return tail;
  if (c.precision() < depth) {
    throw PrecisionExhausted("scaling a tail of depth " + std::to_string(depth) + " needs precision " +
                             std::to_string(depth));
  }
  // coefficient of t^-k in c * sum d_j t^-j is sum_{j >= k} d_j c_{j-k}
  std::vector<FieldElement> terms(depth, c.field().zero());
  for (std::size_t k = 1; k <= depth; ++k) {
    for (std::size_t j = k; j <= depth; ++j) {
      const auto d = tail.coefficient(j);
      if (!d.is_zero()) terms[k - 1] += d * c[j - k];
    }
  }
  return LaurentTail(c.field(), std::move(terms));
}

}  // namespace akizuki
