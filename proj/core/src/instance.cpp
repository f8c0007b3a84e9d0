#include "akizuki/instance.hpp"

#include <sstream>

#include "akizuki/errors.hpp"
#include "akizuki/series_io.hpp"

namespace akizuki {

namespace {

void check_exponent_condition(const std::vector<std::size_t>& exponents) {
  if (exponents.empty() || exponents.front() != 0) {
    throw InvalidInstance("exponent list must start with n_0 = 0");
  }
  for (std::size_t r = 1; r < exponents.size(); ++r) {
    if (exponents[r] < 2 * exponents[r - 1] + 2) {
      throw InvalidInstance("exponent condition violated: n_" + std::to_string(r) + " = " +
                            std::to_string(exponents[r]) + " < 2*" + std::to_string(exponents[r - 1]) + "+2");
    }
  }
}

}  // namespace

ExponentRule ExponentRule::explicit_list(std::vector<std::size_t> exponents) {
  check_exponent_condition(exponents);
  ExponentRule rule;
  rule.list_ = std::move(exponents);
  return rule;
}

AkizukiInstance AkizukiInstance::make(Field field, std::size_t precision, const ExponentRule& rule,
                                      std::vector<FieldElement> units) {
  if (precision < 2) throw InvalidInstance("working precision must be at least 2");

  std::vector<std::size_t> exponents{0};
  while (2 * exponents.back() + 2 < precision) {
    if (rule.is_minimal()) {
      exponents.push_back(2 * exponents.back() + 2);
    } else if (exponents.size() < rule.list().size()) {
      exponents.push_back(rule.list()[exponents.size()]);
    } else {
      throw InvalidInstance("exponent list too short for precision " + std::to_string(precision) +
                            ": need some n_R with 2 n_R + 2 >= N");
    }
  }
  if (exponents.back() >= precision) {
    throw InvalidInstance("exponent n_" + std::to_string(exponents.size() - 1) + " = " +
                          std::to_string(exponents.back()) + " is not below the precision " +
                          std::to_string(precision));
  }

  const std::size_t count = exponents.size();
  if (units.empty()) units.push_back(field.one());
  while (units.size() < count) units.push_back(units.back());
  units.resize(count, field.one());
  for (std::size_t i = 0; i < count; ++i) {
    if (units[i].field() != field) throw FieldMismatch("unit a_" + std::to_string(i) + " outside the field");
    if (units[i].is_zero()) throw InvalidInstance("a_" + std::to_string(i) + " is not a unit");
  }

  AkizukiInstance inst;
  inst.field_ = field;
  inst.precision_ = precision;
  inst.exponents_ = std::move(exponents);
  inst.units_ = std::move(units);

  std::vector<FieldElement> z(precision, field.zero());
  for (std::size_t i = 0; i < count; ++i) z[inst.exponents_[i]] = inst.units_[i];
  inst.z_ = TruncatedSeries(field, std::move(z));
  inst.w_ = shift(inst.z_ - TruncatedSeries::constant(inst.units_[0], precision), 1);
  for (std::size_t r = 0; r < count; ++r) inst.partial_sums_.push_back(inst.partial_sum(r, precision));
  return inst;
}

AkizukiInstance AkizukiInstance::make_default(Field field, std::size_t precision) {
  return make(field, precision, ExponentRule::minimal());
}

const TruncatedSeries& AkizukiInstance::partial_sum(std::size_t r) const {
  if (r > max_index()) {
    throw PrecisionExhausted("s_" + std::to_string(r) + " beyond materialized index R = " +
                             std::to_string(max_index()));
  }
  return partial_sums_[r];
}

TruncatedSeries AkizukiInstance::partial_sum(std::size_t r, std::size_t precision) const {
  if (r > max_index()) {
    throw PrecisionExhausted("s_" + std::to_string(r) + " beyond materialized index R = " +
                             std::to_string(max_index()));
  }
  std::vector<FieldElement> coeffs(precision, field_.zero());
  for (std::size_t i = 1; i <= r; ++i) {
    if (exponents_[i] < precision) coeffs[exponents_[i]] = units_[i];
  }
  return TruncatedSeries(field_, std::move(coeffs));
}

TruncatedSeries AkizukiInstance::t_partial_sum(std::size_t r, std::size_t precision) const {
  return shift(partial_sum(r, precision), 1);
}

std::size_t AkizukiInstance::reduction_index(std::size_t m) const {
  for (std::size_t r = 0; r < exponents_.size(); ++r) {
    if (2 * exponents_[r] + 2 >= m) return r;
  }
  throw PrecisionExhausted("level " + std::to_string(m) + " exceeds instance capacity");
}

std::string AkizukiInstance::describe() const {
  std::ostringstream out;
  out << "field = " << field_.descriptor() << "\nprecision = " << precision_ << "\nexponents = ";
  for (std::size_t i = 0; i < exponents_.size(); ++i) out << (i ? "," : "") << exponents_[i];
  out << "\nunits = ";
  for (std::size_t i = 0; i < units_.size(); ++i) out << (i ? "," : "") << units_[i].to_string();
  out << "\nz = " << format_series(z_) << "\nw = " << format_series(w_);
  return out.str();
}

}  // namespace akizuki
