#pragma once

#include <string_view>

#include "akizuki/field.hpp"
#include "akizuki/normal_form.hpp"
#include "akizuki/series.hpp"
#include "akizuki/series_io.hpp"

namespace testing {

inline const akizuki::Field Q = akizuki::Field::rationals();

inline akizuki::TruncatedSeries S(std::string_view text, std::size_t precision, akizuki::Field f = Q) {
  return akizuki::parse_series(text, f, precision);
}

inline akizuki::NormalForm NF(std::string_view x, std::string_view y, std::size_t level, akizuki::Field f = Q) {
  return {S(x, level, f), S(y, level, f)};
}

inline akizuki::LaurentTail T(std::string_view text, akizuki::Field f = Q) { return akizuki::parse_tail(text, f); }

}  // namespace testing
