#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "akizuki/completion.hpp"
#include "akizuki/duality.hpp"
#include "akizuki/local_cohomology.hpp"

namespace akizuki {

// gf(<X>;<Y>;<n>)   the class [(X + Y w) / t^n], X and Y read modulo t^n
// hom(<n>;<alpha>;<beta>)
// pair(<sigma>;<rho>)
// comp(<rho>;<sigma>)
// Series use the grammar of parse_series. Printing is canonical and round-trips.

H1Class parse_h1(std::string_view text, Field field);
ContinuousHom parse_hom(std::string_view text, Field field);
ResiduePair parse_pair(std::string_view text, Field field, std::size_t precision);
CompletionElement parse_comp(std::string_view text, Field field, std::size_t precision);

std::string format_h1(const H1Class& omega);
std::string format_hom(const ContinuousHom& hom);
std::string format_pair(const ResiduePair& pair);
std::string format_comp(const CompletionElement& c);

}  // namespace akizuki
