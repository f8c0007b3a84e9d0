#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "akizuki/completion.hpp"
#include "akizuki/duality.hpp"
#include "akizuki/expression.hpp"
#include "akizuki/local_cohomology.hpp"
#include "akizuki/normal_form.hpp"
#include "akizuki/series.hpp"

namespace akizuki::random {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined distributions so seeded runs are reproducible everywhere.
using Engine = std::mt19937_64;

// Engine for case `index` of a named stream; independent of how cases are scheduled.
Engine case_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Uniform in [lo, hi].
std::int64_t uniform(Engine& rng, std::int64_t lo, std::int64_t hi);
bool chance(Engine& rng, unsigned percent);

// Small rationals (occasionally with denominator 2 or 3) or uniform residues.
FieldElement element(Engine& rng, Field field);
FieldElement nonzero_element(Engine& rng, Field field);

// Roughly `density` percent of coefficients nonzero.
TruncatedSeries series(Engine& rng, Field field, std::size_t precision, unsigned density = 50);
TruncatedSeries unit_series(Engine& rng, Field field, std::size_t precision, unsigned density = 50);

NormalForm normal_form(Engine& rng, Field field, std::size_t level);
NormalForm unit_normal_form(Engine& rng, Field field, std::size_t level);
// A canonical class with exponent in [1, max_exponent].
H1Class h1_class(Engine& rng, Field field, std::size_t max_exponent);
ContinuousHom hom(Engine& rng, Field field, std::size_t max_level);
ResiduePair pair(Engine& rng, Field field, std::size_t precision, bool invertible_rho);
CompletionElement completion_element(Engine& rng, Field field, std::size_t precision);

// Random tree of depth <= max_depth whose generators are usable at level m and
// whose denominators are units (nonzero constant plus an element of M).
Expression expression(Engine& rng, const AkizukiInstance& inst, std::size_t m, std::size_t max_depth);

}  // namespace akizuki::random
