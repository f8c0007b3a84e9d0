#include "akizuki/random.hpp"

#include <vector>

namespace akizuki::random {

Engine case_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
  return Engine(seq);
}

std::int64_t uniform(Engine& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = Engine::max() - (Engine::max() % span);
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

bool chance(Engine& rng, unsigned percent) { return uniform(rng, 0, 99) < static_cast<std::int64_t>(percent); }

FieldElement element(Engine& rng, Field field) {
  if (!field.is_rational()) {
    const auto p = static_cast<std::int64_t>(field.characteristic());
    return field.from_int(static_cast<long>(uniform(rng, 0, p - 1)));
  }
  const long num = static_cast<long>(uniform(rng, -4, 4));
  const long den = chance(rng, 15) ? static_cast<long>(uniform(rng, 2, 3)) : 1;
  return field.from_rational(mpq_class(num, den));
}

FieldElement nonzero_element(Engine& rng, Field field) {
  while (true) {
    FieldElement c = element(rng, field);
    if (!c.is_zero()) return c;
  }
}

TruncatedSeries series(Engine& rng, Field field, std::size_t precision, unsigned density) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(precision);
  for (std::size_t i = 0; i < precision; ++i) {
    coeffs.push_back(chance(rng, density) ? element(rng, field) : field.zero());
  }
  return TruncatedSeries(field, std::move(coeffs));
}

TruncatedSeries unit_series(Engine& rng, Field field, std::size_t precision, unsigned density) {
  TruncatedSeries s = series(rng, field, precision, density);
  const FieldElement lead = nonzero_element(rng, field);
  return s - TruncatedSeries::constant(s[0], precision) + TruncatedSeries::constant(lead, precision);
}

NormalForm normal_form(Engine& rng, Field field, std::size_t level) {
  return {series(rng, field, level), series(rng, field, level)};
}

NormalForm unit_normal_form(Engine& rng, Field field, std::size_t level) {
  return {unit_series(rng, field, level), series(rng, field, level)};
}

H1Class h1_class(Engine& rng, Field field, std::size_t max_exponent) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_exponent)));
  return H1Class::make(normal_form(rng, field, n), n);
}

ContinuousHom hom(Engine& rng, Field field, std::size_t max_level) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_level)));
  return ContinuousHom::make(series(rng, field, n), series(rng, field, n));
}

ResiduePair pair(Engine& rng, Field field, std::size_t precision, bool invertible_rho) {
  TruncatedSeries sigma = series(rng, field, precision);
  TruncatedSeries rho = invertible_rho ? unit_series(rng, field, precision) : series(rng, field, precision);
  return {std::move(sigma), std::move(rho)};
}

CompletionElement completion_element(Engine& rng, Field field, std::size_t precision) {
  return {series(rng, field, precision), series(rng, field, precision)};
}

namespace {

Expression constant_expression(Engine& rng) { return Expression::constant(static_cast<long>(uniform(rng, -3, 3))); }

Expression maximal_atom(Engine& rng, const AkizukiInstance& inst, std::size_t m) {
  std::vector<std::size_t> usable;
  const auto exps = inst.exponents();
  for (std::size_t i = 0; i < inst.max_index(); ++i) {
    if (2 * (exps[inst.max_index()] - exps[i]) >= m) usable.push_back(i);
  }
  const auto pick = uniform(rng, 0, usable.empty() ? 1 : 2);
  if (pick == 0) return Expression::t();
  if (pick == 1) return Expression::w();
  return Expression::generator(usable[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(usable.size()) - 1))]);
}

Expression unit_expression(Engine& rng, const AkizukiInstance& inst, std::size_t m, std::size_t depth);

Expression build(Engine& rng, const AkizukiInstance& inst, std::size_t m, std::size_t depth) {
  if (depth <= 1 || chance(rng, 20)) {
    return chance(rng, 30) ? constant_expression(rng) : maximal_atom(rng, inst, m);
  }
  switch (uniform(rng, 0, 5)) {
    case 0:
      return build(rng, inst, m, depth - 1) + build(rng, inst, m, depth - 1);
    case 1:
      return build(rng, inst, m, depth - 1) - build(rng, inst, m, depth - 1);
    case 2:
    case 3:
      return build(rng, inst, m, depth - 1) * build(rng, inst, m, depth - 1);
    case 4:
      return build(rng, inst, m, depth - 1) / unit_expression(rng, inst, m, depth - 1);
    default:
      return Expression::power(build(rng, inst, m, depth - 1), uniform(rng, 0, 3));
  }
}

Expression unit_expression(Engine& rng, const AkizukiInstance& inst, std::size_t m, std::size_t depth) {
  long c = 0;
  while (inst.field().from_int(c).is_zero()) c = static_cast<long>(uniform(rng, -3, 3));
  if (depth <= 1) return Expression::constant(c);
  Expression in_m = maximal_atom(rng, inst, m);
  if (depth > 2) in_m = in_m * build(rng, inst, m, depth - 2);
  return Expression::constant(c) + in_m;
}

}  // namespace

Expression expression(Engine& rng, const AkizukiInstance& inst, std::size_t m, std::size_t max_depth) {
  return build(rng, inst, m, max_depth);
}

}  // namespace akizuki::random
