#include "akizuki/properties.hpp"

#include <algorithm>
#include <functional>

#include "akizuki/completion.hpp"
#include "akizuki/duality.hpp"
#include "akizuki/errors.hpp"
#include "akizuki/laurent_tail.hpp"
#include "akizuki/literals.hpp"
#include "akizuki/local_cohomology.hpp"
#include "akizuki/normal_form.hpp"
#include "akizuki/random.hpp"
#include "akizuki/series_io.hpp"

namespace akizuki::props {

namespace {

using Engine = random::Engine;
using Outcome = std::optional<std::string>;
using Check = std::function<Outcome(Engine&, const AkizukiInstance&)>;

struct Property {
  std::string name;
  Check check;
  bool randomized = true;
};

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t pick(Engine& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(random::uniform(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

std::string nf_text(const NormalForm& f) {
  return "(" + format_series(f.x()) + ", " + format_series(f.y()) + ")@" + std::to_string(f.level());
}

TruncatedSeries t_power(Field field, std::size_t k, std::size_t precision) {
  return TruncatedSeries::monomial(field.one(), k, precision);
}

// ---------------------------------------------------------------- series

std::vector<Property> series_properties() {
  return {
      {"ring_axioms",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto f = inst.field();
         const auto n = inst.precision();
         const auto a = random::series(rng, f, n);
         const auto b = random::series(rng, f, n);
         const auto c = random::series(rng, f, n);
         if ((a * b) * c != a * (b * c)) return "associativity fails for a=" + format_series(a);
         if (a * b != b * a) return "commutativity fails for a=" + format_series(a) + ", b=" + format_series(b);
         if (a * (b + c) != a * b + a * c) return "distributivity fails for a=" + format_series(a);
         return std::nullopt;
       }},
      {"inverse",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto a = random::unit_series(rng, inst.field(), inst.precision());
         if (a * invert(a) != TruncatedSeries::one(inst.field(), inst.precision())) {
           return "a * a^-1 != 1 for a=" + format_series(a);
         }
         return std::nullopt;
       }},
      {"tail_representative_stability",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = pick(rng, 1, inst.precision() - 1);
         const auto f = random::series(rng, inst.field(), inst.precision());
         if (tail_from_fraction(f, n) != tail_from_fraction(shift(f, 1), n + 1)) {
           return "f/t^n != tf/t^(n+1) for f=" + format_series(f) + ", n=" + std::to_string(n);
         }
         return std::nullopt;
       }},
      {"tail_vanishing_criterion",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = pick(rng, 1, inst.precision());
         const auto f = shift(random::series(rng, inst.field(), inst.precision()), static_cast<long>(pick(rng, 0, n)));
         const bool in_ideal = !f.valuation() || *f.valuation() >= n;
         if (tail_from_fraction(f, n).is_zero() != in_ideal) {
           return "vanishing mismatch for f=" + format_series(f) + ", n=" + std::to_string(n);
         }
         return std::nullopt;
       }},
      {"tail_a_linearity",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = pick(rng, 1, inst.precision());
         const auto c = random::series(rng, inst.field(), inst.precision());
         const auto f = random::series(rng, inst.field(), inst.precision());
         if (tail_scale(c, tail_from_fraction(f, n)) != tail_from_fraction(c * f, n)) {
           return "c [f/t^n] != [cf/t^n] for c=" + format_series(c) + ", f=" + format_series(f);
         }
         return std::nullopt;
       }},
  };
}

// ---------------------------------------------------------------- ring

std::vector<Property> ring_properties() {
  return {
      {"embedding_homomorphism",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto m = pick(rng, 1, inst.precision());
         const auto f = random::normal_form(rng, inst.field(), m);
         const auto g = random::normal_form(rng, inst.field(), m);
         if (nf_embed(inst, nf_mul(inst, f, g)) != nf_embed(inst, f) * nf_embed(inst, g)) {
           return "embed(fg) != embed(f)embed(g) for f=" + nf_text(f) + ", g=" + nf_text(g);
         }
         if (nf_embed(inst, f + g) != nf_embed(inst, f) + nf_embed(inst, g)) {
           return "embed(f+g) != embed(f)+embed(g) for f=" + nf_text(f);
         }
         return std::nullopt;
       }},
      {"reduction_index_independence",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto m = pick(rng, 1, inst.precision());
         const auto f = random::normal_form(rng, inst.field(), m);
         const auto g = random::normal_form(rng, inst.field(), m);
         const auto base = nf_mul(inst, f, g);
         for (auto r = inst.reduction_index(m); r <= inst.max_index(); ++r) {
           if (nf_mul(inst, f, g, r) != base) return "nf_mul differs at r=" + std::to_string(r) + " for f=" + nf_text(f);
         }
         return std::nullopt;
       }},
      {"inverse_law",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto m = pick(rng, 1, inst.precision());
         const auto f = random::unit_normal_form(rng, inst.field(), m);
         if (nf_mul(inst, f, nf_invert(inst, f)) != NormalForm::one(inst.field(), m)) {
           return "f * f^-1 != 1 for f=" + nf_text(f);
         }
         return std::nullopt;
       }},
      {"generator_consistency",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         if (inst.max_index() == 0) return std::nullopt;
         const auto i = pick(rng, 0, inst.max_index() - 1);
         const auto exps = inst.exponents();
         const auto headroom = std::min(inst.precision(), 2 * (exps[inst.max_index()] - exps[i]));
         const auto m = pick(rng, 1, headroom);
         const auto wide = m + exps[i];
         // z - a_0 - s_i = t^{n_i} (z_i - a_i), exact below t^{2 n_R + 2}
         const auto tail = inst.partial_sum(inst.max_index(), wide) - inst.partial_sum(i, wide);
         const auto zi = shift(tail, -static_cast<long>(exps[i]));
         if (nf_embed(inst, generator_nf(inst, i, m)) != zi * zi) {
           return "embed(g_" + std::to_string(i) + ") != (z_i - a_i)^2 at level " + std::to_string(m);
         }
         return std::nullopt;
       }},
      {"exponent_growth",
       [](Engine&, const AkizukiInstance& inst) -> Outcome {
         const auto exps = inst.exponents();
         for (std::size_t r = 0; r < exps.size(); ++r) {
           if (exps[r] + 2 < (std::size_t{1} << (r + 1))) return "n_" + std::to_string(r) + " below 2^(r+1) - 2";
         }
         return std::nullopt;
       },
       false},
  };
}

// ---------------------------------------------------------------- cohomology

std::vector<Property> cohomology_properties() {
  return {
      {"equivalence_relation",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto a = random::h1_class(rng, inst.field(), inst.precision());
         const auto k1 = pick(rng, 0, 4);
         const auto k2 = pick(rng, 0, 4);
         const auto b = H1Class::make(a.numerator_at(a.exponent() + k1), a.exponent() + k1);
         const auto c = H1Class::make(a.numerator_at(a.exponent() + k2), a.exponent() + k2);
         const auto d = random::h1_class(rng, inst.field(), inst.precision());
         if (!h1_eq(a, a)) return "not reflexive at " + format_h1(a);
         if (!h1_eq(a, b) || !h1_eq(b, a)) return "raised representative differs at " + format_h1(a);
         if (!(h1_eq(b, c) && h1_eq(a, c))) return "not transitive at " + format_h1(a);
         if (h1_eq(a, d) != h1_eq(d, a)) return "not symmetric at " + format_h1(a) + ", " + format_h1(d);
         if (h1_is_zero(a) != h1_eq(a, H1Class::zero(inst.field()))) return "zero test disagrees at " + format_h1(a);
         return std::nullopt;
       }},
      {"annihilation",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto omega = random::h1_class(rng, inst.field(), inst.precision());
         const auto n = omega.exponent();
         const auto tn = NormalForm::from_base(t_power(inst.field(), n, n));
         if (!h1_is_zero(h1_act(inst, tn, omega))) return "t^n does not kill " + format_h1(omega);
         return std::nullopt;
       }},
      {"action_compatibility",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto omega = random::h1_class(rng, inst.field(), n);
         const auto f = random::normal_form(rng, inst.field(), n);
         const auto g = random::normal_form(rng, inst.field(), n);
         if (h1_act(inst, nf_mul(inst, f, g), omega) != h1_act(inst, f, h1_act(inst, g, omega))) {
           return "(fg)w != f(gw) for w=" + format_h1(omega) + ", f=" + nf_text(f) + ", g=" + nf_text(g);
         }
         return std::nullopt;
       }},
      {"raising_invariance",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = pick(rng, 1, inst.precision());
         const auto f = random::normal_form(rng, inst.field(), n);
         const NormalForm tf(lift(f.x(), 1), lift(f.y(), 1));
         if (H1Class::make(f, n) != H1Class::make(tf, n + 1)) return "[f/t^n] != [tf/t^(n+1)] for f=" + nf_text(f);
         return std::nullopt;
       }},
      {"bilinearity",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto a = random::h1_class(rng, inst.field(), n);
         const auto b = random::h1_class(rng, inst.field(), n);
         const auto f = random::normal_form(rng, inst.field(), n);
         if (h1_act(inst, f, a + b) != h1_act(inst, f, a) + h1_act(inst, f, b)) {
           return "f(a+b) != fa+fb for a=" + format_h1(a) + ", b=" + format_h1(b);
         }
         return std::nullopt;
       }},
  };
}

// ---------------------------------------------------------------- duality

std::vector<Property> duality_properties() {
  return {
      {"residue_well_defined",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto pair = random::pair(rng, inst.field(), n, false);
         const auto omega = random::h1_class(rng, inst.field(), n);
         const auto raised = pick(rng, omega.exponent(), n);
         if (residue(pair, omega) != residue(pair, omega.numerator_at(raised), raised)) {
           return "residue depends on representative of " + format_h1(omega);
         }
         return std::nullopt;
       }},
      {"residue_a_linearity",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto pair = random::pair(rng, inst.field(), n, false);
         const auto a = random::series(rng, inst.field(), n);
         const auto w1 = random::h1_class(rng, inst.field(), n);
         const auto w2 = random::h1_class(rng, inst.field(), n);
         const auto lhs = residue(pair, h1_act(inst, NormalForm::from_base(a), w1) + w2);
         const auto rhs = tail_scale(a, residue(pair, w1)) + residue(pair, w2);
         if (lhs != rhs) return "res(a w1 + w2) != a res(w1) + res(w2) for " + format_pair(pair);
         return std::nullopt;
       }},
      {"phi_defining_identity",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto pair = random::pair(rng, inst.field(), n, random::chance(rng, 70));
         const auto omega = random::h1_class(rng, inst.field(), n);
         const auto f = random::normal_form(rng, inst.field(), n);
         if (hom_eval(phi(inst, pair, omega), f) != residue(pair, h1_act(inst, f, omega))) {
           return "Phi(w)(f) != res(f w) for " + format_pair(pair) + ", " + format_h1(omega) + ", f=" + nf_text(f);
         }
         return std::nullopt;
       }},
      {"roundtrip_classes",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto pair = random::pair(rng, inst.field(), n, true);
         const auto omega = random::h1_class(rng, inst.field(), n);
         if (phi_inverse(inst, pair, phi(inst, pair, omega)) != omega) {
           return "Phi^-1 Phi != id at " + format_h1(omega) + " for " + format_pair(pair);
         }
         return std::nullopt;
       }},
      {"roundtrip_homs",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto pair = random::pair(rng, inst.field(), n, true);
         const auto hom = random::hom(rng, inst.field(), n);
         if (phi(inst, pair, phi_inverse(inst, pair, hom)) != hom) {
           return "Phi Phi^-1 != id at " + format_hom(hom) + " for " + format_pair(pair);
         }
         return std::nullopt;
       }},
      {"phi_cm_linearity",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto field = inst.field();
         const auto pair = random::pair(rng, field, n, random::chance(rng, 70));
         const auto omega = random::h1_class(rng, field, n);
         const auto f = random::normal_form(rng, field, n);
         const auto lhs = phi(inst, pair, h1_act(inst, f, omega));
         const auto rhs = phi(inst, pair, omega);
         for (const auto& g : {NormalForm::one(field, n), NormalForm::w(field, n), random::normal_form(rng, field, n)}) {
           if (hom_eval(lhs, g) != hom_eval(rhs, nf_mul(inst, f, g))) {
             return "Phi(f w)(g) != Phi(w)(fg) for " + format_h1(omega) + ", f=" + nf_text(f);
           }
         }
         return std::nullopt;
       }},
      {"pair_additivity",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto p1 = random::pair(rng, inst.field(), n, false);
         const auto p2 = random::pair(rng, inst.field(), n, false);
         const auto omega = random::h1_class(rng, inst.field(), n);
         const ResiduePair sum(p1.sigma + p2.sigma, p1.rho + p2.rho);
         if (phi(inst, sum, omega) != phi(inst, p1, omega) + phi(inst, p2, omega)) {
           return "Phi_{p1+p2} != Phi_p1 + Phi_p2 at " + format_h1(omega);
         }
         return std::nullopt;
       }},
      {"endomorphism_classification",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto field = inst.field();
         const auto p1 = random::pair(rng, field, n, false);
         const auto p2 = random::pair(rng, field, n, false);
         const auto f = random::normal_form(rng, field, n);
         const DualityMap map = [&](const H1Class& omega) {
           return phi(inst, p1, h1_act(inst, f, omega)) + phi(inst, p2, omega);
         };
         const auto extracted = endo_extract(inst, map, n);
         for (int probe = 0; probe < 4; ++probe) {
           const auto omega = random::h1_class(rng, field, n);
           if (phi(inst, extracted, omega) != map(omega)) {
             return "extracted " + format_pair(extracted) + " disagrees at " + format_h1(omega);
           }
         }
         return std::nullopt;
       }},
      {"extraction_compatibility",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = pick(rng, 1, inst.precision() - 1);
         const auto pair = random::pair(rng, inst.field(), inst.precision(), false);
         const DualityMap map = [&](const H1Class& omega) { return phi(inst, pair, omega); };
         const auto at_n = endo_extract(inst, map, n);
         const auto at_next = endo_extract(inst, map, n + 1);
         if (at_next.sigma.truncate(n) != at_n.sigma || at_next.rho.truncate(n) != at_n.rho) {
           return "sigma_n, rho_n incompatible at n=" + std::to_string(n) + " for " + format_pair(pair);
         }
         return std::nullopt;
       }},
  };
}

// ---------------------------------------------------------------- completion

std::vector<Property> completion_properties() {
  return {
      {"ring_axioms",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto a = random::completion_element(rng, inst.field(), n);
         const auto b = random::completion_element(rng, inst.field(), n);
         const auto c = random::completion_element(rng, inst.field(), n);
         if (comp_mul(inst, comp_mul(inst, a, b), c) != comp_mul(inst, a, comp_mul(inst, b, c))) {
           return "associativity fails for a=" + format_comp(a);
         }
         if (comp_mul(inst, a, b) != comp_mul(inst, b, a)) return "commutativity fails for a=" + format_comp(a);
         if (comp_mul(inst, a, comp_add(b, c)) != comp_add(comp_mul(inst, a, b), comp_mul(inst, a, c))) {
           return "distributivity fails for a=" + format_comp(a);
         }
         if (comp_mul(inst, CompletionElement::one(inst.field(), n), a) != a) return "unit law fails for " + format_comp(a);
         return std::nullopt;
       }},
      {"nilpotent_witness",
       [](Engine&, const AkizukiInstance& inst) -> Outcome {
         const CompletionElement eps(inst.w(), TruncatedSeries::one(inst.field(), inst.precision()));
         const auto square = comp_mul(inst, eps, eps);
         if (square != CompletionElement::zero(inst.field(), inst.precision())) {
           return "(w + X)^2 = " + format_comp(square) + ", expected 0";
         }
         return std::nullopt;
       },
       false},
      {"closed_form_matches_composition",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto u = random::completion_element(rng, inst.field(), n);
         const auto v = random::completion_element(rng, inst.field(), n);
         const auto unit = CompletionElement::one(inst.field(), n);
         if (comp_mul(inst, u, v) != comp_mul_general(inst, u, v, unit)) {
           return "closed form != composition for u=" + format_comp(u) + ", v=" + format_comp(v);
         }
         return std::nullopt;
       }},
      {"general_unit_law",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto u = random::completion_element(rng, inst.field(), n);
         const CompletionElement unit(random::unit_series(rng, inst.field(), n), random::series(rng, inst.field(), n));
         if (comp_mul_general(inst, u, unit, unit) != u) {
           return "u * unit != u for u=" + format_comp(u) + ", unit=" + format_comp(unit);
         }
         return std::nullopt;
       }},
      {"embedding_homomorphism",
       [](Engine& rng, const AkizukiInstance& inst) -> Outcome {
         const auto n = inst.precision();
         const auto f = random::normal_form(rng, inst.field(), n);
         const auto g = random::normal_form(rng, inst.field(), n);
         if (comp_embed(inst, nf_mul(inst, f, g)) != comp_mul(inst, comp_embed(inst, f), comp_embed(inst, g))) {
           return "embed(fg) != embed(f) * embed(g) for f=" + nf_text(f) + ", g=" + nf_text(g);
         }
         if (comp_embed(inst, f + g) != comp_add(comp_embed(inst, f), comp_embed(inst, g))) {
           return "embed(f+g) != embed(f) + embed(g) for f=" + nf_text(f);
         }
         return std::nullopt;
       }},
  };
}

std::vector<Property> properties_of(std::string_view suite) {
  if (suite == "series") return series_properties();
  if (suite == "ring") return ring_properties();
  if (suite == "cohomology") return cohomology_properties();
  if (suite == "duality") return duality_properties();
  if (suite == "completion") return completion_properties();
  throw ParseError("unknown suite '" + std::string(suite) + "'");
}

SuiteReport run_one(const AkizukiInstance& inst, const std::string& suite, std::uint64_t seed, std::size_t count) {
  SuiteReport report{suite, {}};
  for (const auto& property : properties_of(suite)) {
    PropertyResult result{property.name, 0, std::nullopt};
    const std::size_t cases = property.randomized ? count : 1;
    const std::uint64_t stream = fnv1a(suite + "/" + property.name);
    for (std::size_t i = 0; i < cases && result.passed(); ++i) {
      auto rng = random::case_engine(seed, stream, i);
      ++result.cases_run;
      try {
        if (auto failure = property.check(rng, inst)) result.counterexample = "case " + std::to_string(i) + ": " + *failure;
      } catch (const Error& e) {
        result.counterexample = "case " + std::to_string(i) + ": unexpected error: " + e.what();
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"series", "ring", "cohomology", "duality", "completion"};
  return names;
}

std::vector<SuiteReport> run_suite(const AkizukiInstance& inst, std::string_view suite, std::uint64_t seed,
                                   std::size_t count) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    for (const auto& name : suite_names()) reports.push_back(run_one(inst, name, seed, count));
  } else {
    reports.push_back(run_one(inst, std::string(suite), seed, count));
  }
  return reports;
}

}  // namespace akizuki::props
