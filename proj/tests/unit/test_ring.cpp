#include <doctest.h>

#include "akizuki/errors.hpp"
#include "akizuki/expression.hpp"
#include "akizuki/instance.hpp"
#include "akizuki/normal_form.hpp"
#include "akizuki/random.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace akizuki;
using testing::NF;
using testing::Q;
using testing::S;

namespace {

const AkizukiInstance& default_instance() {
  static const AkizukiInstance inst = AkizukiInstance::make_default();
  return inst;
}

}  // namespace

TEST_CASE("make_instance: default data") {
  const auto& inst = default_instance();
  CHECK(std::vector<std::size_t>(inst.exponents().begin(), inst.exponents().end()) ==
        std::vector<std::size_t>{0, 2, 6, 14, 30});
  CHECK(inst.max_index() == 4);
  CHECK(inst.z() == S("1+t^2+t^6+t^14+t^30", 31));
  CHECK(inst.w() == S("t^3+t^7+t^15", 31));
  CHECK(inst.z() == oracle::z(inst, 31).to_series());
  CHECK(inst.w() == oracle::w(inst, 31).to_series());
}

TEST_CASE("make_instance: validation") {
  CHECK_THROWS_AS(ExponentRule::explicit_list({0, 2, 5, 12}), InvalidInstance);
  CHECK_THROWS_AS(ExponentRule::explicit_list({1, 4}), InvalidInstance);
  CHECK_THROWS_AS(AkizukiInstance::make(Q, 31, ExponentRule::minimal(), {Q.one(), Q.zero()}), InvalidInstance);
  CHECK_THROWS_AS(AkizukiInstance::make_default(Q, 1), InvalidInstance);
  CHECK_THROWS_AS(AkizukiInstance::make(Q, 31, ExponentRule::explicit_list({0, 2, 6}), {}), InvalidInstance);
  // 2*14+2 < 31, so n_4 = 40 would be needed and lies beyond the precision
  CHECK_THROWS_AS(AkizukiInstance::make(Q, 31, ExponentRule::explicit_list({0, 2, 6, 14, 40}), {}), InvalidInstance);
}

TEST_CASE("make_instance: explicit exponents and units") {
  const auto inst = AkizukiInstance::make(Q, 20, ExponentRule::explicit_list({0, 3, 9, 40}),
                                          {Q.from_int(2), Q.from_int(-1), Q.from_int(5)});
  CHECK(inst.max_index() == 2);
  CHECK(inst.z() == S("2 - t^3 + 5t^9", 20));
  CHECK(inst.w() == S("-t^4 + 5t^10", 20));
  CHECK(inst.partial_sum(2) == S("-t^3 + 5t^9", 20));
  // unit list shorter than R + 1 repeats its last entry
  const auto short_units = AkizukiInstance::make(Q, 31, ExponentRule::minimal(), {Q.from_int(3), Q.from_int(2)});
  CHECK(short_units.units().back() == Q.from_int(2));
  CHECK(short_units.z() == S("3 + 2t^2 + 2t^6 + 2t^14 + 2t^30", 31));
}

TEST_CASE("partial_sum") {
  const auto& inst = default_instance();
  CHECK(inst.partial_sum(0).is_zero());
  CHECK(inst.partial_sum(1) == S("t^2", 31));
  CHECK(inst.partial_sum(2) == S("t^2+t^6", 31));
  CHECK(inst.partial_sum(4, 70) == S("t^2+t^6+t^14+t^30", 70));
  CHECK_THROWS_AS(inst.partial_sum(5), PrecisionExhausted);
}

TEST_CASE("reduction_index") {
  const auto& inst = default_instance();
  CHECK(inst.reduction_index(3) == 1);
  CHECK(inst.reduction_index(14) == 2);
  CHECK(inst.reduction_index(1) == 0);
  CHECK(inst.reduction_index(31) == 4);
}

TEST_CASE("nf_add") {
  CHECK(NF("t", "0", 4) + NF("0", "1", 4) == NF("t", "1", 4));
  CHECK(NF("1+t", "t^2", 4) + NormalForm::zero(Q, 4) == NF("1+t", "t^2", 4));
  CHECK((NF("1", "1", 4) + NF("-1", "-1", 4)).is_zero());
  CHECK_THROWS_AS(NF("1", "0", 4) + NF("1", "0", 5), PrecisionMismatch);
}

TEST_CASE("nf_mul") {
  const auto& inst = default_instance();
  const auto w2 = nf_mul(inst, NF("0", "1", 14), NF("0", "1", 14));
  CHECK(w2 == NF("-t^6-2t^10", "2t^3+2t^7", 14));
  const auto w = oracle::w(inst, 14);
  CHECK(nf_embed(inst, w2) == oracle::mul(w, w).to_series());

  const auto f = NF("1+t-t^3", "2-t", 8);
  CHECK(nf_mul(inst, NormalForm::one(Q, 8), f) == f);
  CHECK(nf_mul(inst, NF("t", "0", 8), NF("0", "1", 8)) == NF("0", "t", 8));
  CHECK_THROWS_AS(nf_mul(inst, NF("1", "0", 4), NF("1", "0", 5)), PrecisionMismatch);
  CHECK_THROWS_AS(nf_mul(inst, NF("1", "0", 6), NF("1", "0", 6), 0), PrecisionExhausted);
}

TEST_CASE("nf_invert") {
  const auto& inst = default_instance();
  CHECK(nf_invert(inst, NormalForm::one(Q, 6)) == NormalForm::one(Q, 6));
  CHECK(nf_invert(inst, NF("1-t", "0", 6)) == NormalForm::from_base(invert(S("1-t", 6))));
  const auto inv = nf_invert(inst, NF("1", "1", 6));
  CHECK(inv == NF("1", "-1+2t^3", 6));
  CHECK(nf_mul(inst, NF("1", "1", 6), inv) == NormalForm::one(Q, 6));
  CHECK_THROWS_AS(nf_invert(inst, NF("t", "1", 6)), NotInvertible);
}

TEST_CASE("generator_nf") {
  const auto& inst = default_instance();
  const auto g0 = generator_nf(inst, 0, 12);
  CHECK(g0 == NF("-t^4-2t^8", "2t+2t^5", 12));
  // (z - 1)^2 by direct squaring
  const auto zm1 = oracle::sub(oracle::z(inst, 12), oracle::monomial(Q, 1, 0, 12));
  CHECK(nf_embed(inst, g0) == oracle::mul(zm1, zm1).to_series());

  const auto small = AkizukiInstance::make_default(Q, 14);
  CHECK(small.max_index() == 2);
  CHECK_NOTHROW(generator_nf(small, 0, 12));
  CHECK_THROWS_AS(generator_nf(small, 0, 13), PrecisionExhausted);
  CHECK_THROWS_AS(generator_nf(small, 2, 1), PrecisionExhausted);
  CHECK(eval_expression(small, parse_expression("w"), 14) == NF("0", "1", 14));
}

TEST_CASE("nf_embed") {
  const auto& inst = default_instance();
  CHECK(nf_embed(inst, NF("0", "1", 9)) == inst.w().truncate(9));
  CHECK(nf_embed(inst, NormalForm::one(Q, 5)) == S("1", 5));
  CHECK(nf_embed(inst, NF("-t^6-2t^10", "2t^3+2t^7", 14)) == S("t^6+2t^10", 14));
}

TEST_CASE("eval_expression") {
  const auto& inst = default_instance();
  CHECK(eval_expression(inst, parse_expression("w*w"), 14) == NF("-t^6-2t^10", "2t^3+2t^7", 14));
  CHECK(eval_expression(inst, parse_expression("t^2 + 3*w"), 5) == NF("t^2", "3", 5));

  // D = (1 - t^4)^2 = 1 - 2t^4 mod t^6, so Q = t / D = t + 2t^5
  const auto inv = eval_expression(inst, parse_expression("1/(1 - t*w)"), 6);
  CHECK(inv == NF("1", "t+2t^5", 6));
  CHECK(nf_mul(inst, inv, NF("1", "-t", 6)) == NormalForm::one(Q, 6));

  CHECK(eval_expression(inst, parse_expression("g0"), 12) == generator_nf(inst, 0, 12));
  CHECK(eval_expression(inst, parse_expression("(1+t)^-1"), 4) == NormalForm::from_base(invert(S("1+t", 4))));
  CHECK(eval_expression(inst, parse_expression("1/2 + 2t"), 3) == NF("1/2+2t", "0", 3));
  CHECK_THROWS_AS(eval_expression(inst, parse_expression("1/t"), 4), NotInvertible);
  CHECK_THROWS_AS(eval_expression(inst, parse_expression("1/(w + g1)"), 4), NotInvertible);
  CHECK_THROWS_AS(eval_expression(inst, parse_expression("g4"), 4), PrecisionExhausted);
}

TEST_CASE("expression parser") {
  CHECK_THROWS_AS(parse_expression("1 +"), ParseError);
  CHECK_THROWS_AS(parse_expression("(t"), ParseError);
  CHECK_THROWS_AS(parse_expression("x"), ParseError);
  CHECK_THROWS_AS(parse_expression("g"), ParseError);
  const auto e = parse_expression("-(g1 - 2t)^2 / (3 + w) * t^3");
  CHECK(e.max_generator() == 1);
  const auto& inst = default_instance();
  CHECK(eval_expression(inst, parse_expression(e.to_string()), 20) == eval_expression(inst, e, 20));
}

TEST_CASE("ring invariants on random normal forms") {
  const auto& inst = default_instance();
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = random::case_engine(21, 1, i);
    const auto m = static_cast<std::size_t>(random::uniform(rng, 1, 31));
    const auto f = random::normal_form(rng, Q, m);
    const auto g = random::normal_form(rng, Q, m);
    const auto fg = nf_mul(inst, f, g);
    const auto w = oracle::w(inst, m);
    const auto ef = oracle::add(oracle::Poly::from(f.x()), oracle::mul(oracle::Poly::from(f.y()), w));
    const auto eg = oracle::add(oracle::Poly::from(g.x()), oracle::mul(oracle::Poly::from(g.y()), w));
    REQUIRE(nf_embed(inst, fg) == oracle::mul(ef, eg).to_series());
    for (auto r = inst.reduction_index(m); r <= inst.max_index(); ++r) REQUIRE(nf_mul(inst, f, g, r) == fg);
    const auto u = random::unit_normal_form(rng, Q, m);
    REQUIRE(nf_mul(inst, u, nf_invert(inst, u)) == NormalForm::one(Q, m));
    for (auto r = inst.reduction_index(m); r <= inst.max_index(); ++r) REQUIRE(nf_invert(inst, u, r) == nf_invert(inst, u));
  }
}

TEST_CASE("generators agree with direct series for every admissible index and level") {
  for (const auto field : {Q, Field::prime(101), Field::prime(2)}) {
    const auto inst = AkizukiInstance::make_default(field, 31);
    const auto exps = inst.exponents();
    for (std::size_t i = 0; i < inst.max_index(); ++i) {
      const auto headroom = std::min<std::size_t>(31, 2 * (exps.back() - exps[i]));
      for (std::size_t m = 1; m <= headroom; ++m) {
        const auto zi = oracle::z_tail(inst, i, m);
        REQUIRE(nf_embed(inst, generator_nf(inst, i, m)) == oracle::mul(zi, zi).to_series());
      }
    }
  }
}

TEST_CASE("exponent growth bound") {
  for (std::size_t n = 2; n < 200; n += 7) {
    const auto inst = AkizukiInstance::make_default(Q, n);
    for (std::size_t r = 0; r <= inst.max_index(); ++r) CHECK(inst.exponents()[r] + 2 >= (std::size_t{1} << (r + 1)));
  }
}

TEST_CASE("random expressions respect the depth bound and match the oracle") {
  for (const auto& field : {Q, Field::prime(101)}) {
    const auto inst = AkizukiInstance::make_default(field);
    for (std::uint64_t i = 0; i < 150; ++i) {
      auto rng = random::case_engine(71, 1, i);
      const auto max_depth = static_cast<std::size_t>(random::uniform(rng, 1, 6));
      const auto m = static_cast<std::size_t>(random::uniform(rng, 1, 31));
      const auto e = random::expression(rng, inst, m, max_depth);
      INFO(e.to_string(), " at m = ", m);
      REQUIRE(e.depth() <= max_depth);
      REQUIRE(nf_embed(inst, eval_expression(inst, e, m)) == oracle::eval(inst, e, m).to_series());
    }
  }
}
