#include <doctest.h>

#include "akizuki/errors.hpp"
#include "akizuki/local_cohomology.hpp"
#include "akizuki/random.hpp"
#include "helpers.hpp"

using namespace akizuki;
using testing::NF;
using testing::Q;

namespace {

const AkizukiInstance& default_instance() {
  static const AkizukiInstance inst = AkizukiInstance::make_default();
  return inst;
}

H1Class gf(std::string_view x, std::string_view y, std::size_t n, Field f = Q) { return H1Class::make(NF(x, y, n, f), n); }

}  // namespace

TEST_CASE("h1_make canonicalizes") {
  const auto a = gf("1", "0", 1);
  CHECK(a.exponent() == 1);
  CHECK(a.numerator() == NF("1", "0", 1));
  const auto b = gf("t", "t", 2);
  CHECK(b.exponent() == 1);
  CHECK(b.numerator() == NF("1", "1", 1));
  // [t(z_0 - a_0) / t]_{C_M} != 0
  CHECK_FALSE(gf("0", "1", 1).is_zero());
  CHECK(gf("t^2", "t^3", 4).exponent() == 2);
  CHECK(gf("t^4", "0", 4) == H1Class::zero(Q));
  CHECK(H1Class::make(NF("1", "1", 3), 0) == H1Class::zero(Q));
  CHECK_THROWS_AS(H1Class::make(NF("1", "0", 2), 3), PrecisionExhausted);
}

TEST_CASE("h1_is_zero") {
  CHECK(h1_is_zero(gf("t", "0", 1)));
  CHECK_FALSE(h1_is_zero(gf("0", "1", 1)));
  CHECK(h1_is_zero(gf("t^3", "t^3", 3)));
  CHECK(h1_is_zero(NF("t^3", "t^3", 3)));
  CHECK_FALSE(h1_is_zero(NF("t^3", "t^2", 3)));
}

TEST_CASE("h1_eq") {
  CHECK(h1_eq(gf("1", "0", 1), gf("t", "0", 2)));
  CHECK_FALSE(h1_eq(gf("0", "1", 1), gf("0", "0", 1)));
  CHECK(h1_eq(gf("1+t", "0", 2), gf("1+t+t^2", "0", 2)));
  CHECK_FALSE(h1_eq(gf("1", "0", 1), gf("1", "0", 2)));
  CHECK_FALSE(h1_eq(gf("1", "0", 1), gf("1", "0", 1, Field::prime(3))));
}

TEST_CASE("h1_act") {
  const auto& inst = default_instance();
  CHECK(h1_is_zero(h1_act(inst, NF("t", "0", 31), gf("1", "0", 1))));
  CHECK(h1_act(inst, NF("0", "1", 31), gf("1", "0", 2)) == gf("0", "1", 2));
  // w^2 = 2 t^3 w - t^6 at level 6
  const auto ww = h1_act(inst, NF("0", "1", 6), gf("0", "1", 6));
  CHECK(ww == gf("0", "2", 3));
  CHECK_FALSE(ww.is_zero());
  CHECK_THROWS_AS(h1_act(inst, NF("0", "1", 2), gf("0", "1", 6)), PrecisionExhausted);

  const auto f2 = Field::prime(2);
  const auto inst2 = AkizukiInstance::make_default(f2);
  CHECK(h1_act(inst2, NF("0", "1", 6, f2), gf("0", "1", 6, f2)).is_zero());
}

TEST_CASE("h1_add") {
  CHECK((gf("1", "0", 1) + gf("-1", "0", 1)).is_zero());
  CHECK(gf("1", "0", 1) + gf("1", "0", 2) == gf("t+1", "0", 2));
  const auto omega = gf("1+t", "t^2", 5);
  CHECK(omega + H1Class::zero(Q) == omega);
}

TEST_CASE("cohomology invariants on random classes") {
  const auto& inst = default_instance();
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = random::case_engine(31, 1, i);
    const auto omega = random::h1_class(rng, Q, 31);
    const auto other = random::h1_class(rng, Q, 31);
    const auto n = omega.exponent();
    // annihilation by t^n
    REQUIRE(h1_act(inst, NormalForm::from_base(TruncatedSeries::monomial(Q.one(), n, n)), omega).is_zero());
    // raising
    const auto k = static_cast<std::size_t>(random::uniform(rng, 0, 5));
    REQUIRE(H1Class::make(omega.numerator_at(n + k), n + k) == omega);
    REQUIRE(h1_eq(omega, H1Class::make(omega.numerator_at(n + k), n + k)));
    // structural equality agrees with h1_eq
    REQUIRE((omega == other) == h1_eq(omega, other));
    REQUIRE(h1_is_zero(omega) == h1_eq(omega, H1Class::zero(Q)));
    // module axioms
    const auto f = random::normal_form(rng, Q, 31);
    const auto g = random::normal_form(rng, Q, 31);
    REQUIRE(h1_act(inst, nf_mul(inst, f, g), omega) == h1_act(inst, f, h1_act(inst, g, omega)));
    REQUIRE(h1_act(inst, f, omega + other) == h1_act(inst, f, omega) + h1_act(inst, f, other));
    REQUIRE((omega + -omega).is_zero());
  }
}
