#include "akizuki/field.hpp"

#include <charconv>
#include <limits>

#include "akizuki/errors.hpp"

namespace akizuki {

namespace {

__extension__ using uint128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

// Reduces an arbitrary integer into [0, p).
std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63U)) {
    throw InvalidInstance("prime modulus out of range: " + std::to_string(p));
  }
  mpz_class candidate;
  mpz_import(candidate.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(candidate.get_mpz_t(), 40) == 0) {
    throw InvalidInstance("modulus is not prime: " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  constexpr std::string_view prefix = "fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("bad prime in field descriptor: " + std::string(text));
    }
    return prime(p);
  }
  throw ParseError("unknown field descriptor '" + std::string(text) + "' (expected q or fp:<prime>)");
}

std::string Field::descriptor() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

FieldElement Field::zero() const { return FieldElement(*this); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long value) const {
  if (is_rational()) return FieldElement(*this, mpq_class(value));
  return FieldElement(*this, reduce(mpz_class(value), modulus_));
}

FieldElement Field::from_rational(const mpq_class& value) const {
  if (is_rational()) {
    mpq_class q(value);
    q.canonicalize();
    return FieldElement(*this, std::move(q));
  }
  const std::uint64_t den = reduce(value.get_den(), modulus_);
  if (den == 0) {
    throw NotInvertible("denominator of " + value.get_str() + " vanishes modulo " +
                        std::to_string(modulus_));
  }
  const std::uint64_t num = reduce(value.get_num(), modulus_);
  return FieldElement(*this, mul_mod(num, pow_mod(den, modulus_ - 2, modulus_), modulus_));
}

FieldElement::FieldElement(Field field) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::uint64_t{0};
  }
}

FieldElement::FieldElement(Field field, mpq_class q) : field_(field), value_(std::move(q)) {}

FieldElement::FieldElement(Field field, std::uint64_t r) : field_(field), value_(r) {}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("operands over " + field_.descriptor() + " and " + other.field_.descriptor());
  }
}

bool FieldElement::is_zero() const noexcept {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1 % field_.characteristic();
}

bool FieldElement::is_negative() const noexcept {
  return field_.is_rational() && sgn(std::get<mpq_class>(value_)) < 0;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero in " + field_.descriptor());
  if (field_.is_rational()) {
    mpq_class q = 1 / std::get<mpq_class>(value_);
    return FieldElement(field_, std::move(q));
  }
  const auto p = field_.characteristic();
  return FieldElement(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    const auto p = field_.characteristic();
    auto& a = std::get<std::uint64_t>(value_);
    const auto b = std::get<std::uint64_t>(rhs.value_);
    a = (a >= p - b) ? a - (p - b) : a + b;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    const auto p = field_.characteristic();
    auto& a = std::get<std::uint64_t>(value_);
    const auto b = std::get<std::uint64_t>(rhs.value_);
    a = (a >= b) ? a - b : a + (p - b);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& a = std::get<std::uint64_t>(value_);
    a = mul_mod(a, std::get<std::uint64_t>(rhs.value_), field_.characteristic());
  }
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement out(field_);
  out -= *this;
  return out;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace akizuki
