#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace akizuki {

class FieldElement;

// Descriptor of an exact coefficient field: the rationals, or Z/p for a prime p.
class Field {
 public:
  constexpr Field() noexcept = default;

  static constexpr Field rationals() noexcept { return Field{}; }
  // Throws InvalidInstance unless p is a prime below 2^63.
  static Field prime(std::uint64_t p);
  // Accepts "q" or "fp:<prime>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const noexcept { return modulus_ == 0; }
  // 0 for the rationals.
  constexpr std::uint64_t characteristic() const noexcept { return modulus_; }
  std::string descriptor() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long value) const;
  // Throws NotInvertible when the denominator vanishes in this field.
  FieldElement from_rational(const mpq_class& value) const;

  friend constexpr bool operator==(Field, Field) noexcept = default;

 private:
  constexpr explicit Field(std::uint64_t modulus) noexcept : modulus_(modulus) {}

  std::uint64_t modulus_ = 0;
};

// An exact field value. Rationals are kept reduced, residues in [0, p).
class FieldElement {
 public:
  explicit FieldElement(Field field = Field::rationals());

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Throws NotInvertible on zero.
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(const FieldElement& lhs, const FieldElement& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

  // Canonical text: "3", "-1/2", or the residue for prime fields.
  std::string to_string() const;
  // True when to_string() starts with '-' (never for prime fields).
  bool is_negative() const noexcept;

  // Underlying representations; only valid for the matching field kind.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

 private:
  friend class Field;
  FieldElement(Field field, mpq_class q);
  FieldElement(Field field, std::uint64_t r);

  void check_same_field(const FieldElement& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace akizuki
