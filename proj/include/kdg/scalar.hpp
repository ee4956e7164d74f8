#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace kdg {

class Scalar;

/// Coefficient field: a prime field F_p or the rationals.
class Field {
 public:
  static constexpr std::int64_t kDefaultPrime = 32003;

  /// F_32003.
  Field() = default;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::int64_t p = kDefaultPrime);
  static Field rationals();
  /// Parses "F32003", "F_5", "GF(7)", "QQ" or "Q".
  static Field parse(const std::string& text);

  bool is_prime_field() const { return modulus_ != 0; }
  bool is_rationals() const { return modulus_ == 0; }
  /// 0 for the rationals.
  std::int64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::int64_t modulus) : modulus_(modulus) {}
  std::int64_t modulus_ = kDefaultPrime;
};

class FieldMismatch : public std::logic_error {
 public:
  FieldMismatch() : std::logic_error("scalar arithmetic across different fields") {}
};

/// Element of a Field. Carries its field so that arithmetic is self-contained.
class Scalar {
 public:
  Scalar() = default;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Residue in [0, p); prime fields only.
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  /// Value as a rational; rationals only.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Symmetric representative for prime fields (|v| <= p/2), canonical fraction for Q.
  std::string to_string() const;
  /// Sign of the printed representative; used by the polynomial printer.
  bool prints_negative() const;
  /// Integer representative, when the value prints as an integer.
  bool is_integral() const;

 private:
  friend class Field;
  Scalar(Field f, std::int64_t residue) : field_(f), value_(residue) {}
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}

  Field field_;
  std::variant<std::int64_t, mpq_class> value_ = std::int64_t{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::int64_t n);

}  // namespace kdg
