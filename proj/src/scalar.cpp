#include "kdg/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace kdg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(p);
}

Field Field::rationals() { return Field(0); }

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "QQ" || t == "Q") return rationals();
  std::string digits;
  if (t.rfind("GF(", 0) == 0 && t.back() == ')')
    digits = t.substr(3, t.size() - 4);
  else if (t.rfind("F_", 0) == 0)
    digits = t.substr(2);
  else if (!t.empty() && t[0] == 'F')
    digits = t.substr(1);
  else
    digits = t;
  if (digits.empty() || digits.size() > 10)
    throw std::invalid_argument("unrecognised field '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("unrecognised field '" + text + "'");
  return prime(std::stoll(digits));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rationals()) return Scalar(*this, mpq_class(static_cast<long>(v)));
  std::int64_t r = v % modulus_;
  if (r < 0) r += modulus_;
  return Scalar(*this, r);
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rationals()) return Scalar(*this, mpq_class(v));
  mpz_class r = v % modulus_;
  if (r < 0) r += modulus_;
  return Scalar(*this, static_cast<std::int64_t>(r.get_si()));
}

std::string Field::name() const {
  return is_rationals() ? "QQ" : "F" + std::to_string(modulus_);
}

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

void check_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
}

}  // namespace

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return residue() == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return residue() == 1;
  return rational() == 1;
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) {
    std::int64_t r = residue();
    return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
  }
  return Scalar(field_, mpq_class(-rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_prime_field())
    return Scalar(field_, inverse_mod(residue(), field_.characteristic()));
  return Scalar(field_, mpq_class(1 / rational()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.field_.is_prime_field()) {
    std::int64_t s = a.residue() + b.residue();
    std::int64_t p = a.field_.characteristic();
    return Scalar(a.field_, s >= p ? s - p : s);
  }
  return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.field_.is_prime_field()) {
    std::int64_t s = a.residue() - b.residue();
    return Scalar(a.field_, s < 0 ? s + a.field_.characteristic() : s);
  }
  return Scalar(a.field_, mpq_class(a.rational() - b.rational()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.field_.is_prime_field())
    return Scalar(a.field_, (a.residue() * b.residue()) % a.field_.characteristic());
  return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) {
    std::int64_t r = residue();
    std::int64_t p = field_.characteristic();
    if (r > p / 2) r -= p;
    return std::to_string(r);
  }
  return rational().get_str();
}

bool Scalar::prints_negative() const {
  if (field_.is_prime_field()) return residue() > field_.characteristic() / 2;
  return sgn(rational()) < 0;
}

bool Scalar::is_integral() const {
  return field_.is_prime_field() || rational().get_den() == 1;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace kdg
