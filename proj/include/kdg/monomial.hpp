#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace kdg {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree (standard grading).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  bool is_one() const { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  /// Same variable count, drops or appends zero exponents.
  Monomial resized(std::size_t nvars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { grevlex, lex };

class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monomial order on a fixed number of variables (x_1 > x_2 > ... > x_m).
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  /// Three-way comparison; throws OrderMismatch when the variable counts differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
};

/// Reference grevlex comparator written straight from the textbook definition
/// (degree first, then the last nonzero entry of a - b is negative). Kept
/// separate from MonomialOrder::compare so tests can cross-check the two.
std::strong_ordering grevlex_reference(const Monomial& a, const Monomial& b);

std::strong_ordering order_compare(const Monomial& a, const Monomial& b,
                                   const MonomialOrder& order);

/// All monomials of the given degree in nvars variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace kdg
