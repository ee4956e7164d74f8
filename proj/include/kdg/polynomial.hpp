#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kdg/monomial.hpp"
#include "kdg/scalar.hpp"

namespace kdg {

/// Ambient polynomial ring S = k[x_1..x_m] together with its monomial order and
/// the S-pair degree cap every Gröbner computation over it must respect.
class PolyRing {
 public:
  static constexpr int kDefaultDegreeCap = 40;

  PolyRing(Field field, std::vector<std::string> variables,
           MonomialOrder order = {}, int degree_cap = kDefaultDegreeCap);

  static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> variables,
                                              MonomialOrder order = {},
                                              int degree_cap = kDefaultDegreeCap);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  int degree_cap() const { return degree_cap_; }

  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same field, variables, order and cap.
  bool same_as(const PolyRing& other) const;

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
  int degree_cap_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials from different rings") {}
};

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Polynomial over a PolyRing. Terms are nonzero and sorted strictly
/// decreasing in the ring's monomial order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index, int power = 1);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Common degree of all terms; nullopt for inhomogeneous polynomials. Zero is
  /// homogeneous of every degree and reports nullopt via degree() but true here.
  bool is_homogeneous() const;
  std::optional<int> degree() const;
  int max_degree() const;  // -1 for zero
  /// Nonzero constant.
  bool is_unit_constant() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(int e) const;

  /// Re-expresses the polynomial in another ring with the same field whose
  /// variable list starts with this ring's variables.
  Polynomial embedded(const RingPtr& target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };

/// Throws RingMismatch for operands over different rings.
Polynomial poly_op(const Polynomial& lhs, const Polynomial& rhs, PolyOp op);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace kdg
