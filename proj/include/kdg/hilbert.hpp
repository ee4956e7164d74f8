#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kdg/common.hpp"
#include "kdg/monomial.hpp"

namespace kdg {

/// Integer Laurent polynomial sum_k c_k t^k, stored from exponent `low()`.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, std::int64_t c);
  static LaurentPoly from_coefficients(int low, std::vector<std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int exponent) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t at_one() const;
  LaurentPoly shifted(int k) const;  // times t^k

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Exact division by (1 - t); requires at_one() == 0.
  LaurentPoly divided_by_one_minus_t() const;

  std::string to_string() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// numerator(t) / (1 - t)^nvars.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPoly numerator, int nvars) : numerator_(std::move(numerator)), nvars_(nvars) {}

  const LaurentPoly& numerator() const { return numerator_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Numerator with every factor (1 - t) cancelled, and the remaining pole order.
  struct Reduced {
    LaurentPoly numerator;
    int pole_order = 0;
  };
  Reduced reduced() const;
  /// Pole order at t = 1; kMinusInfinity for the zero series.
  int dimension() const;
  /// Hilbert function value in internal degree d.
  std::int64_t value(int d) const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  HilbertSeries shifted(int k) const { return {numerator_.shifted(k), nvars_}; }
  /// Equal as rational functions.
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

 private:
  LaurentPoly numerator_;
  int nvars_ = 0;
};

/// Numerator of HS(S/L) over (1-t)^nvars for the monomial ideal L.
LaurentPoly hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars);

/// HS of F/L for a graded free module F with the given twists and one monomial ideal per component.
HilbertSeries hilbert_series(const std::vector<std::vector<Monomial>>& leads,
                             const std::vector<int>& twists, std::size_t nvars);

/// Krull dimension of S/L via a maximum independent set of variables (no generator supported
/// inside it); kMinusInfinity when L is the unit ideal.
int krull_dim_combinatorial(const std::vector<Monomial>& generators, std::size_t nvars);

/// Pole-order route; must agree with krull_dim_combinatorial.
int krull_dim_pole_order(const std::vector<Monomial>& generators, std::size_t nvars);

}  // namespace kdg
