#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "kdg/complex.hpp"
#include "kdg/oracle.hpp"
#include "kdg/parser.hpp"

namespace kdg {
inline void PrintTo(const HilbertSeries& h, std::ostream* os) {
  *os << "(" << h.numerator().to_string() << ")/(1-t)^" << h.nvars();
}
inline void PrintTo(const PolyMatrix& m, std::ostream* os) { *os << m.to_string(); }
}  // namespace kdg

namespace kdg::test {

inline QRingPtr qring(std::vector<std::string> vars, std::initializer_list<const char*> ideal = {},
                      Field field = Field::prime()) {
  auto R = PolyRing::make(field, std::move(vars));
  std::vector<Polynomial> gens;
  for (const char* t : ideal) gens.push_back(parse_poly(t, R));
  return QuotientRing::make(R, gens);
}

inline Polynomial P(const QRingPtr& q, const char* text) { return parse_poly(text, q->ring()); }

inline std::vector<Polynomial> Ps(const QRingPtr& q, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(q, t));
  return out;
}

// 1/(1-t)^pole shifted by s, written over (1-t)^nvars
inline HilbertSeries free_series(int nvars, int pole, int shift) {
  LaurentPoly num = LaurentPoly::monomial(shift, 1);
  for (int k = pole; k < nvars; ++k) num = num * LaurentPoly::from_coefficients(0, {1, -1});
  return HilbertSeries(num, nvars);
}

inline void expect_oracle_agrees(const Complex& c, int depth = 8) {
  auto table = truncation_oracle(c, depth);
  auto bad = oracle_mismatch(c, table);
  EXPECT_FALSE(bad.has_value()) << *bad;
}

}  // namespace kdg::test
