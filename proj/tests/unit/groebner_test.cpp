#include <gtest/gtest.h>

#include "kdg/parser.hpp"
#include "kdg/quotient_ring.hpp"

using namespace kdg;

namespace {

RingPtr ring(std::vector<std::string> vars, OrderKind kind = OrderKind::grevlex) {
  return PolyRing::make(Field::prime(), std::move(vars), MonomialOrder{kind});
}

std::vector<Polynomial> polys(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_poly(t, R));
  return out;
}

Vec as_vec(const Polynomial& p) { return Vec::from_polynomial(p, 0); }

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
  return gb.normal_form(as_vec(p)).is_zero();
}

}  // namespace

TEST(Buchberger, AlreadyReduced) {
  auto R = ring({"x", "y"});
  auto gb = ideal_groebner(R, polys(R, {"x", "y"}));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_TRUE(ideal_contains(gb, parse_poly("x", R)));
  EXPECT_TRUE(ideal_contains(gb, parse_poly("y", R)));
}

TEST(Buchberger, LexExampleContainsExpectedElement) {
  auto R = ring({"x", "y", "z"}, OrderKind::lex);
  BuchbergerOptions opts;
  opts.allow_inhomogeneous = true;
  auto gb = ideal_groebner(R, polys(R, {"x^2 - y", "x*y - z"}), opts);
  Polynomial target = parse_poly("y^2 - x*z", R);
  bool found = false;
  for (const auto& g : gb.elements()) {
    Polynomial p = vec_component(g, 0, R);
    if (p == target || p == -target) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(ideal_contains(gb, target));
}

TEST(Buchberger, RejectsInhomogeneousByDefault) {
  auto R = ring({"x", "y"});
  EXPECT_THROW(ideal_groebner(R, polys(R, {"x^2 - y"})), InhomogeneousInput);
}

TEST(Buchberger, DegreeCapIsADiagnostic) {
  auto R = PolyRing::make(Field::prime(), {"x", "y", "z"}, {}, 5);
  EXPECT_THROW(ideal_groebner(R, polys(R, {"x^3 - y^2*z", "x*y^2 - z^3"})), ResourceCapExceeded);
}

TEST(Buchberger, RankOneFreeModule) {
  auto R = ring({"x"});
  auto gb = buchberger(R, ModuleOrder::top({}, {0}), {as_vec(parse_poly("x", R))});
  ASSERT_EQ(gb.size(), 1u);
}

TEST(NormalForm, Examples) {
  auto R = ring({"x", "y"});
  auto gx = ideal_groebner(R, polys(R, {"x"}));
  EXPECT_TRUE(gx.normal_form(as_vec(parse_poly("x*y", R))).is_zero());
  EXPECT_EQ(vec_component(gx.normal_form(as_vec(parse_poly("y^2", R))), 0, R), parse_poly("y^2", R));
  auto g2 = ideal_groebner(R, polys(R, {"x^2 - y*x"}));
  auto R1 = ring({"x", "y"}, OrderKind::lex);
  BuchbergerOptions opts;
  opts.allow_inhomogeneous = true;
  auto g3 = ideal_groebner(R1, polys(R1, {"x^2 - y"}), opts);
  EXPECT_EQ(vec_component(g3.normal_form(as_vec(parse_poly("x^2", R1))), 0, R1), parse_poly("y", R1));
}

TEST(Syzygies, KoszulPair) {
  auto R = ring({"x", "y"});
  auto gb = ideal_groebner(R, polys(R, {"x", "y"}));
  auto syz = syzygies(gb);
  ASSERT_EQ(syz.generators.size(), 1u);
  const Vec& s = syz.generators[0];
  // Annihilates the basis.
  Polynomial total(R);
  for (const auto& t : s.terms)
    total += Polynomial::monomial(R, t.mono, t.coef) * vec_component(gb.elements()[t.comp], 0, R);
  EXPECT_TRUE(total.is_zero());
}

TEST(Syzygies, SingleElementHasNone) {
  auto R = ring({"x", "y"});
  auto gb = ideal_groebner(R, polys(R, {"x^2 + y^2"}));
  EXPECT_TRUE(syzygies(gb).generators.empty());
}

TEST(Syzygies, EliminationRouteThreeVariables) {
  auto R = ring({"x", "y", "z"});
  std::vector<Vec> gens;
  for (auto& p : polys(R, {"x", "y", "z"})) gens.push_back(as_vec(p));
  auto kernel = syzygies_of(R, {0}, gens, {1, 1, 1});
  EXPECT_EQ(kernel.size(), 3u);
  for (const auto& k : kernel) {
    Polynomial total(R);
    for (const auto& t : k.terms)
      total += Polynomial::monomial(R, t.mono, t.coef) * vec_component(gens[t.comp], 0, R);
    EXPECT_TRUE(total.is_zero());
  }
}

TEST(Lifter, CofactorsReproduceElement) {
  auto R = ring({"x", "y", "z"});
  auto gens_p = polys(R, {"x*y - z^2", "x^2 - y*z"});
  std::vector<Vec> gens;
  for (auto& p : gens_p) gens.push_back(as_vec(p));
  SubmoduleLifter lifter(R, {0}, gens, {2, 2}, {});
  Polynomial f = parse_poly("(x+z)*(x*y - z^2) - y^2*(x^2 - y*z)", R);
  auto cof = lifter.lift(as_vec(f));
  ASSERT_TRUE(cof.has_value());
  EXPECT_EQ((*cof)[0] * gens_p[0] + (*cof)[1] * gens_p[1], f);
  EXPECT_FALSE(lifter.lift(as_vec(parse_poly("x^2", R))).has_value());
}

TEST(Hilbert, SpecExamples) {
  EXPECT_EQ(krull_dim_pole_order({}, 2), 2);
  auto h = HilbertSeries(hilbert_numerator({Monomial{2}}, 1), 1);
  EXPECT_EQ(h.reduced().numerator, LaurentPoly::from_coefficients(0, {1, 1}));
  EXPECT_EQ(h.dimension(), 0);
  auto hx = HilbertSeries(hilbert_numerator({Monomial{1, 0}}, 2), 2);
  EXPECT_EQ(hx.dimension(), 1);
  EXPECT_EQ(hx.value(5), 1);
}

TEST(Hilbert, KrullDimensionRoutesAgree) {
  std::vector<Monomial> lead{Monomial{1, 1, 0}, Monomial{1, 0, 1}};
  EXPECT_EQ(krull_dim_pole_order(lead, 3), 2);
  EXPECT_EQ(krull_dim_combinatorial(lead, 3), 2);
  std::vector<Monomial> all{Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 1}};
  EXPECT_EQ(krull_dim_pole_order(all, 3), 0);
  EXPECT_EQ(krull_dim_combinatorial(all, 3), 0);
  EXPECT_EQ(krull_dim_combinatorial({Monomial{0, 0}}, 2), kMinusInfinity);
  EXPECT_EQ(krull_dim_pole_order({Monomial{0, 0}}, 2), kMinusInfinity);
}

TEST(Nilpotent, Examples) {
  auto R = ring({"x"});
  auto Q = QuotientRing::make(R, polys(R, {"x^2"}));
  EXPECT_TRUE(is_nilpotent(parse_poly("x", R), *Q));
  auto R2 = ring({"x", "y"});
  auto Q2 = QuotientRing::make(R2, polys(R2, {"x*y"}));
  EXPECT_FALSE(is_nilpotent(parse_poly("x", R2), *Q2));
  EXPECT_TRUE(is_nilpotent(Polynomial(R2), *Q2));
  auto Q3 = QuotientRing::make(R2, polys(R2, {"x^2", "x*y"}));
  EXPECT_TRUE(is_nilpotent(parse_poly("x", R2), *Q3));
  EXPECT_FALSE(is_nilpotent(parse_poly("y", R2), *Q3));
}

TEST(QuotientRing, Dimensions) {
  auto R = ring({"x", "y", "z", "w"});
  EXPECT_EQ(QuotientRing::make(R, polys(R, {"x*y - z*w"}))->dimension(), 3);
  auto R2 = ring({"x", "y"});
  EXPECT_EQ(QuotientRing::make(R2, polys(R2, {"x^2", "x*y"}))->dimension(), 1);
  EXPECT_EQ(QuotientRing::make(R2, polys(R2, {"1"}))->dimension(), kMinusInfinity);
}
