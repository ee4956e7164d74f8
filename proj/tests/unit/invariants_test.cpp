#include <gtest/gtest.h>

#include "kdg/invariants.hpp"
#include "kdg/module.hpp"
#include "test_support.hpp"

using namespace kdg;
using namespace kdg::test;

namespace {

DGRingPtr ring_of(QRingPtr q) { return dg_from_ring(std::move(q)); }

DGRingPtr node_extension() {
  auto B = qring({"x", "y"}, {"x*y"});
  return trivial_extension(B, FPModule::cyclic(B, Ps(B, {"x"})), 2);
}

DGModule self(const DGRingPtr& a) { return DGModule::of_ring(a); }

}  // namespace

TEST(AmpProfile, Basics) {
  auto Q = qring({"x"});
  auto p = amp_profile(ring_of(Q)->underlying());
  EXPECT_EQ(p.inf, 0);
  EXPECT_EQ(p.amp, 0);
  auto e = amp_profile(node_extension()->underlying());
  EXPECT_EQ(e.inf, -2);
  EXPECT_EQ(e.sup, 0);
  EXPECT_EQ(e.amp, 2);
  auto z = amp_profile(koszul(ring_of(Q), {Polynomial(Q->ring())})->underlying());
  EXPECT_EQ(z.inf, -1);
  EXPECT_EQ(z.amp, 1);
  auto acyclic = amp_profile(Complex::zero(Q));
  EXPECT_EQ(acyclic.inf, kPlusInfinity);
  EXPECT_EQ(acyclic.sup, kMinusInfinity);
}

TEST(Lcdim, Examples) {
  auto Q = qring({"x", "y", "z"}, {"x*z"});
  EXPECT_EQ(lcdim(ring_of(Q)->underlying()), Q->dimension());
  EXPECT_EQ(lcdim(node_extension()->underlying()), 1);
  auto L = qring({"x"});
  EXPECT_EQ(lcdim(Complex::concentrated(FPModule::cyclic(L, Ps(L, {"x"})))), 0);
  EXPECT_EQ(lcdim(Complex::zero(L)), kMinusInfinity);
}

TEST(IsRegular, Examples) {
  auto Q = qring({"x", "y"});
  EXPECT_TRUE(is_regular(self(ring_of(Q)), P(Q, "x")).regular);

  auto N = qring({"x", "y"}, {"x*y"});
  auto cert = is_regular(self(ring_of(N)), P(N, "x"));
  EXPECT_FALSE(cert.regular);
  // the certificate is the Hilbert series of the explicit kernel (y)
  FPModule k = kernel(multiplication_map(FPModule::free(N, {0}), P(N, "x")));
  EXPECT_EQ(cert.kernel_series, k.hilbert_series());

  auto A = node_extension();
  auto ry = is_regular(self(A), P(A->base(), "y"));
  EXPECT_TRUE(ry.regular);
  EXPECT_EQ(ry.degree_of_homology, -2);
  EXPECT_FALSE(is_regular(self(A), P(A->base(), "x")).regular);

  EXPECT_FALSE(is_regular(self(ring_of(Q)), Polynomial(Q->ring())).regular);
  EXPECT_THROW(is_regular(DGModule{ring_of(Q), Complex::zero(Q), true}, P(Q, "x")), InputError);
}

TEST(Depth, Examples) {
  auto S3 = qring({"x", "y", "z"});
  EXPECT_EQ(depth(ring_of(S3), Ps(S3, {"x", "y", "z"}), self(ring_of(S3))), 3);
  auto S2 = qring({"x", "y"});
  EXPECT_EQ(depth(ring_of(S2), Ps(S2, {"x"}), self(ring_of(S2))), 1);
  auto E = qring({"x", "y"}, {"x^2", "x*y"});
  EXPECT_EQ(depth(ring_of(E), Ps(E, {"x", "y"}), self(ring_of(E))), 0);
  EXPECT_THROW(depth(ring_of(S2), Ps(S2, {"x", "1"}), self(ring_of(S2))), InputError);
}

TEST(Depth, ImproperOverDGBase) {
  auto Q = qring({"x", "y"});
  auto A = koszul(ring_of(Q), Ps(Q, {"x"}));
  // x is already zero in H^0 but the ideal (x, y) stays proper; (y - x + 1) would not be homogeneous
  EXPECT_NO_THROW(depth(A, Ps(Q, {"x", "y"}), self(A)));
  EXPECT_THROW(depth(A, Ps(Q, {"1"}), self(A)), InputError);
}

TEST(Depth, IndependentOfGeneratingSet) {
  std::vector<QRingPtr> rings{qring({"x", "y"}, {"x*y"}), qring({"x", "y"}, {"x^2", "x*y"}),
                              qring({"x", "y", "z"}, {"x*y-z^2"})};
  for (const auto& q : rings) {
    auto a = ring_of(q);
    int d1 = depth(a, Ps(q, {"x", "y"}), self(a));
    int d2 = depth(a, Ps(q, {"x", "x+y", "y"}), self(a));
    int d3 = depth(a, Ps(q, {"x+y", "x-y", "x^2"}), self(a));
    EXPECT_EQ(d1, d2) << q->describe();
    EXPECT_EQ(d1, d3) << q->describe();
  }
}

TEST(SeqDepth, QuadricIdeal) {
  auto Q = qring({"x", "y", "z", "w"}, {"x*y-z*w"});
  auto a = ring_of(Q);
  auto gens = Ps(Q, {"x", "z"});
  int s = seq_depth(a, gens, self(a));
  EXPECT_EQ(s, 1);
  auto quotient = QuotientRing::make(Q->ring(), Ps(Q, {"x*y-z*w", "x", "z"}));
  EXPECT_EQ(s, Q->dimension() - quotient->dimension());
  auto w = greedy_regular_sequence(a, gens, self(a));
  EXPECT_FALSE(w.exhausted);
  EXPECT_EQ(w.elements.size(), 1u);
}

TEST(SeqDepth, ShiftsWithInf) {
  auto A = node_extension();
  auto gens = Ps(A->base(), {"y"});
  EXPECT_EQ(depth(A, gens, self(A)), -1);
  EXPECT_EQ(seq_depth(A, gens, self(A)), 1);
}

TEST(Greedy, Examples) {
  auto S = qring({"x", "y"});
  auto w = greedy_regular_sequence(ring_of(S), Ps(S, {"x", "y"}), self(ring_of(S)));
  ASSERT_EQ(w.elements.size(), 2u);
  EXPECT_EQ(w.elements[0], P(S, "x"));
  EXPECT_EQ(w.elements[1], P(S, "y"));
  EXPECT_FALSE(w.exhausted);
  for (const auto& c : w.certificates) EXPECT_TRUE(c.is_zero());

  auto D = qring({"x", "y"}, {"x^2"});
  auto none = greedy_regular_sequence(ring_of(D), Ps(D, {"x"}), self(ring_of(D)));
  EXPECT_TRUE(none.elements.empty());
  EXPECT_FALSE(none.exhausted);
  EXPECT_GT(none.tests, 0);
}

TEST(Greedy, NodeNeedsACombination) {
  auto N = qring({"x", "y"}, {"x*y"});
  auto a = ring_of(N);
  auto w = greedy_regular_sequence(a, irrelevant_ideal(*N), self(a));
  ASSERT_EQ(w.elements.size(), 1u);
  EXPECT_EQ(w.elements[0], P(N, "x+y"));
  EXPECT_FALSE(w.exhausted);

  SearchBudget tiny;
  tiny.max_tests = 1;
  auto cut = greedy_regular_sequence(a, irrelevant_ideal(*N), self(a), tiny);
  EXPECT_TRUE(cut.exhausted);
  EXPECT_TRUE(cut.elements.empty());
}

TEST(LocalCM, Examples) {
  EXPECT_TRUE(is_local_cm(ring_of(qring({"x", "y"}, {"x*y"}))));
  EXPECT_FALSE(is_local_cm(ring_of(qring({"x", "y"}, {"x^2", "x*y"}))));
  EXPECT_TRUE(is_local_cm(node_extension()));
  EXPECT_TRUE(is_local_cm(ring_of(qring({"x"}, {"x^3"}))));
}

TEST(ConstantAmplitude, Examples) {
  EXPECT_TRUE(has_constant_amplitude(ring_of(qring({"x", "y"}, {"x*y"}))));
  EXPECT_FALSE(has_constant_amplitude(node_extension()));
  auto B = qring({"x", "y"}, {"x*y"});
  EXPECT_TRUE(has_constant_amplitude(trivial_extension(B, FPModule::free(B, {0}), 1)));
}

TEST(CMCertify, VerdictLattice) {
  EXPECT_EQ(cm_certify(ring_of(qring({"x", "y", "z"}))), Verdict3::yes);
  EXPECT_EQ(cm_certify(ring_of(qring({"x", "y"}, {"x^2", "x*y"}))), Verdict3::no);
  EXPECT_EQ(cm_certify(node_extension()), Verdict3::unknown);
}

TEST(CMCertify, KoszulOverNodeExtension) {
  auto A = node_extension();
  auto K = koszul(A, Ps(A->base(), {"y"}));
  auto m = irrelevant_ideal(*A->base());
  EXPECT_EQ(K->h0()->dimension(), 1);
  EXPECT_EQ(seq_depth(K, m, self(K)), 0);
  EXPECT_FALSE(is_local_cm(K));
  EXPECT_EQ(cm_certify(K), Verdict3::no);
  EXPECT_FALSE(K->underlying().homology_hilbert(-1).is_zero());
}

TEST(ConstantAmplitude, PreservedByRegularKoszul) {
  std::vector<std::pair<DGRingPtr, const char*>> cases;
  auto N = qring({"x", "y"}, {"x*y"});
  cases.push_back({ring_of(N), "x+y"});
  auto Q = qring({"x", "y", "z", "w"}, {"x*y-z*w"});
  cases.push_back({ring_of(Q), "x"});
  auto B = qring({"x", "y"}, {"x*y"});
  cases.push_back({trivial_extension(B, FPModule::free(B, {0}), 1), "x+y"});
  for (const auto& [a, t] : cases) {
    Polynomial x = P(a->base(), t);
    ASSERT_TRUE(has_constant_amplitude(a));
    ASSERT_TRUE(is_regular(self(a), x).regular);
    EXPECT_TRUE(has_constant_amplitude(koszul(a, {x}))) << t;
  }
}

TEST(HomotopyFiber, RejectsUnitImage) {
  auto B = qring({"x"});
  EXPECT_THROW(homotopy_fiber(Ps(B, {"1"}), ring_of(B)), InputError);
  auto F = homotopy_fiber(Ps(B, {"x"}), ring_of(B));
  EXPECT_EQ(F.fiber->amp(), 0);
}

TEST(FlatDim, MiracleFlatnessCases) {
  auto N = qring({"u", "v"}, {"u*v"});
  auto r1 = flatdim_over_regular(Ps(N, {"u+v"}), ring_of(N));
  EXPECT_EQ(r1.flatdim, 0);
  EXPECT_EQ(r1.formula, 0);
  EXPECT_TRUE(r1.hypotheses_met);

  auto L = qring({"x"});
  auto r2 = flatdim_over_regular({Polynomial(L->ring())}, ring_of(L));
  EXPECT_EQ(r2.flatdim, 1);
  EXPECT_EQ(r2.formula, 1);

  auto Y = qring({"x", "y"}, {"y^2"});
  auto r3 = flatdim_over_regular(Ps(Y, {"x"}), ring_of(Y));
  EXPECT_EQ(r3.flatdim, 0);
  EXPECT_EQ(r3.amp_b, 0);
  EXPECT_EQ(cm_certify(ring_of(Y)), Verdict3::yes);

  auto E = qring({"x", "y"}, {"y^2", "x*y"});
  auto r4 = flatdim_over_regular(Ps(E, {"x"}), ring_of(E));
  EXPECT_EQ(r4.flatdim, 1);
  EXPECT_EQ(r4.amp_b, 0);
  EXPECT_EQ(cm_certify(ring_of(E)), Verdict3::no);
}

TEST(InvariantReport, KoszulOnNode) {
  auto N = qring({"x", "y"}, {"x*y"});
  auto K = koszul(ring_of(N), Ps(N, {"x"}));
  auto r = compute_invariants(K, {Ps(N, {"y"})});
  EXPECT_EQ(r.amp.inf, -1);
  EXPECT_EQ(r.dim_h0, 1);
  EXPECT_EQ(r.local_cm, Verdict3::yes);
  EXPECT_EQ(K->underlying().homology_hilbert(0), QuotientRing::make(N->ring(), Ps(N, {"x"}))->hilbert_series());
  ASSERT_EQ(r.ideals.size(), 1u);
  EXPECT_EQ(r.ideals[0].seq_depth, r.ideals[0].depth - r.amp.inf);
  EXPECT_EQ(static_cast<int>(r.ideals[0].witness.elements.size()), r.ideals[0].seq_depth);
  EXPECT_LE(r.seq_depth_at_irrelevant, r.dim_h0);
}
