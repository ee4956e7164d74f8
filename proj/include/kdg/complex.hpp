#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "kdg/module.hpp"

namespace kdg {

/// Bounded cochain complex of graded Q-modules, cohomological indexing:
///   term(lo) -> term(lo+1) -> ... -> term(hi),  d^i : term(i) -> term(i+1).
/// Every term is in cokernel form. Construction checks that each differential is homogeneous of
/// degree 0, respects the relations, and squares to zero.
class Complex {
 public:
  Complex() = default;
  Complex(QRingPtr base, int lo, std::vector<FPModule> terms, std::vector<PolyMatrix> differentials);

  static Complex zero(QRingPtr base);
  static Complex concentrated(const FPModule& m, int degree = 0);
  /// K(Q; a_1..a_n): term(-p) has basis e_S for the p-subsets S in colex order, twist sum deg a_j,
  /// d(e_S) = sum_k (-1)^k a_{s_k} e_{S \ s_k}.
  static Complex koszul(QRingPtr base, const std::vector<Polynomial>& elements);

  const QRingPtr& base() const { return base_; }
  const RingPtr& ring() const { return base_->ring(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  bool in_support(int i) const { return i >= lo_ && i <= hi(); }

  /// Zero module outside the support.
  FPModule term(int i) const;
  /// Matrix rank(term(i+1)) x rank(term(i)); zero outside the support.
  PolyMatrix differential(int i) const;
  /// Every term free over Q.
  bool is_free() const;

  /// Hilbert series of H^i, from three quotient Hilbert series (no kernels needed).
  HilbertSeries homology_hilbert(int i) const;
  /// H^i as a minimal presentation.
  FPModule homology(int i) const;
  /// Least / greatest degree with H^i != 0; kPlusInfinity / kMinusInfinity when acyclic.
  int inf() const;
  int sup() const;
  /// sup - inf, kMinusInfinity when acyclic.
  int amp() const;
  /// Degree i -> HS(H^i) over the support, zero entries included.
  std::map<int, HilbertSeries> homology_table() const;

  std::string describe() const;

 private:
  void verify() const;
  HilbertSeries quotient_by_image(int i) const;

  struct Cache {
    std::mutex mu;
    std::map<int, HilbertSeries> quotient_hs;
    std::map<int, HilbertSeries> homology_hs;
    std::map<int, std::shared_ptr<const FPModule>> homology;
  };

  QRingPtr base_;
  int lo_ = 0;
  std::vector<FPModule> terms_;
  std::vector<PolyMatrix> diffs_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Degree-0 chain map; component(i) : source.term(i) -> target.term(i).
class ChainMap {
 public:
  ChainMap(Complex source, Complex target, std::map<int, PolyMatrix> components);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  PolyMatrix component(int i) const;

  /// Each component respects relations and f d = d f modulo the target relations.
  bool is_chain_map() const;

 private:
  Complex source_, target_;
  std::map<int, PolyMatrix> components_;
};

/// Bounded double complex: term(p,q), horizontal p -> p+1, vertical q -> q+1, commuting squares.
class Bicomplex {
 public:
  Bicomplex(QRingPtr base, int p_lo, int q_lo, std::vector<std::vector<FPModule>> terms,
            std::vector<std::vector<PolyMatrix>> horizontal, std::vector<std::vector<PolyMatrix>> vertical);

  const QRingPtr& base() const { return base_; }
  int p_lo() const { return p_lo_; }
  int q_lo() const { return q_lo_; }
  int p_hi() const { return p_lo_ + static_cast<int>(terms_.size()) - 1; }
  int q_hi() const { return terms_.empty() ? q_lo_ - 1 : q_lo_ + static_cast<int>(terms_[0].size()) - 1; }

  FPModule term(int p, int q) const;
  PolyMatrix horizontal(int p, int q) const;
  PolyMatrix vertical(int p, int q) const;

  /// Throws InputError when a row or column fails d² = 0 or a square fails to commute.
  void verify() const;

 private:
  QRingPtr base_;
  int p_lo_ = 0, q_lo_ = 0;
  std::vector<std::vector<FPModule>> terms_;
  std::vector<std::vector<PolyMatrix>> h_, v_;
};

/// Tot^n = sum_{p+q=n} term(p,q), blocks by increasing p; d = d_h + (-1)^p d_v.
Complex total_complex(const Bicomplex& b);

/// C ⊗_Q D; one side must be term-wise free. Basis of term(p) ⊗ term(q) is the Kronecker order.
Bicomplex tensor_bicomplex(const Complex& c, const Complex& d);
Complex tensor_complexes(const Complex& c, const Complex& d);

/// Hom_Q(C, Q): term(i) = dual of C.term(-i) with negated twists, d^i = (-1)^(i+1) (d_C^(-i-1))^T.
Complex hom_dual(const Complex& c);

/// C[j]: term(i) = C.term(i + j), differential times (-1)^j.
Complex shift(const Complex& c, int j);

/// cone(f)^i = C^(i+1) ⊕ D^i with d = [[-d_C, 0], [f, d_D]].
Complex cone(const ChainMap& f);

/// Cancels unit entries between adjacent free terms; homology Hilbert series are asserted equal.
Complex minimize(const Complex& c);
FPModule minimize(const FPModule& m);

/// Entry reduces to a nonzero constant in Q.
bool is_unit_entry(const Polynomial& p, const QuotientRing& q);

/// p-subsets of {0..n-1}, colex order (largest element compared first).
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t p);

}  // namespace kdg
