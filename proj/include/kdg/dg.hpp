#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kdg/complex.hpp"

namespace kdg {

/// Graded ring map Q_A -> Q_B given by the images of the variables of Q_A.
class RingMap {
 public:
  RingMap(QRingPtr source, QRingPtr target, std::vector<Polynomial> images);

  const QRingPtr& source() const { return source_; }
  const QRingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  /// Substitution, reduced in the target.
  Polynomial apply(const Polynomial& p) const;
  /// Every generator of J_A maps into J_B.
  bool is_well_defined() const;
  /// Same ambient variables, identity on them, J_A ⊆ J_B.
  bool is_quotient_map() const;
  /// Entry-wise image of a term-wise free complex (the complex-level C ⊗_A B).
  Complex apply(const Complex& c) const;

 private:
  QRingPtr source_, target_;
  std::vector<Polynomial> images_;
};

/// Representable non-positive commutative DG-ring: the underlying complex of Q-modules plus
/// how it was built. The multiplication is not stored; every invariant here is read off the
/// underlying complex and the Q-action.
class DGRing : public std::enable_shared_from_this<DGRing> {
 public:
  enum class Kind { ring, koszul, trivial_extension, tensor };

  const QRingPtr& base() const { return base_; }
  const Complex& underlying() const { return underlying_; }
  /// H^0 as a quotient of Q.
  const QRingPtr& h0() const { return h0_; }
  Kind kind() const { return kind_; }
  const std::shared_ptr<const DGRing>& parent() const { return parent_; }
  /// Koszul lifts (kind koszul) or right factor lifts (kind tensor), reduced in Q.
  const std::vector<Polynomial>& lifts() const { return lifts_; }
  /// Module and shift of a trivial extension.
  const FPModule& extension_module() const { return extension_module_; }
  int extension_shift() const { return extension_shift_; }

  /// A plain ring at the bottom of a chain of Koszul constructions, with all lifts in order;
  /// nullptr when the chain passes through a trivial extension or tensor.
  std::shared_ptr<const DGRing> koszul_root() const;
  std::vector<Polynomial> all_lifts() const;

  int inf() const { return underlying_.inf(); }
  int sup() const { return underlying_.sup(); }
  int amp() const { return underlying_.amp(); }

  std::string provenance() const;

  static std::shared_ptr<const DGRing> make(QRingPtr base, Complex underlying, QRingPtr h0, Kind kind,
                                            std::shared_ptr<const DGRing> parent, std::vector<Polynomial> lifts,
                                            FPModule extension_module = {}, int extension_shift = 0);

 private:
  DGRing() = default;

  QRingPtr base_;
  Complex underlying_;
  QRingPtr h0_;
  Kind kind_ = Kind::ring;
  std::shared_ptr<const DGRing> parent_;
  std::vector<Polynomial> lifts_;
  FPModule extension_module_;
  int extension_shift_ = 0;
};

using DGRingPtr = std::shared_ptr<const DGRing>;

/// DG-module over a DG-ring, by its underlying complex of Q-modules.
struct DGModule {
  DGRingPtr over;
  Complex underlying;
  bool bounded_below = true;

  static DGModule of_ring(const DGRingPtr& a) { return {a, a->underlying(), true}; }
};

DGRingPtr dg_from_ring(QRingPtr q);
/// Q ⋉ M[n]: Q in degree 0, M in degree -n, zero differential. n >= 1.
DGRingPtr trivial_extension(QRingPtr q, const FPModule& m, int n);
/// Tot(A ⊗_Q K(Q; lifts)); lifts are reduced in Q and must be homogeneous. Empty list returns A.
DGRingPtr koszul(const DGRingPtr& a, const std::vector<Polynomial>& elements);
/// L ⊗_Q R for R a Koszul DG-ring over the plain ring Q.
DGRingPtr tensor(const DGRingPtr& left, const DGRingPtr& right);
DGModule koszul_module(const DGModule& m, const std::vector<Polynomial>& elements);

/// K(B; f(lifts)) for K a Koszul DG-ring over a plain ring A and f : A -> B.
DGRingPtr base_change(const DGRingPtr& k, const RingMap& f);

struct LiftIndependenceReport {
  std::map<int, HilbertSeries> original, alternate;
  bool agree = false;
};

/// Builds koszul(A, elements) and koszul(A, alternates) and compares homology degree by degree.
/// Throws InputError unless each alternate is congruent to its original modulo the H^0 ideal.
LiftIndependenceReport lift_independence_check(const DGRingPtr& a, const std::vector<Polynomial>& elements,
                                               const std::vector<Polynomial>& alternates);

/// Degree-by-degree equality of two homology tables (missing degrees count as zero).
bool same_homology(const std::map<int, HilbertSeries>& a, const std::map<int, HilbertSeries>& b);

}  // namespace kdg
