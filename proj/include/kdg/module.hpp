#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "kdg/matrix.hpp"
#include "kdg/quotient_ring.hpp"

namespace kdg {

/// Finitely presented graded module over Q = S/J, as a subquotient of a graded free module F:
///   M = (image(generators) + image(relations) + J·F) / (image(relations) + J·F).
/// "Cokernel form" means the generators are the basis of F, so M = F / (relations + J·F).
class FPModule {
 public:
  FPModule() = default;
  FPModule(QRingPtr base, std::vector<int> twists, PolyMatrix generators,
           std::vector<int> generator_degrees, PolyMatrix relations);

  static FPModule cokernel(QRingPtr base, std::vector<int> twists, PolyMatrix relations);
  static FPModule free(QRingPtr base, std::vector<int> twists);
  static FPModule zero(QRingPtr base);
  /// Q / (gens), generated in degree `twist`.
  static FPModule cyclic(QRingPtr base, const std::vector<Polynomial>& ideal_gens, int twist = 0);
  /// The ideal (gens) ⊆ Q as a submodule.
  static FPModule ideal(QRingPtr base, const std::vector<Polynomial>& gens);

  const QRingPtr& base() const { return base_; }
  const RingPtr& ring() const { return base_->ring(); }
  const std::vector<int>& twists() const { return twists_; }
  std::size_t ambient_rank() const { return twists_.size(); }
  bool is_cokernel_form() const { return cokernel_form_; }
  /// Cokernel form without relations: a free Q-module.
  bool is_free() const { return cokernel_form_ && relations_.cols() == 0; }

  const PolyMatrix& generators() const { return generators_; }
  const std::vector<int>& generator_degrees() const { return generator_degrees_; }
  std::size_t num_generators() const { return generator_degrees_.size(); }
  const PolyMatrix& relations() const { return relations_; }

  /// TOP order on F with the module's twists.
  ModuleOrder ambient_order() const { return ModuleOrder::top(ring()->order(), twists_); }
  /// relations + J·F as module elements of F.
  std::vector<Vec> submodule_n() const;
  std::vector<Vec> generator_vecs() const;

  /// Gröbner basis of relations + J·F.
  const GroebnerBasis& relation_gb() const;
  HilbertSeries hilbert_series() const;
  /// Krull dimension; kMinusInfinity for the zero module.
  int dimension() const;
  bool is_zero() const;

  /// Cokernel form with a minimal generating set and minimal relations (over Q).
  FPModule minimal_presentation() const;
  /// Annihilator as generators of an ideal of Q containing J, reduced mod J.
  std::vector<Polynomial> annihilator() const;
  /// Same module with every degree raised by k (twists and generator degrees).
  FPModule degree_shifted(int k) const;

  /// The element of F is zero in M (lies in relations + J·F).
  bool is_zero_element(const Vec& f) const;

  std::string describe() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<GroebnerBasis> relation_gb;
    std::optional<HilbertSeries> hilbert;
    std::optional<std::vector<Polynomial>> annihilator;
    std::shared_ptr<const FPModule> minimal;
  };

  QRingPtr base_;
  std::vector<int> twists_;
  bool cokernel_form_ = true;
  PolyMatrix generators_;
  std::vector<int> generator_degrees_;
  PolyMatrix relations_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Graded degree-0 map between FPModules: column j is the image of source generator j in the
/// target's ambient free module.
class ModuleMap {
 public:
  ModuleMap(FPModule source, FPModule target, PolyMatrix matrix);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }

  /// Each source relation maps into the target's relations (normal-form check).
  bool is_well_defined() const;

 private:
  FPModule source_, target_;
  PolyMatrix matrix_;
};

/// Kernel as a subquotient of the source; throws InputError for ill-defined maps.
FPModule kernel(const ModuleMap& f);

/// Multiplication by a homogeneous element of Q on M.
ModuleMap multiplication_map(const FPModule& m, const Polynomial& r);

/// Sub-multiset of columns forming a minimal generating set of (cols + extra), greedy by degree.
std::vector<std::size_t> minimal_generator_indices(const RingPtr& ring, const ModuleOrder& order,
                                                   const std::vector<Vec>& cols,
                                                   const std::vector<Vec>& extra);

/// Minimal generators of an ideal of Q (reduced mod J, zeros dropped).
std::vector<Polynomial> minimal_ideal_generators(const QuotientRing& q, const std::vector<Polynomial>& gens);

}  // namespace kdg
