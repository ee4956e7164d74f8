#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kdg/groebner.hpp"

namespace kdg {

/// Q = S / J for a homogeneous ideal J of the ambient polynomial ring S.
class QuotientRing {
 public:
  QuotientRing(RingPtr ring, std::vector<Polynomial> ideal);
  static std::shared_ptr<const QuotientRing> make(RingPtr ring, std::vector<Polynomial> ideal = {});

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }
  /// Nonzero generators of J as given.
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const GroebnerBasis& groebner() const { return gb_; }
  bool is_polynomial_ring() const { return gb_.size() == 0; }
  bool is_zero_ring() const { return zero_ring_; }

  Polynomial reduce(const Polynomial& p) const;
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }

  HilbertSeries hilbert_series() const;
  /// Krull dimension; kMinusInfinity for the zero ring.
  int dimension() const { return dim_; }

  /// Same ambient ring and same ideal (compared through reduced Gröbner bases).
  bool same_as(const QuotientRing& other) const;

  Polynomial zero() const { return Polynomial(ring_); }
  Polynomial one() const { return Polynomial::constant(ring_, 1); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ring_, i); }

  std::string describe() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> ideal_;
  GroebnerBasis gb_;
  bool zero_ring_ = false;
  int dim_ = 0;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

/// g in sqrt(J), decided by 1 ∈ J + (1 - t·g) in S[t].
bool is_nilpotent(const Polynomial& g, const QuotientRing& q);

}  // namespace kdg
