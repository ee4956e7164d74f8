#pragma once

#include <map>
#include <string>
#include <vector>

#include "kdg/dg.hpp"
#include "kdg/invariants.hpp"

namespace kdg {

/// Graded ranks of a complex of free modules: homological index -> internal degree -> rank.
struct BettiTable {
  std::map<int, std::map<int, int>> graded;

  static BettiTable of(const Complex& free_complex);
  /// Total ranks by homological index, from the lowest index present.
  std::vector<int> totals() const;
  int length() const;
  std::string to_string() const;
};

/// The polynomial ring a quotient ring is presented over, as a QuotientRing with no relations.
QRingPtr ambient_of(const QuotientRing& q);

struct FreeResolution {
  /// Term-wise free over the ambient polynomial ring; cohomological indexing.
  Complex complex;
  bool minimal = false;
  BettiTable betti;
};

/// Resolution over S of a module over Q = S/J; sits in degrees -length..0.
FreeResolution free_resolution(const FPModule& m, bool minimal = true);
/// Resolution over S of a bounded complex over Q: term-wise resolutions glued by lifted
/// differentials and higher homotopies, then minimized when asked.
FreeResolution free_resolution(const Complex& c, bool minimal = true);

struct DualizingComplex {
  Complex complex;  // over the ambient polynomial ring
  int shift = 0;    // Hom_S(F, S)[shift]
  std::string origin;
};

/// Hom_S(F, S)[m] for F a minimal resolution of Q; inf = -dim Q.
DualizingComplex dualizing_complex(const QRingPtr& q);
/// K(S; lifts) ⊗_S R_A shifted by -n, for K a Koszul DG-ring over the ring A.
DualizingComplex dualizing_of_koszul(const DGRingPtr& k);

struct GorensteinRingReport {
  bool gorenstein = false;
  int codim = 0;
  BettiTable betti;
};
GorensteinRingReport is_gorenstein_ring(const QRingPtr& q);

struct SelfDualityReport {
  bool isomorphic = false;
  int n = 0;
  int twist = 0;  // target twisted by this to make the map degree 0
  std::map<int, PolyMatrix> components;
  std::string failure;
};
/// Explicit ±1 chain isomorphism Hom(K, A) -> K[-n] (twisted), checked square by square.
SelfDualityReport self_duality_check(const DGRingPtr& k);

/// a^i ≅ b^(i+shift) with HS(a^i) = t^twist HS(b^(i+shift)) for every i.
struct HomologyMatch {
  bool found = false;
  int shift = 0;
  int twist = 0;
};
HomologyMatch match_up_to_shift(const std::map<int, HilbertSeries>& a, const std::map<int, HilbertSeries>& b);

struct GorensteinDGReport {
  Verdict3 verdict = Verdict3::unknown;
  bool ring_gorenstein = false;
  HomologyMatch match;
  /// Top homology of D cyclic with the same annihilator as H^0(K); unset when not cyclic.
  std::optional<bool> annihilators_agree;
  std::string level;
};
GorensteinDGReport gorenstein_dg_check(const DGRingPtr& k);

/// Complex with every term's twists moved by k.
Complex twisted(const Complex& c, int k);

}  // namespace kdg
