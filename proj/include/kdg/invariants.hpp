#pragma once

#include <string>
#include <vector>

#include "kdg/dg.hpp"

namespace kdg {

enum class Verdict3 { yes, no, unknown };
std::string to_string(Verdict3 v);

struct AmpProfile {
  int inf = kPlusInfinity, sup = kMinusInfinity, amp = kMinusInfinity;
};
AmpProfile amp_profile(const Complex& c);

/// max over n of dim H^n + n; kMinusInfinity for an acyclic complex.
int lcdim(const Complex& c);

/// Multiplication by x on H^inf(M); regular when the kernel Hilbert series vanishes.
struct RegularityCertificate {
  bool regular = false;
  int degree_of_homology = 0;  // the inf used
  HilbertSeries kernel_series;
};
/// Throws InputError for acyclic M.
RegularityCertificate is_regular(const DGModule& m, const Polynomial& x);

/// inf(K(M; gens)) + n. Throws InputError when the gens generate the unit ideal of H^0(A).
int depth(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens, const DGModule& m);
/// depth - inf(M).
int seq_depth(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens, const DGModule& m);

/// Candidate search for a regular sequence inside an ideal.
struct SearchBudget {
  int max_tests = 64;       // regularity tests per run
  int extra_degrees = 1;    // candidate degrees from the lowest generator degree up to this much higher
  int combinations = 3;     // linear combinations tried per degree
};

struct RegularSequenceWitness {
  std::vector<Polynomial> elements;
  std::vector<HilbertSeries> certificates;  // kernel series of each accepted element (all zero)
  int tests = 0;
  /// The budget ran out before every candidate of the last step was tested.
  bool exhausted = false;
};
RegularSequenceWitness greedy_regular_sequence(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens,
                                               const DGModule& m, const SearchBudget& budget = {});

/// Generators of the irrelevant ideal (the variables).
std::vector<Polynomial> irrelevant_ideal(const QuotientRing& q);

bool is_local_cm(const DGRingPtr& a);
/// Every generator of ann H^inf(A) is nilpotent in H^0(A).
bool has_constant_amplitude(const DGRingPtr& a);
/// no: not local-CM; yes: local-CM with constant amplitude; unknown otherwise.
Verdict3 cm_certify(const DGRingPtr& a);

struct HomotopyFiber {
  DGRingPtr fiber;
  std::string provenance;
};
/// K(B; images) for a local map from a regular ring in images.size() variables.
/// Throws InputError when an image is a unit of H^0(B).
HomotopyFiber homotopy_fiber(const std::vector<Polynomial>& images, const DGRingPtr& b);

struct FlatDimReport {
  int flatdim = 0;       // amp of the homotopy fiber
  int formula = 0;       // dim A - dim H0(B) + dim H0(B)/m H0(B) + amp(B)
  bool hypotheses_met = false;  // B CM-certified with constant amplitude
  int amp_b = 0;
};
FlatDimReport flatdim_over_regular(const std::vector<Polynomial>& images, const DGRingPtr& b);

struct IdealEntry {
  std::vector<Polynomial> generators;
  int depth = 0;
  int seq_depth = 0;
  RegularSequenceWitness witness;
};

struct InvariantReport {
  AmpProfile amp;
  int dim_h0 = kMinusInfinity;
  int lcdim = kMinusInfinity;
  int depth_at_irrelevant = 0;
  int seq_depth_at_irrelevant = 0;
  std::vector<IdealEntry> ideals;
  Verdict3 local_cm = Verdict3::unknown, constant_amplitude = Verdict3::unknown, cm_certified = Verdict3::unknown;
};
InvariantReport compute_invariants(const DGRingPtr& a, const std::vector<std::vector<Polynomial>>& ideals,
                                   const SearchBudget& budget = {});

}  // namespace kdg
