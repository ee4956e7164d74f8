#include "kdg/invariants.hpp"

#include <algorithm>
#include <cstdint>

#include "kdg/module.hpp"

namespace kdg {

namespace {

QRingPtr with_ideal(const QuotientRing& q, const std::vector<Polynomial>& more) {
  std::vector<Polynomial> gens = q.ideal();
  for (const auto& p : more)
    if (!p.is_zero()) gens.push_back(p);
  return QuotientRing::make(q.ring(), std::move(gens));
}

void require_same_ring(const QuotientRing& q, const std::vector<Polynomial>& ps) {
  for (const auto& p : ps)
    if (!p.ring()->same_as(*q.ring())) throw InputError("ideal generator " + p.to_string() + " lives in another ring");
}

void require_proper(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens) {
  require_same_ring(*a->base(), ideal_gens);
  if (with_ideal(*a->h0(), ideal_gens)->is_zero_ring()) throw InputError("ideal is the unit ideal of H^0");
}

// Deterministic coefficient stream for candidate combinations.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed * 0x9E3779B97F4A7C15ULL + 1) {}
  std::int64_t next() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((s_ >> 33) % 97) + 1;
  }

 private:
  std::uint64_t s_;
};

// Homogeneous candidates of the ideal, in the order they are tried.
std::vector<Polynomial> candidates(const QuotientRing& q, const std::vector<Polynomial>& gens_in,
                                   const SearchBudget& budget, std::uint64_t seed) {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_in) {
    Polynomial r = q.reduce(g);
    if (r.is_zero()) continue;
    if (!r.degree()) throw InhomogeneousInput("ideal generator " + g.to_string() + " is not homogeneous");
    gens.push_back(std::move(r));
  }
  std::vector<Polynomial> out;
  auto push = [&](Polynomial p) {
    p = q.reduce(p);
    if (p.is_zero()) return;
    for (const auto& o : out)
      if (o == p) return;
    out.push_back(std::move(p));
  };
  for (const auto& g : gens) push(g);
  if (gens.empty()) return out;
  int dmin = *gens.front().degree();
  for (const auto& g : gens) dmin = std::min(dmin, *g.degree());

  const RingPtr& r = q.ring();
  const Field& f = q.field();
  for (int e = dmin; e <= dmin + budget.extra_degrees; ++e) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
      int k = e - *g.degree();
      if (k < 0) continue;
      for (const auto& m : monomials_of_degree(r->nvars(), k)) {
        Polynomial p = q.reduce(Polynomial::monomial(r, m, f.from_int(1)) * g);
        if (p.is_zero() || std::find(basis.begin(), basis.end(), p) != basis.end()) continue;
        basis.push_back(std::move(p));
      }
    }
    if (basis.empty()) continue;
    Lcg lcg(seed * 131 + static_cast<std::uint64_t>(e));
    for (int c = 0; c < budget.combinations; ++c) {
      Polynomial s(r);
      for (const auto& b : basis) s += c == 0 ? b : b.scaled(f.from_int(lcg.next()));
      push(std::move(s));
    }
    for (auto& b : basis) push(std::move(b));
  }
  return out;
}

}  // namespace

std::string to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::yes:
      return "true";
    case Verdict3::no:
      return "false";
    case Verdict3::unknown:
      return "unknown";
  }
  return "unknown";
}

AmpProfile amp_profile(const Complex& c) { return {c.inf(), c.sup(), c.amp()}; }

int lcdim(const Complex& c) {
  int best = kMinusInfinity;
  if (c.empty()) return best;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    HilbertSeries h = c.homology_hilbert(n);
    if (!h.is_zero()) best = std::max(best, h.dimension() + n);
  }
  return best;
}

RegularityCertificate is_regular(const DGModule& m, const Polynomial& x) {
  const Complex& c = m.underlying;
  int inf = c.inf();
  if (inf == kPlusInfinity) throw InputError("regularity on an acyclic module");
  const QRingPtr& q = c.base();
  require_same_ring(*q, {x});
  FPModule h = c.homology(inf);
  RegularityCertificate cert;
  cert.degree_of_homology = inf;
  Polynomial xr = q->reduce(x);
  HilbertSeries hs = h.hilbert_series();
  if (xr.is_zero()) {
    cert.kernel_series = hs;
    return cert;
  }
  auto d = xr.degree();
  if (!d) throw InhomogeneousInput("element " + x.to_string() + " is not homogeneous");
  // 0 -> K -> H -> H(d) -> (H/xH)(d) -> 0, K graded inside H as kernel() does
  const std::size_t n = h.ambient_rank();
  PolyMatrix xi = PolyMatrix::identity(q->ring(), n);
  for (std::size_t i = 0; i < n; ++i) xi(i, i) = xr;
  FPModule quot = FPModule::cokernel(q, h.twists(), PolyMatrix::hstack({h.relations(), xi}, n));
  cert.kernel_series = hs - hs.shifted(-*d) + quot.hilbert_series().shifted(-*d);
  cert.regular = cert.kernel_series.is_zero();
  return cert;
}

int depth(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens, const DGModule& m) {
  require_proper(a, ideal_gens);
  if (m.underlying.inf() == kPlusInfinity) return kPlusInfinity;
  DGModule k = koszul_module(m, ideal_gens);
  int inf = k.underlying.inf();
  if (inf == kPlusInfinity) return kPlusInfinity;
  return inf + static_cast<int>(ideal_gens.size());
}

int seq_depth(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens, const DGModule& m) {
  int d = depth(a, ideal_gens, m);
  if (d == kPlusInfinity) return kPlusInfinity;
  return d - m.underlying.inf();
}

RegularSequenceWitness greedy_regular_sequence(const DGRingPtr& a, const std::vector<Polynomial>& ideal_gens,
                                               const DGModule& m, const SearchBudget& budget) {
  require_proper(a, ideal_gens);
  RegularSequenceWitness w;
  DGModule current = m;
  for (std::uint64_t step = 0;; ++step) {
    if (current.underlying.inf() == kPlusInfinity) return w;
    bool found = false;
    for (const auto& cand : candidates(*a->base(), ideal_gens, budget, step)) {
      if (w.tests >= budget.max_tests) {
        w.exhausted = true;
        return w;
      }
      ++w.tests;
      RegularityCertificate cert = is_regular(current, cand);
      if (!cert.regular) continue;
      w.elements.push_back(cand);
      w.certificates.push_back(cert.kernel_series);
      current = koszul_module(current, {cand});
      found = true;
      break;
    }
    if (!found) return w;
  }
}

std::vector<Polynomial> irrelevant_ideal(const QuotientRing& q) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < q.nvars(); ++i) out.push_back(q.variable(i));
  return out;
}

bool is_local_cm(const DGRingPtr& a) {
  if (a->h0()->is_zero_ring()) throw InputError("local Cohen-Macaulay test on an acyclic DG-ring");
  int dim = a->h0()->dimension();
  if (dim == 0) return true;
  return seq_depth(a, irrelevant_ideal(*a->base()), DGModule::of_ring(a)) == dim;
}

bool has_constant_amplitude(const DGRingPtr& a) {
  int inf = a->inf();
  if (inf == kPlusInfinity) throw InputError("constant amplitude test on an acyclic DG-ring");
  for (const auto& g : a->underlying().homology(inf).annihilator())
    if (!is_nilpotent(g, *a->h0())) return false;
  return true;
}

Verdict3 cm_certify(const DGRingPtr& a) {
  if (!is_local_cm(a)) return Verdict3::no;
  return has_constant_amplitude(a) ? Verdict3::yes : Verdict3::unknown;
}

HomotopyFiber homotopy_fiber(const std::vector<Polynomial>& images, const DGRingPtr& b) {
  require_same_ring(*b->base(), images);
  for (const auto& p : images) {
    Polynomial r = b->h0()->reduce(p);
    if (!r.is_zero() && r.degree() && *r.degree() == 0)
      throw InputError("image " + p.to_string() + " is a unit, the map is not local");
  }
  HomotopyFiber f;
  f.fiber = koszul(b, images);
  std::string imgs;
  for (std::size_t i = 0; i < images.size(); ++i) imgs += (i ? ", " : "") + images[i].to_string();
  f.provenance = "homotopy fiber of the map sending the source variables to (" + imgs + ")";
  return f;
}

FlatDimReport flatdim_over_regular(const std::vector<Polynomial>& images, const DGRingPtr& b) {
  FlatDimReport r;
  HomotopyFiber f = homotopy_fiber(images, b);
  r.flatdim = f.fiber->amp();
  r.amp_b = b->amp();
  int fiber_dim = with_ideal(*b->h0(), images)->dimension();
  r.formula = static_cast<int>(images.size()) - b->h0()->dimension() + fiber_dim + r.amp_b;
  r.hypotheses_met = cm_certify(b) == Verdict3::yes;
  return r;
}

InvariantReport compute_invariants(const DGRingPtr& a, const std::vector<std::vector<Polynomial>>& ideals,
                                   const SearchBudget& budget) {
  InvariantReport r;
  const Complex& c = a->underlying();
  r.amp = amp_profile(c);
  r.dim_h0 = a->h0()->dimension();
  r.lcdim = lcdim(c);
  if (a->h0()->is_zero_ring()) return r;
  DGModule self = DGModule::of_ring(a);
  auto m = irrelevant_ideal(*a->base());
  r.depth_at_irrelevant = depth(a, m, self);
  r.seq_depth_at_irrelevant = r.depth_at_irrelevant - r.amp.inf;
  for (const auto& gens : ideals) {
    IdealEntry e;
    e.generators = gens;
    e.depth = depth(a, gens, self);
    e.seq_depth = e.depth - r.amp.inf;
    e.witness = greedy_regular_sequence(a, gens, self, budget);
    r.ideals.push_back(std::move(e));
  }
  bool lcm = r.dim_h0 == 0 || r.seq_depth_at_irrelevant == r.dim_h0;
  r.local_cm = lcm ? Verdict3::yes : Verdict3::no;
  r.constant_amplitude = has_constant_amplitude(a) ? Verdict3::yes : Verdict3::no;
  r.cm_certified = !lcm ? Verdict3::no : r.constant_amplitude == Verdict3::yes ? Verdict3::yes : Verdict3::unknown;
  return r;
}

}  // namespace kdg
