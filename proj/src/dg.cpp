#include "kdg/dg.hpp"

#include <sstream>

namespace kdg {

namespace {

std::vector<Polynomial> reduced_lifts(const QuotientRing& q, const std::vector<Polynomial>& elements) {
  std::vector<Polynomial> out;
  for (const auto& e : elements) {
    if (!e.ring()->same_as(*q.ring())) throw InputError("element lives in a different ring");
    Polynomial r = q.reduce(e);
    if (!r.is_zero() && !r.degree())
      throw InhomogeneousInput("element " + e.to_string() + " has no homogeneous representative");
    out.push_back(std::move(r));
  }
  return out;
}

QRingPtr extend_ideal(const QuotientRing& h0, const std::vector<Polynomial>& more) {
  std::vector<Polynomial> gens = h0.ideal();
  for (const auto& p : more)
    if (!p.is_zero()) gens.push_back(p);
  return QuotientRing::make(h0.ring(), std::move(gens));
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

}  // namespace

RingMap::RingMap(QRingPtr source, QRingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->nvars()) throw InputError("ring map needs one image per source variable");
  if (!(source_->field() == target_->field())) throw InputError("ring map between different fields");
  for (const auto& p : images_)
    if (!p.ring()->same_as(*target_->ring())) throw InputError("ring map image outside the target ring");
}

Polynomial RingMap::apply(const Polynomial& p) const {
  const RingPtr& r = target_->ring();
  Polynomial out(r);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(r, t.coef);
    for (std::size_t i = 0; i < t.mono.size() && !term.is_zero(); ++i)
      if (t.mono[i] > 0) term = term * images_[i].pow(t.mono[i]);
    out += term;
  }
  return target_->reduce(out);
}

bool RingMap::is_well_defined() const {
  for (const auto& g : source_->ideal())
    if (!apply(g).is_zero()) return false;
  return true;
}

bool RingMap::is_quotient_map() const {
  if (!source_->ring()->same_as(*target_->ring())) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!(images_[i] == Polynomial::variable(target_->ring(), i))) return false;
  return is_well_defined();
}

Complex RingMap::apply(const Complex& c) const {
  if (!c.is_free()) throw InputError("base change of a complex needs free terms");
  if (c.empty()) return Complex::zero(target_);
  std::vector<FPModule> terms;
  std::vector<PolyMatrix> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) terms.push_back(FPModule::free(target_, c.term(i).twists()));
  for (int i = c.lo(); i < c.hi(); ++i) {
    PolyMatrix d = c.differential(i);
    PolyMatrix m(target_->ring(), d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t k = 0; k < d.cols(); ++k) m(r, k) = apply(d(r, k));
    diffs.push_back(std::move(m));
  }
  return Complex(target_, c.lo(), std::move(terms), std::move(diffs));
}

// ---------------------------------------------------------------------------

DGRingPtr DGRing::make(QRingPtr base, Complex underlying, QRingPtr h0, Kind kind, DGRingPtr parent,
                       std::vector<Polynomial> lifts, FPModule extension_module, int extension_shift) {
  std::shared_ptr<DGRing> a(new DGRing());
  a->base_ = std::move(base);
  a->underlying_ = std::move(underlying);
  a->h0_ = std::move(h0);
  a->kind_ = kind;
  a->parent_ = std::move(parent);
  a->lifts_ = std::move(lifts);
  a->extension_module_ = std::move(extension_module);
  a->extension_shift_ = extension_shift;
  if (!a->underlying_.empty() && a->underlying_.hi() > 0)
    throw std::logic_error("DG-ring with terms in positive degree");
  if (!(a->underlying_.homology_hilbert(0) == a->h0_->hilbert_series()))
    throw std::logic_error("recorded H^0 does not match the homology of the underlying complex");
  return a;
}

DGRingPtr DGRing::koszul_root() const {
  DGRingPtr p = shared_from_this();
  while (p->kind_ == Kind::koszul) p = p->parent_;
  return p->kind_ == Kind::ring ? p : nullptr;
}

std::vector<Polynomial> DGRing::all_lifts() const {
  if (kind_ != Kind::koszul) return {};
  auto out = parent_->all_lifts();
  out.insert(out.end(), lifts_.begin(), lifts_.end());
  return out;
}

std::string DGRing::provenance() const {
  switch (kind_) {
    case Kind::ring:
      return "ring";
    case Kind::koszul:
      return "koszul(" + parent_->provenance() + "; " + join(lifts_) + ")";
    case Kind::trivial_extension:
      return "trivial_extension(ring; " + extension_module_.describe() + "; shift " + std::to_string(extension_shift_) + ")";
    case Kind::tensor:
      return "tensor(" + parent_->provenance() + "; koszul(ring; " + join(lifts_) + "))";
  }
  return "?";
}

DGRingPtr dg_from_ring(QRingPtr q) {
  Complex c = Complex::concentrated(FPModule::free(q, {0}));
  QRingPtr h0 = q;
  return DGRing::make(std::move(q), std::move(c), std::move(h0), DGRing::Kind::ring, nullptr, {});
}

DGRingPtr trivial_extension(QRingPtr q, const FPModule& m, int n) {
  if (n < 1) throw InputError("trivial extension needs a shift of at least 1");
  if (m.base() != q && !m.base()->same_as(*q)) throw InputError("extension module over a different ring");
  FPModule mm = m.is_cokernel_form() ? m : m.minimal_presentation();
  std::vector<FPModule> terms{mm};
  for (int i = 1; i < n; ++i) terms.push_back(FPModule::zero(q));
  terms.push_back(FPModule::free(q, {0}));
  std::vector<PolyMatrix> diffs;
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    diffs.emplace_back(q->ring(), terms[k + 1].ambient_rank(), terms[k].ambient_rank());
  Complex c(q, -n, std::move(terms), std::move(diffs));
  return DGRing::make(q, std::move(c), q, DGRing::Kind::trivial_extension, nullptr, {}, mm, n);
}

DGRingPtr koszul(const DGRingPtr& a, const std::vector<Polynomial>& elements) {
  if (elements.empty()) return a;
  auto lifts = reduced_lifts(*a->base(), elements);
  Complex k = Complex::koszul(a->base(), lifts);
  Complex tot = tensor_complexes(a->underlying(), k);
  QRingPtr h0 = extend_ideal(*a->h0(), lifts);
  return DGRing::make(a->base(), std::move(tot), std::move(h0), DGRing::Kind::koszul, a, std::move(lifts));
}

DGRingPtr tensor(const DGRingPtr& left, const DGRingPtr& right) {
  if (right->kind() != DGRing::Kind::koszul || right->parent()->kind() != DGRing::Kind::ring)
    throw InputError("right tensor factor must be a Koszul complex over the ring itself");
  if (!left->base()->same_as(*right->base())) throw InputError("tensor factors over different rings");
  Complex tot = tensor_complexes(left->underlying(), right->underlying());
  QRingPtr h0 = extend_ideal(*left->h0(), right->lifts());
  return DGRing::make(left->base(), std::move(tot), std::move(h0), DGRing::Kind::tensor, left, right->lifts());
}

DGModule koszul_module(const DGModule& m, const std::vector<Polynomial>& elements) {
  if (elements.empty()) return m;
  const QRingPtr& q = m.underlying.base();
  auto lifts = reduced_lifts(*q, elements);
  return DGModule{m.over, tensor_complexes(m.underlying, Complex::koszul(q, lifts)), m.bounded_below};
}

DGRingPtr base_change(const DGRingPtr& k, const RingMap& f) {
  DGRingPtr root = k->koszul_root();
  if (!root || k->kind() != DGRing::Kind::koszul) throw InputError("base change needs a Koszul DG-ring over a ring");
  if (!root->base()->same_as(*f.source())) throw InputError("ring map source is not the Koszul base");
  if (!f.is_well_defined()) throw InputError("ring map does not preserve the defining ideal");
  std::vector<Polynomial> images;
  for (const auto& p : k->all_lifts()) images.push_back(f.apply(p));
  return koszul(dg_from_ring(f.target()), images);
}

bool same_homology(const std::map<int, HilbertSeries>& a, const std::map<int, HilbertSeries>& b) {
  auto is_zero_at = [](const std::map<int, HilbertSeries>& t, int i) {
    auto it = t.find(i);
    return it == t.end() || it->second.is_zero();
  };
  for (const auto& [i, h] : a) {
    auto it = b.find(i);
    if (it == b.end() ? !h.is_zero() : !(it->second == h)) return false;
  }
  for (const auto& [i, h] : b)
    if (!a.count(i) && !is_zero_at(b, i)) return false;
  return true;
}

LiftIndependenceReport lift_independence_check(const DGRingPtr& a, const std::vector<Polynomial>& elements,
                                               const std::vector<Polynomial>& alternates) {
  if (elements.size() != alternates.size()) throw InputError("alternate lifts must match the elements one to one");
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!a->h0()->is_zero(alternates[i] - elements[i]))
      throw InputError("alternate lift " + alternates[i].to_string() + " is not congruent to " +
                       elements[i].to_string() + " in H^0");
  LiftIndependenceReport r;
  r.original = koszul(a, elements)->underlying().homology_table();
  r.alternate = koszul(a, alternates)->underlying().homology_table();
  r.agree = same_homology(r.original, r.alternate);
  return r;
}

}  // namespace kdg
