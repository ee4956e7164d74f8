#include "kdg/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kdg {

namespace {

bool is_identity_presentation(const PolyMatrix& g, const std::vector<int>& degrees,
                              const std::vector<int>& twists) {
  if (g.rows() != g.cols() || degrees != twists) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Polynomial& p = g(i, j);
      if (i == j ? !(p.size() == 1 && p.leading().mono.is_one() && p.leading().coef.is_one())
                 : !p.is_zero())
        return false;
    }
  return true;
}

std::vector<Vec> j_times_basis(const QuotientRing& q, std::size_t rank, const ModuleOrder& order) {
  std::vector<Vec> out;
  for (const auto& j : q.groebner().elements())
    for (std::size_t c = 0; c < rank; ++c) {
      Vec v = j;
      for (auto& t : v.terms) t.comp = static_cast<std::uint32_t>(c);
      out.push_back(vec_resort(std::move(v), order));
    }
  return out;
}

}  // namespace

FPModule::FPModule(QRingPtr base, std::vector<int> twists, PolyMatrix generators,
                   std::vector<int> generator_degrees, PolyMatrix relations)
    : base_(std::move(base)),
      twists_(std::move(twists)),
      generators_(std::move(generators)),
      generator_degrees_(std::move(generator_degrees)),
      relations_(std::move(relations)) {
  if (!base_) throw std::invalid_argument("module without base ring");
  if (!generators_.ring()) generators_ = PolyMatrix(ring(), twists_.size(), 0);
  if (!relations_.ring()) relations_ = PolyMatrix(ring(), twists_.size(), 0);
  if (generators_.rows() != twists_.size() || relations_.rows() != twists_.size())
    throw std::invalid_argument("presentation matrices do not match the ambient rank");
  if (generators_.cols() != generator_degrees_.size())
    throw std::invalid_argument("generator degree list has the wrong length");
  ModuleOrder order = ambient_order();
  for (std::size_t j = 0; j < generators_.cols(); ++j) {
    Vec v = generators_.column(j, order);
    if (v.is_zero()) continue;
    auto d = vec_degree(v, order);
    if (!d || *d != generator_degrees_[j])
      throw InhomogeneousInput("module generator is not homogeneous of its stated degree");
  }
  for (std::size_t j = 0; j < relations_.cols(); ++j) {
    Vec v = relations_.column(j, order);
    if (!v.is_zero() && !vec_degree(v, order))
      throw InhomogeneousInput("module relation is not homogeneous");
  }
  cokernel_form_ = is_identity_presentation(generators_, generator_degrees_, twists_);
}

FPModule FPModule::cokernel(QRingPtr base, std::vector<int> twists, PolyMatrix relations) {
  RingPtr r = base->ring();
  std::size_t n = twists.size();
  std::vector<int> degrees = twists;
  return FPModule(std::move(base), std::move(twists), PolyMatrix::identity(r, n), std::move(degrees),
                  std::move(relations));
}

FPModule FPModule::free(QRingPtr base, std::vector<int> twists) {
  RingPtr r = base->ring();
  std::size_t n = twists.size();
  return cokernel(std::move(base), std::move(twists), PolyMatrix(r, n, 0));
}

FPModule FPModule::zero(QRingPtr base) { return free(std::move(base), {}); }

FPModule FPModule::cyclic(QRingPtr base, const std::vector<Polynomial>& ideal_gens, int twist) {
  RingPtr r = base->ring();
  std::vector<Polynomial> nonzero;
  for (const auto& g : ideal_gens)
    if (!g.is_zero()) nonzero.push_back(g);
  PolyMatrix rel(r, 1, nonzero.size());
  for (std::size_t j = 0; j < nonzero.size(); ++j) rel(0, j) = nonzero[j];
  return cokernel(std::move(base), {twist}, std::move(rel));
}

FPModule FPModule::ideal(QRingPtr base, const std::vector<Polynomial>& gens) {
  RingPtr r = base->ring();
  std::vector<Polynomial> nonzero;
  std::vector<int> degrees;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = g.degree();
    if (!d) throw InhomogeneousInput("ideal generator is not homogeneous");
    nonzero.push_back(g);
    degrees.push_back(*d);
  }
  PolyMatrix gm(r, 1, nonzero.size());
  for (std::size_t j = 0; j < nonzero.size(); ++j) gm(0, j) = nonzero[j];
  return FPModule(std::move(base), {0}, std::move(gm), std::move(degrees), PolyMatrix(r, 1, 0));
}

std::vector<Vec> FPModule::submodule_n() const {
  ModuleOrder order = ambient_order();
  std::vector<Vec> out;
  for (std::size_t j = 0; j < relations_.cols(); ++j) {
    Vec v = relations_.column(j, order);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  auto jb = j_times_basis(*base_, twists_.size(), order);
  out.insert(out.end(), jb.begin(), jb.end());
  return out;
}

std::vector<Vec> FPModule::generator_vecs() const { return generators_.columns(ambient_order()); }

const GroebnerBasis& FPModule::relation_gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->relation_gb)
    cache_->relation_gb = buchberger(ring(), ambient_order(), submodule_n());
  return *cache_->relation_gb;
}

HilbertSeries FPModule::hilbert_series() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->hilbert) return *cache_->hilbert;
  }
  HilbertSeries hs = relation_gb().quotient_hilbert_series();
  if (!cokernel_form_) {
    std::vector<Vec> all = submodule_n();
    for (auto& g : generator_vecs())
      if (!g.is_zero()) all.push_back(std::move(g));
    GroebnerBasis big = buchberger(ring(), ambient_order(), std::move(all));
    hs = hs - big.quotient_hilbert_series();
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->hilbert = hs;
  return hs;
}

int FPModule::dimension() const { return hilbert_series().dimension(); }

bool FPModule::is_zero() const { return hilbert_series().is_zero(); }

bool FPModule::is_zero_element(const Vec& f) const { return relation_gb().contains(f); }

std::vector<std::size_t> minimal_generator_indices(const RingPtr& ring, const ModuleOrder& order,
                                                   const std::vector<Vec>& cols,
                                                   const std::vector<Vec>& extra) {
  std::vector<std::size_t> idx;
  std::vector<int> deg(cols.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].is_zero()) continue;
    auto d = vec_degree(cols[j], order);
    if (!d) throw InhomogeneousInput("inhomogeneous column in a generating set");
    deg[j] = *d;
    idx.push_back(j);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });

  std::vector<std::size_t> kept;
  std::vector<Vec> current = extra;
  std::optional<GroebnerBasis> gb;
  int gb_degree = kMinusInfinity;
  for (std::size_t j : idx) {
    // A degree-d truncated basis decides membership in degree d; rebuild when d grows or
    // after a generator has been kept.
    if (!gb || gb_degree < deg[j]) {
      BuchbergerOptions opts;
      opts.truncate_degree = deg[j];
      gb = buchberger(ring, order, current, opts);
      gb_degree = deg[j];
    }
    if (gb->contains(cols[j])) continue;
    kept.push_back(j);
    current.push_back(cols[j]);
    gb.reset();
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Polynomial> minimal_ideal_generators(const QuotientRing& q,
                                                 const std::vector<Polynomial>& gens) {
  ModuleOrder order = ModuleOrder::top(q.ring()->order(), {0});
  std::vector<Vec> cols;
  std::vector<Polynomial> reduced;
  for (const auto& g : gens) {
    Polynomial r = q.reduce(g);
    if (r.is_zero()) continue;
    reduced.push_back(r);
    cols.push_back(Vec::from_polynomial(r, 0));
  }
  auto keep = minimal_generator_indices(q.ring(), order, cols, q.groebner().elements());
  std::vector<Polynomial> out;
  for (std::size_t k : keep) out.push_back(reduced[k]);
  return out;
}

FPModule FPModule::minimal_presentation() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->minimal) return *cache_->minimal;
  }
  const RingPtr& r = ring();
  ModuleOrder order = ambient_order();
  std::vector<Vec> gens = generator_vecs();
  std::vector<Vec> n = submodule_n();
  std::vector<std::size_t> keep = minimal_generator_indices(r, order, gens, n);
  std::vector<Vec> kept;
  std::vector<int> degrees;
  for (std::size_t k : keep) {
    kept.push_back(gens[k]);
    degrees.push_back(generator_degrees_[k]);
  }
  std::vector<Vec> syz = syzygies_of(r, twists_, kept, degrees, n);
  ModuleOrder source = ModuleOrder::top(r->order(), degrees);
  std::vector<Vec> jb = j_times_basis(*base_, degrees.size(), source);
  std::vector<std::size_t> rel_keep = minimal_generator_indices(r, source, syz, jb);
  std::vector<Vec> rels;
  for (std::size_t k : rel_keep) rels.push_back(syz[k]);
  PolyMatrix rel = PolyMatrix::from_columns(r, degrees.size(), rels).reduced(base_->groebner());
  auto result = std::make_shared<const FPModule>(cokernel(base_, degrees, std::move(rel)));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->minimal = result;
  return *result;
}

std::vector<Polynomial> FPModule::annihilator() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->annihilator) return *cache_->annihilator;
  }
  const RingPtr& r = ring();
  std::vector<Polynomial> raw;
  if (cokernel_form_ && twists_.size() == 1) {
    for (std::size_t j = 0; j < relations_.cols(); ++j) raw.push_back(relations_(0, j));
  } else if (num_generators() == 0) {
    raw.push_back(Polynomial::constant(r, 1));
  } else {
    // ann = kernel of S -> ⊕_j F/N, 1 -> (g_1, ..., g_k), each block twisted so the image has degree 0.
    const std::size_t rank = twists_.size(), k = num_generators();
    std::vector<int> big_twists;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < rank; ++c) big_twists.push_back(twists_[c] - generator_degrees_[j]);
    ModuleOrder big_order = ModuleOrder::top(r->order(), big_twists);
    std::vector<VTerm> terms;
    std::vector<Vec> gens = generator_vecs();
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& t : gens[j].terms)
        terms.push_back(VTerm{t.mono, static_cast<std::uint32_t>(j * rank + t.comp), t.coef});
    Vec image = Vec::from_terms(std::move(terms), big_order);
    std::vector<Vec> extra;
    std::vector<Vec> n = submodule_n();
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& v : n) {
        Vec w = v;
        for (auto& t : w.terms) t.comp += static_cast<std::uint32_t>(j * rank);
        extra.push_back(vec_resort(std::move(w), big_order));
      }
    for (const auto& s : syzygies_of(r, big_twists, {image}, {0}, extra))
      raw.push_back(vec_component(s, 0, r));
  }
  std::vector<Polynomial> ann = minimal_ideal_generators(*base_, raw);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->annihilator = ann;
  return ann;
}

FPModule FPModule::degree_shifted(int k) const {
  std::vector<int> t = twists_, d = generator_degrees_;
  for (auto& v : t) v += k;
  for (auto& v : d) v += k;
  return FPModule(base_, std::move(t), generators_, std::move(d), relations_);
}

std::string FPModule::describe() const {
  std::ostringstream os;
  os << "module of rank " << twists_.size() << " with " << num_generators() << " generators and "
     << relations_.cols() << " relations";
  return os.str();
}

ModuleMap::ModuleMap(FPModule source, FPModule target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.num_generators())
    throw std::invalid_argument("module map matrix has the wrong shape");
  ModuleOrder order = target_.ambient_order();
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    Vec v = matrix_.column(j, order);
    if (v.is_zero()) continue;
    auto d = vec_degree(v, order);
    if (!d || *d != source_.generator_degrees()[j])
      throw InhomogeneousInput("module map is not homogeneous of degree 0");
  }
}

bool ModuleMap::is_well_defined() const {
  const RingPtr& r = source_.ring();
  ModuleOrder tord = target_.ambient_order();
  std::vector<Vec> syz;
  if (source_.is_cokernel_form()) {
    ModuleOrder sord = source_.ambient_order();
    for (std::size_t j = 0; j < source_.relations().cols(); ++j)
      syz.push_back(source_.relations().column(j, sord));
  } else {
    syz = syzygies_of(r, source_.twists(), source_.generator_vecs(), source_.generator_degrees(),
                      source_.submodule_n());
  }
  const GroebnerBasis& gb = target_.relation_gb();
  for (const auto& s : syz) {
    PolyMatrix col = PolyMatrix::from_columns(r, source_.num_generators(), {s});
    Vec image = (matrix_ * col).column(0, tord);
    if (!gb.contains(image)) return false;
  }
  return true;
}

FPModule kernel(const ModuleMap& f) {
  if (!f.is_well_defined()) throw InputError("kernel of an ill-defined module map");
  const FPModule& src = f.source();
  const RingPtr& r = src.ring();
  ModuleOrder tord = f.target().ambient_order();
  std::vector<Vec> k = syzygies_of(r, f.target().twists(), f.matrix().columns(tord),
                                   src.generator_degrees(), f.target().submodule_n());
  ModuleOrder sord = ModuleOrder::top(r->order(), src.generator_degrees());
  std::vector<int> degrees;
  std::vector<Vec> nonzero;
  for (auto& v : k) {
    if (v.is_zero()) continue;
    degrees.push_back(*vec_degree(v, sord));
    nonzero.push_back(std::move(v));
  }
  PolyMatrix kmat = PolyMatrix::from_columns(r, src.num_generators(), nonzero);
  PolyMatrix gens = src.is_cokernel_form() ? kmat : src.generators() * kmat;
  return FPModule(src.base(), src.twists(), std::move(gens), std::move(degrees), src.relations());
}

ModuleMap multiplication_map(const FPModule& m, const Polynomial& r) {
  auto d = r.degree();
  if (!r.is_zero() && !d) throw InhomogeneousInput("multiplier is not homogeneous");
  int e = r.is_zero() ? 0 : *d;
  FPModule target = m.degree_shifted(-e);
  PolyMatrix mat = m.generators();
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) = mat(i, j) * r;
  return ModuleMap(m, std::move(target), std::move(mat));
}

}  // namespace kdg
