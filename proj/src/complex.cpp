#include "kdg/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kdg {

namespace {

HilbertSeries zero_series(const Complex& c) {
  return HilbertSeries(LaurentPoly(), static_cast<int>(c.ring()->nvars()));
}

PolyMatrix zero_matrix(const RingPtr& r, std::size_t rows, std::size_t cols) { return PolyMatrix(r, rows, cols); }

bool columns_vanish(const PolyMatrix& m, const FPModule& target) {
  if (m.cols() == 0 || m.is_zero()) return true;
  const GroebnerBasis& gb = target.relation_gb();
  for (const auto& v : m.columns(target.ambient_order()))
    if (!gb.contains(v)) return false;
  return true;
}

Scalar sign(const Field& f, int k) { return f.from_int(k % 2 == 0 ? 1 : -1); }

// Direct sum of cokernel-form modules: concatenated twists, block-diagonal relations.
FPModule direct_sum(const QRingPtr& base, const std::vector<FPModule>& parts) {
  std::vector<int> twists;
  std::size_t nrel = 0;
  for (const auto& p : parts) {
    twists.insert(twists.end(), p.twists().begin(), p.twists().end());
    nrel += p.relations().cols();
  }
  PolyMatrix rel(base->ring(), twists.size(), nrel);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    rel.set_block(r0, c0, p.relations());
    r0 += p.ambient_rank();
    c0 += p.relations().cols();
  }
  return FPModule::cokernel(base, std::move(twists), std::move(rel));
}

FPModule tensor_modules(const QRingPtr& base, const FPModule& a, const FPModule& b) {
  const RingPtr& r = base->ring();
  std::vector<int> twists;
  for (int ta : a.twists())
    for (int tb : b.twists()) twists.push_back(ta + tb);
  PolyMatrix left = PolyMatrix::kron(a.relations(), PolyMatrix::identity(r, b.ambient_rank()));
  PolyMatrix right = PolyMatrix::kron(PolyMatrix::identity(r, a.ambient_rank()), b.relations());
  return FPModule::cokernel(base, std::move(twists), PolyMatrix::hstack({left, right}, twists.size()));
}

void require_same_base(const QRingPtr& a, const QRingPtr& b) {
  if (a != b && !a->same_as(*b)) throw InputError("complexes live over different rings");
}

}  // namespace

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t p) {
  if (p == 0) return {{}};
  if (p > n) return {};
  // subsets avoiding n-1 first, then those containing it
  auto out = colex_subsets(n - 1, p);
  for (auto s : colex_subsets(n - 1, p - 1)) {
    s.push_back(n - 1);
    out.push_back(std::move(s));
  }
  return out;
}

bool is_unit_entry(const Polynomial& p, const QuotientRing& q) {
  if (p.is_zero()) return false;
  return q.reduce(p).is_unit_constant();
}

Complex::Complex(QRingPtr base, int lo, std::vector<FPModule> terms, std::vector<PolyMatrix> differentials)
    : base_(std::move(base)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(differentials)) {
  if (!base_) throw std::invalid_argument("complex without base ring");
  std::size_t expect = terms_.empty() ? 0 : terms_.size() - 1;
  if (diffs_.size() != expect) throw std::invalid_argument("complex needs one differential between adjacent terms");
  for (const auto& t : terms_)
    if (!t.is_cokernel_form()) throw std::invalid_argument("complex terms must be in cokernel form");
  verify();
}

Complex Complex::zero(QRingPtr base) { return Complex(std::move(base), 0, {}, {}); }

Complex Complex::concentrated(const FPModule& m, int degree) {
  FPModule t = m.is_cokernel_form() ? m : m.minimal_presentation();
  return Complex(m.base(), degree, {t}, {});
}

Complex Complex::koszul(QRingPtr base, const std::vector<Polynomial>& elements) {
  const RingPtr& r = base->ring();
  const std::size_t n = elements.size();
  std::vector<int> deg(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (elements[j].is_zero()) continue;
    auto d = elements[j].degree();
    if (!d) throw InhomogeneousInput("Koszul element is not homogeneous: " + elements[j].to_string());
    deg[j] = *d;
  }
  std::vector<std::vector<std::vector<std::size_t>>> bases(n + 1);
  for (std::size_t p = 0; p <= n; ++p) bases[p] = colex_subsets(n, p);

  std::vector<FPModule> terms;
  for (std::size_t k = 0; k <= n; ++k) {  // degree -(n-k), p = n-k
    std::vector<int> tw;
    for (const auto& s : bases[n - k]) {
      int t = 0;
      for (auto j : s) t += deg[j];
      tw.push_back(t);
    }
    terms.push_back(FPModule::free(base, std::move(tw)));
  }
  std::vector<PolyMatrix> diffs;
  const Field& f = r->field();
  for (std::size_t p = n; p >= 1; --p) {
    const auto& src = bases[p];
    const auto& dst = bases[p - 1];
    PolyMatrix m(r, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t k = 0; k < src[c].size(); ++k) {
        std::vector<std::size_t> face = src[c];
        face.erase(face.begin() + static_cast<long>(k));
        auto row = std::find(dst.begin(), dst.end(), face) - dst.begin();
        m(static_cast<std::size_t>(row), c) = elements[src[c][k]].scaled(sign(f, static_cast<int>(k)));
      }
    diffs.push_back(std::move(m));
  }
  return Complex(std::move(base), -static_cast<int>(n), std::move(terms), std::move(diffs));
}

FPModule Complex::term(int i) const {
  if (!in_support(i)) return FPModule::zero(base_);
  return terms_[static_cast<std::size_t>(i - lo_)];
}

PolyMatrix Complex::differential(int i) const {
  if (i >= lo_ && i < hi()) return diffs_[static_cast<std::size_t>(i - lo_)];
  return zero_matrix(ring(), term(i + 1).ambient_rank(), term(i).ambient_rank());
}

bool Complex::is_free() const {
  for (const auto& t : terms_)
    if (!t.is_free()) return false;
  return true;
}

void Complex::verify() const {
  for (int i = lo_; i < hi(); ++i) {
    const FPModule& src = terms_[static_cast<std::size_t>(i - lo_)];
    const FPModule& dst = terms_[static_cast<std::size_t>(i + 1 - lo_)];
    const PolyMatrix& d = diffs_[static_cast<std::size_t>(i - lo_)];
    ModuleMap check(src, dst, d);  // shape and degree-0 homogeneity
    if (!columns_vanish(d * src.relations(), dst))
      throw InputError("differential d^" + std::to_string(i) + " does not respect relations");
    if (i + 1 < hi() && !columns_vanish(diffs_[static_cast<std::size_t>(i + 1 - lo_)] * d,
                                        terms_[static_cast<std::size_t>(i + 2 - lo_)]))
      throw InputError("d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " is not zero");
  }
}

HilbertSeries Complex::quotient_by_image(int i) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->quotient_hs.find(i);
    if (it != cache_->quotient_hs.end()) return it->second;
  }
  FPModule t = term(i);
  HilbertSeries hs;
  if (i - 1 < lo_ || i > hi()) {
    hs = t.hilbert_series();
  } else {
    PolyMatrix rel = PolyMatrix::hstack({t.relations(), differential(i - 1)}, t.ambient_rank());
    hs = FPModule::cokernel(base_, t.twists(), std::move(rel)).hilbert_series();
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->quotient_hs.emplace(i, hs);
  return hs;
}

HilbertSeries Complex::homology_hilbert(int i) const {
  if (!in_support(i)) return zero_series(*this);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->homology_hs.find(i);
    if (it != cache_->homology_hs.end()) return it->second;
  }
  // HS(ker d^i / im d^(i-1)) = HS(C^i / im d^(i-1)) - HS(C^(i+1)) + HS(C^(i+1) / im d^i)
  HilbertSeries hs = quotient_by_image(i);
  if (i < hi()) hs = hs - term(i + 1).hilbert_series() + quotient_by_image(i + 1);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->homology_hs.emplace(i, hs);
  return hs;
}

FPModule Complex::homology(int i) const {
  if (!in_support(i)) return FPModule::zero(base_);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->homology.find(i);
    if (it != cache_->homology.end()) return *it->second;
  }
  FPModule t = term(i);
  PolyMatrix gens;
  std::vector<int> degrees;
  if (i == hi()) {
    gens = PolyMatrix::identity(ring(), t.ambient_rank());
    degrees = t.twists();
  } else {
    FPModule z = kernel(ModuleMap(t, term(i + 1), differential(i)));
    gens = z.generators();
    degrees = z.generator_degrees();
  }
  PolyMatrix rel = t.relations();
  if (i > lo_) rel = PolyMatrix::hstack({rel, differential(i - 1)}, t.ambient_rank());
  FPModule h = FPModule(base_, t.twists(), std::move(gens), std::move(degrees), std::move(rel))
                   .minimal_presentation();
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->homology.emplace(i, std::make_shared<const FPModule>(h));
  return h;
}

int Complex::inf() const {
  for (int i = lo_; i <= hi(); ++i)
    if (!homology_hilbert(i).is_zero()) return i;
  return kPlusInfinity;
}

int Complex::sup() const {
  for (int i = hi(); i >= lo_; --i)
    if (!homology_hilbert(i).is_zero()) return i;
  return kMinusInfinity;
}

int Complex::amp() const {
  int s = sup();
  if (s == kMinusInfinity) return kMinusInfinity;
  return s - inf();
}

std::map<int, HilbertSeries> Complex::homology_table() const {
  std::map<int, HilbertSeries> out;
  for (int i = lo_; i <= hi(); ++i) out.emplace(i, homology_hilbert(i));
  return out;
}

std::string Complex::describe() const {
  std::ostringstream os;
  if (empty()) return "zero complex";
  os << "complex in degrees [" << lo_ << ", " << hi() << "] with ranks";
  for (const auto& t : terms_) os << ' ' << t.ambient_rank();
  return os.str();
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(Complex source, Complex target, std::map<int, PolyMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_base(source_.base(), target_.base());
  for (const auto& [i, m] : components_) ModuleMap check(source_.term(i), target_.term(i), m);
  if (!is_chain_map()) throw InputError("maps do not commute with the differentials");
}

PolyMatrix ChainMap::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return zero_matrix(source_.ring(), target_.term(i).ambient_rank(), source_.term(i).ambient_rank());
}

bool ChainMap::is_chain_map() const {
  if (source_.empty()) return true;
  int lo = std::min(source_.lo(), target_.empty() ? source_.lo() : target_.lo());
  int hi = std::max(source_.hi(), target_.empty() ? source_.hi() : target_.hi());
  for (int i = lo; i <= hi; ++i) {
    PolyMatrix f = component(i);
    if (!columns_vanish(f * source_.term(i).relations(), target_.term(i))) return false;
    PolyMatrix lhs = component(i + 1) * source_.differential(i);
    PolyMatrix rhs = target_.differential(i) * f;
    if (!columns_vanish(lhs - rhs, target_.term(i + 1))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Bicomplex::Bicomplex(QRingPtr base, int p_lo, int q_lo, std::vector<std::vector<FPModule>> terms,
                     std::vector<std::vector<PolyMatrix>> horizontal,
                     std::vector<std::vector<PolyMatrix>> vertical)
    : base_(std::move(base)), p_lo_(p_lo), q_lo_(q_lo), terms_(std::move(terms)),
      h_(std::move(horizontal)), v_(std::move(vertical)) {
  for (const auto& row : terms_)
    if (row.size() != terms_[0].size()) throw std::invalid_argument("ragged bicomplex grid");
  if (h_.size() != terms_.size() || v_.size() != terms_.size())
    throw std::invalid_argument("bicomplex differential grids do not match the terms");
  for (std::size_t p = 0; p < terms_.size(); ++p)
    if (h_[p].size() != terms_[p].size() || v_[p].size() != terms_[p].size())
      throw std::invalid_argument("bicomplex differential grids do not match the terms");
  verify();
}

FPModule Bicomplex::term(int p, int q) const {
  if (p < p_lo_ || p > p_hi() || q < q_lo_ || q > q_hi()) return FPModule::zero(base_);
  return terms_[static_cast<std::size_t>(p - p_lo_)][static_cast<std::size_t>(q - q_lo_)];
}

PolyMatrix Bicomplex::horizontal(int p, int q) const {
  if (p >= p_lo_ && p < p_hi() && q >= q_lo_ && q <= q_hi())
    return h_[static_cast<std::size_t>(p - p_lo_)][static_cast<std::size_t>(q - q_lo_)];
  return zero_matrix(base_->ring(), term(p + 1, q).ambient_rank(), term(p, q).ambient_rank());
}

PolyMatrix Bicomplex::vertical(int p, int q) const {
  if (p >= p_lo_ && p <= p_hi() && q >= q_lo_ && q < q_hi())
    return v_[static_cast<std::size_t>(p - p_lo_)][static_cast<std::size_t>(q - q_lo_)];
  return zero_matrix(base_->ring(), term(p, q + 1).ambient_rank(), term(p, q).ambient_rank());
}

void Bicomplex::verify() const {
  for (int p = p_lo_; p <= p_hi(); ++p)
    for (int q = q_lo_; q <= q_hi(); ++q) {
      FPModule t = term(p, q);
      PolyMatrix h = horizontal(p, q), v = vertical(p, q);
      ModuleMap hm(t, term(p + 1, q), h);
      ModuleMap vm(t, term(p, q + 1), v);
      if (!columns_vanish(h * t.relations(), term(p + 1, q)) || !columns_vanish(v * t.relations(), term(p, q + 1)))
        throw InputError("bicomplex map does not respect relations");
      if (!columns_vanish(horizontal(p + 1, q) * h, term(p + 2, q)))
        throw InputError("bicomplex row fails d² = 0");
      if (!columns_vanish(vertical(p, q + 1) * v, term(p, q + 2)))
        throw InputError("bicomplex column fails d² = 0");
      if (!columns_vanish(vertical(p + 1, q) * h - horizontal(p, q + 1) * v, term(p + 1, q + 1)))
        throw InputError("bicomplex square does not commute");
    }
}

Complex total_complex(const Bicomplex& b) {
  const QRingPtr& base = b.base();
  const RingPtr& r = base->ring();
  if (b.p_hi() < b.p_lo() || b.q_hi() < b.q_lo()) return Complex::zero(base);
  const int lo = b.p_lo() + b.q_lo(), hi = b.p_hi() + b.q_hi();
  // blocks of Tot^n: (p, offset) in increasing p
  auto blocks = [&](int n) {
    std::vector<std::pair<int, std::size_t>> out;
    std::size_t off = 0;
    for (int p = b.p_lo(); p <= b.p_hi(); ++p) {
      int q = n - p;
      if (q < b.q_lo() || q > b.q_hi()) continue;
      out.emplace_back(p, off);
      off += b.term(p, q).ambient_rank();
    }
    return out;
  };
  std::vector<FPModule> terms;
  for (int n = lo; n <= hi; ++n) {
    std::vector<FPModule> parts;
    for (auto [p, off] : blocks(n)) parts.push_back(b.term(p, n - p));
    terms.push_back(direct_sum(base, parts));
  }
  std::vector<PolyMatrix> diffs;
  const Field& f = r->field();
  for (int n = lo; n < hi; ++n) {
    const FPModule& src = terms[static_cast<std::size_t>(n - lo)];
    const FPModule& dst = terms[static_cast<std::size_t>(n + 1 - lo)];
    PolyMatrix d(r, dst.ambient_rank(), src.ambient_rank());
    auto tb = blocks(n + 1);
    auto offset_of = [&](int p) -> std::optional<std::size_t> {
      for (auto [pp, off] : tb)
        if (pp == p) return off;
      return std::nullopt;
    };
    for (auto [p, off] : blocks(n)) {
      int q = n - p;
      if (auto o = offset_of(p + 1)) d.set_block(*o, off, b.horizontal(p, q));
      if (auto o = offset_of(p)) d.set_block(*o, off, b.vertical(p, q).scaled(sign(f, p)));
    }
    diffs.push_back(std::move(d));
  }
  return Complex(base, lo, std::move(terms), std::move(diffs));
}

Bicomplex tensor_bicomplex(const Complex& c, const Complex& d) {
  require_same_base(c.base(), d.base());
  if (!c.is_free() && !d.is_free()) throw InputError("tensor product needs a term-wise free factor");
  const QRingPtr& base = c.base();
  const RingPtr& r = base->ring();
  std::vector<std::vector<FPModule>> terms;
  std::vector<std::vector<PolyMatrix>> h, v;
  for (int p = c.lo(); p <= c.hi(); ++p) {
    std::vector<FPModule> row;
    std::vector<PolyMatrix> hrow, vrow;
    for (int q = d.lo(); q <= d.hi(); ++q) {
      FPModule cp = c.term(p), dq = d.term(q);
      row.push_back(tensor_modules(base, cp, dq));
      hrow.push_back(PolyMatrix::kron(c.differential(p), PolyMatrix::identity(r, dq.ambient_rank())));
      vrow.push_back(PolyMatrix::kron(PolyMatrix::identity(r, cp.ambient_rank()), d.differential(q)));
    }
    terms.push_back(std::move(row));
    h.push_back(std::move(hrow));
    v.push_back(std::move(vrow));
  }
  return Bicomplex(base, c.lo(), d.lo(), std::move(terms), std::move(h), std::move(v));
}

Complex tensor_complexes(const Complex& c, const Complex& d) {
  if (c.empty() || d.empty()) {
    require_same_base(c.base(), d.base());
    return Complex::zero(c.base());
  }
  return total_complex(tensor_bicomplex(c, d));
}

Complex hom_dual(const Complex& c) {
  if (!c.is_free()) throw InputError("Hom dual needs a term-wise free complex");
  if (c.empty()) return c;
  const Field& f = c.ring()->field();
  std::vector<FPModule> terms;
  for (int i = -c.hi(); i <= -c.lo(); ++i) {
    std::vector<int> tw = c.term(-i).twists();
    for (auto& t : tw) t = -t;
    terms.push_back(FPModule::free(c.base(), std::move(tw)));
  }
  std::vector<PolyMatrix> diffs;
  for (int i = -c.hi(); i < -c.lo(); ++i)
    diffs.push_back(c.differential(-i - 1).transpose().scaled(sign(f, i + 1)));
  return Complex(c.base(), -c.hi(), std::move(terms), std::move(diffs));
}

Complex shift(const Complex& c, int j) {
  if (c.empty()) return c;
  const Field& f = c.ring()->field();
  std::vector<FPModule> terms;
  std::vector<PolyMatrix> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) terms.push_back(c.term(i));
  for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.differential(i).scaled(sign(f, j)));
  return Complex(c.base(), c.lo() - j, std::move(terms), std::move(diffs));
}

Complex cone(const ChainMap& fm) {
  const Complex& c = fm.source();
  const Complex& d = fm.target();
  if (c.empty()) return d;
  const QRingPtr& base = c.base();
  const RingPtr& r = base->ring();
  int lo = c.lo() - 1, hi = c.hi() - 1;
  if (!d.empty()) {
    lo = std::min(lo, d.lo());
    hi = std::max(hi, d.hi());
  }
  std::vector<FPModule> terms;
  for (int i = lo; i <= hi; ++i) terms.push_back(direct_sum(base, {c.term(i + 1), d.term(i)}));
  std::vector<PolyMatrix> diffs;
  for (int i = lo; i < hi; ++i) {
    std::size_t c1 = c.term(i + 1).ambient_rank(), d0 = d.term(i).ambient_rank();
    std::size_t c2 = c.term(i + 2).ambient_rank(), d1 = d.term(i + 1).ambient_rank();
    PolyMatrix m(r, c2 + d1, c1 + d0);
    m.set_block(0, 0, -c.differential(i + 1));
    m.set_block(c2, 0, fm.component(i + 1));
    m.set_block(c2, c1, d.differential(i));
    diffs.push_back(std::move(m));
  }
  return Complex(base, lo, std::move(terms), std::move(diffs));
}

Complex minimize(const Complex& c) {
  if (c.empty()) return c;
  const QRingPtr& base = c.base();
  const QuotientRing& q = *base;
  const RingPtr& r = base->ring();
  const int n = c.hi() - c.lo() + 1;
  std::vector<std::vector<int>> twists;
  std::vector<PolyMatrix> rels;
  std::vector<PolyMatrix> d;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    twists.push_back(c.term(i).twists());
    rels.push_back(c.term(i).relations());
  }
  for (int i = c.lo(); i < c.hi(); ++i) d.push_back(c.differential(i).reduced(q.groebner()));

  auto drop = [](std::vector<std::size_t> keep_all, std::size_t skip) {
    keep_all.erase(std::remove(keep_all.begin(), keep_all.end(), skip), keep_all.end());
    return keep_all;
  };
  auto all = [](std::size_t k) {
    std::vector<std::size_t> v(k);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < n && !changed; ++k) {
      if (rels[k].cols() != 0 || rels[k + 1].cols() != 0) continue;
      PolyMatrix& m = d[static_cast<std::size_t>(k)];
      for (std::size_t row = 0; row < m.rows() && !changed; ++row)
        for (std::size_t col = 0; col < m.cols() && !changed; ++col) {
          if (!is_unit_entry(m(row, col), q)) continue;
          Scalar uinv = q.reduce(m(row, col)).leading().coef.inverse();
          auto rows_keep = drop(all(m.rows()), row);
          auto cols_keep = drop(all(m.cols()), col);
          PolyMatrix next(r, rows_keep.size(), cols_keep.size());
          for (std::size_t a = 0; a < rows_keep.size(); ++a)
            for (std::size_t b = 0; b < cols_keep.size(); ++b) {
              Polynomial e = m(rows_keep[a], cols_keep[b]);
              const Polynomial& g = m(rows_keep[a], col);
              const Polynomial& h = m(row, cols_keep[b]);
              if (!g.is_zero() && !h.is_zero()) e -= (g * h).scaled(uinv);
              next(a, b) = q.reduce(e);
            }
          if (k > 0) {
            PolyMatrix& prev = d[static_cast<std::size_t>(k - 1)];
            prev = prev.submatrix(drop(all(prev.rows()), col), all(prev.cols()));
          }
          if (k + 2 < n) {
            PolyMatrix& after = d[static_cast<std::size_t>(k + 1)];
            after = after.submatrix(all(after.rows()), drop(all(after.cols()), row));
          }
          m = std::move(next);
          twists[static_cast<std::size_t>(k)].erase(twists[static_cast<std::size_t>(k)].begin() + static_cast<long>(col));
          twists[static_cast<std::size_t>(k + 1)].erase(twists[static_cast<std::size_t>(k + 1)].begin() + static_cast<long>(row));
          rels[static_cast<std::size_t>(k)] = PolyMatrix(r, twists[static_cast<std::size_t>(k)].size(), 0);
          rels[static_cast<std::size_t>(k + 1)] = PolyMatrix(r, twists[static_cast<std::size_t>(k + 1)].size(), 0);
          changed = true;
        }
    }
  }
  // trim empty terms at both ends
  int first = 0, last = n - 1;
  while (first <= last && twists[static_cast<std::size_t>(first)].empty()) ++first;
  while (last >= first && twists[static_cast<std::size_t>(last)].empty()) --last;
  Complex out = Complex::zero(base);
  if (first <= last) {
    std::vector<FPModule> terms;
    std::vector<PolyMatrix> diffs;
    for (int k = first; k <= last; ++k)
      terms.push_back(FPModule::cokernel(base, twists[static_cast<std::size_t>(k)], rels[static_cast<std::size_t>(k)]));
    for (int k = first; k < last; ++k) diffs.push_back(d[static_cast<std::size_t>(k)]);
    out = Complex(base, c.lo() + first, std::move(terms), std::move(diffs));
  }
  for (int i = c.lo(); i <= c.hi(); ++i)
    if (!(out.homology_hilbert(i) == c.homology_hilbert(i)))
      throw std::logic_error("minimization changed the homology in degree " + std::to_string(i));
  return out;
}

FPModule minimize(const FPModule& m) { return m.minimal_presentation(); }

}  // namespace kdg
