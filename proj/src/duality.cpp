#include "kdg/duality.hpp"

#include <algorithm>
#include <sstream>

#include "kdg/module.hpp"

namespace kdg {

namespace {

std::vector<int> column_degrees(const std::vector<Vec>& cols, const ModuleOrder& order) {
  std::vector<int> out;
  for (const auto& v : cols) out.push_back(*vec_degree(v, order));
  return out;
}

// Resolution of one cokernel-form module over S: level 0 is its ambient free module.
struct TermResolution {
  std::vector<std::vector<int>> twists;  // per level
  std::vector<PolyMatrix> d;             // d[j]: level j -> level j-1, d[0] unused
  std::size_t rank(std::size_t j) const { return j < twists.size() ? twists[j].size() : 0; }
  int length() const { return static_cast<int>(twists.size()) - 1; }
};

TermResolution resolve_term(const FPModule& m) {
  const RingPtr& ring = m.ring();
  TermResolution t;
  t.twists.push_back(m.twists());
  t.d.emplace_back();
  ModuleOrder order = m.ambient_order();
  std::vector<Vec> gens;
  for (const auto& v : m.submodule_n())
    if (!v.is_zero()) gens.push_back(v);
  auto pick = [&](std::vector<Vec> cols, const ModuleOrder& ord) {
    std::vector<Vec> out;
    for (auto idx : minimal_generator_indices(ring, ord, cols, {})) out.push_back(std::move(cols[idx]));
    return out;
  };
  gens = pick(std::move(gens), order);
  const std::size_t cap = ring->nvars() + 2;
  while (!gens.empty()) {
    if (t.twists.size() > cap) throw std::logic_error("free resolution longer than the number of variables");
    std::vector<int> degs = column_degrees(gens, order);
    t.d.push_back(PolyMatrix::from_columns(ring, t.twists.back().size(), gens));
    std::vector<Vec> syz = syzygies_of(ring, t.twists.back(), gens, degs, {});
    t.twists.push_back(degs);
    order = ModuleOrder::top(ring->order(), degs);
    std::vector<Vec> nz;
    for (auto& v : syz)
      if (!v.is_zero()) nz.push_back(vec_resort(std::move(v), order));
    gens = pick(std::move(nz), order);
  }
  return t;
}

PolyMatrix zero_matrix(const RingPtr& r, std::size_t rows, std::size_t cols) { return PolyMatrix(r, rows, cols); }

bool tables_agree(const Complex& a, const Complex& b) {
  int lo = std::min(a.empty() ? 0 : a.lo(), b.empty() ? 0 : b.lo());
  int hi = std::max(a.empty() ? 0 : a.hi(), b.empty() ? 0 : b.hi());
  for (int i = lo; i <= hi; ++i)
    if (!(a.homology_hilbert(i) == b.homology_hilbert(i))) return false;
  return true;
}

// Signs eps with Hom(K, Q)^i -> K^(i-n), e_S^* -> eps(S) e_(complement S), found on the Koszul
// complex of n independent variables, where every square pins one sign.
std::vector<std::vector<int>> koszul_duality_signs(std::size_t n, const Field& field) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("t" + std::to_string(j));
  auto g = QuotientRing::make(PolyRing::make(field, names), {});
  std::vector<Polynomial> vars;
  for (std::size_t j = 0; j < n; ++j) vars.push_back(g->variable(j));
  Complex kg = Complex::koszul(g, vars);
  Complex e = hom_dual(kg);
  Complex t = shift(kg, -static_cast<int>(n));

  std::vector<std::vector<std::vector<std::size_t>>> bases(n + 1);
  for (std::size_t p = 0; p <= n; ++p) bases[p] = colex_subsets(n, p);
  auto index_of = [&](std::size_t p, const std::vector<std::size_t>& s) {
    auto& b = bases[p];
    return static_cast<std::size_t>(std::find(b.begin(), b.end(), s) - b.begin());
  };
  auto complement = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> c;
    for (std::size_t j = 0; j < n; ++j)
      if (!std::binary_search(s.begin(), s.end(), j)) c.push_back(j);
    return c;
  };
  auto phi = [&](std::size_t i, const std::vector<int>& eps) {
    PolyMatrix m(g->ring(), bases[n - i].size(), bases[i].size());
    for (std::size_t k = 0; k < bases[i].size(); ++k)
      m(index_of(n - i, complement(bases[i][k])), k) = Polynomial::constant(g->ring(), eps[k]);
    return m;
  };

  std::vector<std::vector<int>> eps(n + 1);
  eps[0] = {1};
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix lhs = t.differential(static_cast<int>(i)) * phi(i, eps[i]);
    PolyMatrix de = e.differential(static_cast<int>(i));
    eps[i + 1].assign(bases[i + 1].size(), 0);
    for (std::size_t k = 0; k < bases[i + 1].size(); ++k) {
      const auto& big = bases[i + 1][k];
      std::vector<std::size_t> small(big.begin() + 1, big.end());
      std::size_t col = index_of(i, small);
      const Polynomial& want = lhs(index_of(n - i - 1, complement(big)), col);
      const Polynomial& have = de(k, col);
      if (want == have)
        eps[i + 1][k] = 1;
      else if (want == -have)
        eps[i + 1][k] = -1;
      else
        throw std::logic_error("Koszul self-duality sign is not ±1");
    }
  }
  return eps;
}

}  // namespace

BettiTable BettiTable::of(const Complex& c) {
  BettiTable b;
  if (c.empty()) return b;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    FPModule term = c.term(i);
    for (int t : term.twists()) ++b.graded[-i][t];
  }
  return b;
}

std::vector<int> BettiTable::totals() const {
  std::vector<int> out;
  if (graded.empty()) return out;
  for (int h = graded.begin()->first; h <= graded.rbegin()->first; ++h) {
    int s = 0;
    auto it = graded.find(h);
    if (it != graded.end())
      for (const auto& [d, r] : it->second) s += r;
    out.push_back(s);
  }
  return out;
}

int BettiTable::length() const {
  if (graded.empty()) return kMinusInfinity;
  return graded.rbegin()->first - graded.begin()->first;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (const auto& [h, row] : graded) {
    os << h << ":";
    for (const auto& [d, r] : row) os << " " << r << "@" << d;
    os << "\n";
  }
  return os.str();
}

QRingPtr ambient_of(const QuotientRing& q) { return QuotientRing::make(q.ring(), {}); }

Complex twisted(const Complex& c, int k) {
  if (c.empty()) return c;
  std::vector<FPModule> terms;
  std::vector<PolyMatrix> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) terms.push_back(c.term(i).degree_shifted(k));
  for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.differential(i));
  return Complex(c.base(), c.lo(), std::move(terms), std::move(diffs));
}

FreeResolution free_resolution(const FPModule& m, bool minimal) {
  FPModule p = minimal ? m.minimal_presentation() : (m.is_cokernel_form() ? m : m.minimal_presentation());
  FreeResolution r = free_resolution(Complex::concentrated(p), minimal);
  if (!(r.complex.homology_hilbert(0) == m.hilbert_series()))
    throw std::logic_error("resolution does not resolve the module");
  return r;
}

FreeResolution free_resolution(const Complex& c, bool minimal) {
  FreeResolution out;
  out.minimal = minimal;
  if (c.empty()) {
    out.complex = Complex::zero(ambient_of(*c.base()));
    return out;
  }
  const QRingPtr s = ambient_of(*c.base());
  const RingPtr& ring = s->ring();
  const int lo = c.lo(), hi = c.hi(), nt = hi - lo + 1;

  std::vector<TermResolution> res;
  for (int i = lo; i <= hi; ++i) res.push_back(resolve_term(c.term(i)));
  auto at = [&](int i) -> const TermResolution& { return res[i - lo]; };

  // f[k][(i, j)] : P_{i,j} -> P_{i+k, j+k-1}; f[0] is the resolution differential.
  std::vector<std::map<std::pair<int, int>, PolyMatrix>> f(nt);
  auto get = [&](int k, int i, int j) -> PolyMatrix {
    int ti = i + k, tj = j + k - 1;
    std::size_t rows = (ti <= hi && tj >= 0) ? at(ti).rank(tj) : 0;
    std::size_t cols = at(i).rank(j);
    if (k == 0) {
      if (j >= 1 && j <= at(i).length()) return at(i).d[j];
      return zero_matrix(ring, rows, cols);
    }
    auto it = f[k].find({i, j});
    if (it != f[k].end()) return it->second;
    return zero_matrix(ring, rows, cols);
  };

  for (int k = 1; k < nt; ++k) {
    for (int i = lo; i + k <= hi; ++i) {
      const TermResolution& src = at(i);
      const TermResolution& dst = at(i + k);
      for (int j = 0; j <= src.length(); ++j) {
        int l = j + k - 1;
        if (k == 1 && j == 0) {
          f[1][{i, 0}] = c.differential(i);
          continue;
        }
        // d f_k = -(f_k d + sum_{a+b=k, a,b>=1} f_a f_b), evaluated on P_{i,j}
        std::size_t rows_rhs = l - 1 <= dst.length() ? dst.rank(l - 1) : 0;
        PolyMatrix rhs = zero_matrix(ring, rows_rhs, src.rank(j));
        if (j >= 1) rhs = rhs + get(k, i, j - 1) * get(0, i, j);
        for (int b = 1; b < k; ++b) rhs = rhs + get(k - b, i + b, j + b - 1) * get(b, i, j);
        rhs = -rhs;
        if (l > dst.length()) {
          if (!rhs.is_zero()) throw std::logic_error("resolution gluing obstruction beyond the resolution length");
          continue;
        }
        PolyMatrix x = zero_matrix(ring, dst.rank(l), src.rank(j));
        if (!rhs.is_zero()) {
          ModuleOrder ord = ModuleOrder::top(ring->order(), dst.twists[l - 1]);
          SubmoduleLifter lifter(ring, dst.twists[l - 1], dst.d[l].columns(ord), dst.twists[l], {});
          for (std::size_t col = 0; col < rhs.cols(); ++col) {
            auto cof = lifter.lift(rhs.column(col, ord));
            if (!cof) throw std::logic_error("resolution gluing: obstruction not in the image");
            for (std::size_t r = 0; r < cof->size(); ++r) x(r, col) = (*cof)[r];
          }
        }
        f[k][{i, j}] = std::move(x);
      }
    }
  }

  // Total complex: degree n collects P_{i,j} with i - j = n, blocks by increasing i.
  int max_len = 0;
  for (const auto& t : res) max_len = std::max(max_len, t.length());
  const int tlo = lo - max_len, thi = hi;
  std::vector<std::vector<std::pair<int, int>>> blocks(thi - tlo + 1);
  for (int i = lo; i <= hi; ++i)
    for (int j = 0; j <= at(i).length(); ++j) blocks[i - j - tlo].push_back({i, j});
  std::vector<FPModule> terms;
  for (auto& bl : blocks) {
    std::sort(bl.begin(), bl.end());
    std::vector<int> tw;
    for (auto [i, j] : bl) tw.insert(tw.end(), at(i).twists[j].begin(), at(i).twists[j].end());
    terms.push_back(FPModule::free(s, std::move(tw)));
  }
  std::vector<PolyMatrix> diffs;
  for (int n = tlo; n < thi; ++n) {
    const auto& from = blocks[n - tlo];
    const auto& to = blocks[n + 1 - tlo];
    PolyMatrix m(ring, terms[n + 1 - tlo].ambient_rank(), terms[n - tlo].ambient_rank());
    std::size_t c0 = 0;
    for (auto [i, j] : from) {
      std::size_t r0 = 0;
      for (auto [ti, tj] : to) {
        int k = ti - i;
        if (k >= 0 && tj == j + k - 1 && at(ti).rank(tj) > 0 && at(i).rank(j) > 0) m.set_block(r0, c0, get(k, i, j));
        r0 += at(ti).rank(tj);
      }
      c0 += at(i).rank(j);
    }
    diffs.push_back(std::move(m));
  }
  Complex tot(s, tlo, std::move(terms), std::move(diffs));
  if (!tables_agree(tot, c)) throw std::logic_error("glued resolution is not quasi-isomorphic to the complex");
  out.complex = minimal ? minimize(tot) : tot;
  out.betti = BettiTable::of(out.complex);
  return out;
}

DualizingComplex dualizing_complex(const QRingPtr& q) {
  if (q->is_zero_ring()) throw InputError("dualizing complex of the zero ring");
  FreeResolution f = free_resolution(FPModule::free(q, {0}), true);
  DualizingComplex d;
  d.shift = static_cast<int>(q->nvars());
  d.complex = shift(hom_dual(f.complex), d.shift);
  d.origin = "ring";
  if (d.complex.inf() != -q->dimension()) throw std::logic_error("dualizing complex normalization failed");
  return d;
}

DualizingComplex dualizing_of_koszul(const DGRingPtr& k) {
  DGRingPtr root = k->koszul_root();
  if (!root || k->kind() != DGRing::Kind::koszul) throw InputError("dualizing DG-module needs a Koszul DG-ring over a ring");
  DualizingComplex r = dualizing_complex(root->base());
  auto lifts = k->all_lifts();
  const int n = static_cast<int>(lifts.size());
  QRingPtr s = ambient_of(*root->base());
  Complex ks = Complex::koszul(s, lifts);
  DualizingComplex d;
  d.shift = r.shift - n;
  d.complex = shift(tensor_complexes(ks, r.complex), -n);
  d.origin = "koszul";
  return d;
}

GorensteinRingReport is_gorenstein_ring(const QRingPtr& q) {
  GorensteinRingReport g;
  if (q->is_zero_ring()) return g;
  FreeResolution f = free_resolution(FPModule::free(q, {0}), true);
  g.betti = f.betti;
  g.codim = static_cast<int>(q->nvars()) - q->dimension();
  auto tot = g.betti.totals();
  g.gorenstein = g.betti.length() == g.codim && !tot.empty() && tot.back() == 1;
  return g;
}

SelfDualityReport self_duality_check(const DGRingPtr& k) {
  DGRingPtr root = k->koszul_root();
  if (!root) throw InputError("self-duality needs a Koszul DG-ring over a ring");
  SelfDualityReport rep;
  const Complex& kc = k->underlying();
  rep.n = static_cast<int>(k->all_lifts().size());
  const std::size_t n = static_cast<std::size_t>(rep.n);
  rep.twist = n == 0 ? 0 : -kc.term(-rep.n).twists()[0];
  Complex e = hom_dual(kc);
  Complex t = twisted(shift(kc, -rep.n), rep.twist);
  auto eps = koszul_duality_signs(n, root->base()->field());
  const RingPtr& ring = kc.ring();
  std::vector<std::vector<std::vector<std::size_t>>> bases(n + 1);
  for (std::size_t p = 0; p <= n; ++p) bases[p] = colex_subsets(n, p);
  for (std::size_t i = 0; i <= n; ++i) {
    PolyMatrix m(ring, bases[n - i].size(), bases[i].size());
    for (std::size_t c = 0; c < bases[i].size(); ++c) {
      std::vector<std::size_t> comp;
      for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(bases[i][c].begin(), bases[i][c].end(), j)) comp.push_back(j);
      auto& b = bases[n - i];
      std::size_t row = static_cast<std::size_t>(std::find(b.begin(), b.end(), comp) - b.begin());
      m(row, c) = Polynomial::constant(ring, eps[i][c]);
    }
    rep.components[static_cast<int>(i)] = std::move(m);
  }
  try {
    ChainMap phi(e, t, rep.components);
    rep.isomorphic = true;
  } catch (const InputError& err) {
    rep.failure = err.what();
  }
  return rep;
}

HomologyMatch match_up_to_shift(const std::map<int, HilbertSeries>& a, const std::map<int, HilbertSeries>& b) {
  auto support = [](const std::map<int, HilbertSeries>& t) {
    std::vector<int> s;
    for (const auto& [i, h] : t)
      if (!h.is_zero()) s.push_back(i);
    return s;
  };
  auto sa = support(a), sb = support(b);
  HomologyMatch m;
  if (sa.size() != sb.size()) return m;
  if (sa.empty()) {
    m.found = true;
    return m;
  }
  m.shift = sb.front() - sa.front();
  m.twist = a.at(sa.front()).numerator().low() - b.at(sb.front()).numerator().low();
  for (std::size_t k = 0; k < sa.size(); ++k) {
    if (sb[k] != sa[k] + m.shift) return m;
    if (!(a.at(sa[k]) == b.at(sb[k]).shifted(m.twist))) return m;
  }
  m.found = true;
  return m;
}

GorensteinDGReport gorenstein_dg_check(const DGRingPtr& k) {
  DGRingPtr root = k->koszul_root();
  if (!root || k->kind() != DGRing::Kind::koszul) throw InputError("Gorenstein check needs a Koszul DG-ring over a ring");
  GorensteinDGReport rep;
  rep.ring_gorenstein = is_gorenstein_ring(root->base()).gorenstein;
  DualizingComplex d = dualizing_of_koszul(k);
  rep.match = match_up_to_shift(d.complex.homology_table(), k->underlying().homology_table());
  rep.level = "hilbert series per degree";
  if (rep.match.found) {
    FPModule top = d.complex.homology(-rep.match.shift);
    if (top.num_generators() == 1) {
      auto ann = QuotientRing::make(top.ring(), top.annihilator());
      rep.annihilators_agree = ann->same_as(*k->h0());
      rep.level = "hilbert series per degree and annihilator of the cyclic top homology";
    }
  }
  bool certified = rep.match.found && rep.annihilators_agree.value_or(true);
  if (rep.ring_gorenstein) {
    rep.verdict = certified ? Verdict3::yes : Verdict3::unknown;
    return rep;
  }
  bool local = true;
  for (const auto& l : k->all_lifts()) {
    Polynomial r = root->base()->reduce(l);
    if (!r.is_zero() && r.degree() && *r.degree() == 0) local = false;
  }
  rep.verdict = !rep.match.found && local ? Verdict3::no : Verdict3::unknown;
  return rep;
}

}  // namespace kdg
