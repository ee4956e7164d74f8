#include "kdg/groebner.hpp"

#include <algorithm>
#include <string>

namespace kdg {

// ---------------------------------------------------------------- orders

ModuleOrder ModuleOrder::top(MonomialOrder mono, std::vector<int> twists) {
  ModuleOrder o;
  o.kind_ = Kind::term_over_position;
  o.mono_ = mono;
  o.twists_ = std::move(twists);
  return o;
}

ModuleOrder ModuleOrder::pot(MonomialOrder mono, std::vector<int> twists) {
  ModuleOrder o = top(mono, std::move(twists));
  o.kind_ = Kind::position_over_term;
  return o;
}

ModuleOrder ModuleOrder::block(MonomialOrder mono, std::vector<int> twists, std::size_t split) {
  ModuleOrder o = top(mono, std::move(twists));
  o.kind_ = Kind::block;
  o.split_ = split;
  return o;
}

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& base, std::vector<Monomial> lead_monos,
                                  std::vector<std::uint32_t> lead_comps) {
  ModuleOrder o;
  o.kind_ = Kind::schreyer;
  o.mono_ = base.mono_;
  o.base_ = std::make_shared<const ModuleOrder>(base);
  o.twists_.reserve(lead_monos.size());
  for (std::size_t k = 0; k < lead_monos.size(); ++k)
    o.twists_.push_back(base.degree(lead_monos[k], lead_comps[k]));
  o.lead_monos_ = std::move(lead_monos);
  o.lead_comps_ = std::move(lead_comps);
  return o;
}

std::strong_ordering ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                          std::uint32_t cb) const {
  auto term_over_position = [&]() {
    if (mono_.kind == OrderKind::grevlex) {
      int da = a.degree() + twists_[ca], db = b.degree() + twists_[cb];
      if (da != db) return da <=> db;
    }
    auto c = mono_.compare(a, b);
    if (c != 0) return c;
    return cb <=> ca;
  };
  switch (kind_) {
    case Kind::term_over_position:
      return term_over_position();
    case Kind::position_over_term: {
      if (ca != cb) return cb <=> ca;
      return mono_.compare(a, b);
    }
    case Kind::block: {
      bool ba = ca < split_, bb = cb < split_;
      if (ba != bb) return ba ? std::strong_ordering::greater : std::strong_ordering::less;
      return term_over_position();
    }
    case Kind::schreyer: {
      auto c = base_->compare(a * lead_monos_[ca], lead_comps_[ca], b * lead_monos_[cb],
                              lead_comps_[cb]);
      if (c != 0) return c;
      return cb <=> ca;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- vectors

Vec Vec::from_terms(std::vector<VTerm> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const VTerm& x, const VTerm& y) { return order.compare(x, y) > 0; });
  Vec out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().comp == t.comp && out.terms.back().mono == t.mono) {
      out.terms.back().coef += t.coef;
    } else {
      if (!out.terms.empty() && out.terms.back().coef.is_zero()) out.terms.pop_back();
      out.terms.push_back(std::move(t));
    }
  }
  if (!out.terms.empty() && out.terms.back().coef.is_zero()) out.terms.pop_back();
  return out;
}

Vec Vec::from_polynomial(const Polynomial& p, std::uint32_t comp) {
  Vec v;
  v.terms.reserve(p.size());
  for (const auto& t : p.terms()) v.terms.push_back(VTerm{t.mono, comp, t.coef});
  return v;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto &s = a.terms[i], &t = b.terms[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || !(s.coef == t.coef)) return false;
  }
  return true;
}

Vec vec_add_multiple(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b,
                     const ModuleOrder& order) {
  if (c.is_zero() || b.is_zero()) return a;
  Vec r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  const auto& at = a.terms;
  const auto& bt = b.terms;
  Monomial bm;
  bool have_bm = false;
  while (i < at.size() && j < bt.size()) {
    if (!have_bm) {
      bm = bt[j].mono * m;
      have_bm = true;
    }
    auto cmp = order.compare(at[i].mono, at[i].comp, bm, bt[j].comp);
    if (cmp > 0) {
      r.terms.push_back(at[i++]);
    } else if (cmp < 0) {
      r.terms.push_back(VTerm{bm, bt[j].comp, c * bt[j].coef});
      ++j;
      have_bm = false;
    } else {
      Scalar s = at[i].coef + c * bt[j].coef;
      if (!s.is_zero()) r.terms.push_back(VTerm{bm, bt[j].comp, s});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  for (; i < at.size(); ++i) r.terms.push_back(at[i]);
  for (; j < bt.size(); ++j) r.terms.push_back(VTerm{bt[j].mono * m, bt[j].comp, c * bt[j].coef});
  return r;
}

Vec vec_add(const Vec& a, const Vec& b, const ModuleOrder& order) {
  if (b.is_zero()) return a;
  Monomial one(b.lead().mono.size());
  return vec_add_multiple(a, b.lead().coef.field().one(), one, b, order);
}

Vec vec_scale(const Vec& a, const Scalar& c, const Monomial& m) {
  if (c.is_zero()) return {};
  Vec r = a;
  for (auto& t : r.terms) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  return r;
}

Vec vec_negate(const Vec& a) {
  Vec r = a;
  for (auto& t : r.terms) t.coef = -t.coef;
  return r;
}

Vec vec_resort(Vec a, const ModuleOrder& order) {
  bool sorted = true;
  for (std::size_t i = 1; i < a.terms.size() && sorted; ++i)
    if (order.compare(a.terms[i - 1], a.terms[i]) <= 0) sorted = false;
  if (sorted) return a;
  return Vec::from_terms(std::move(a.terms), order);
}

std::optional<int> vec_degree(const Vec& a, const ModuleOrder& order) {
  if (a.is_zero()) return std::nullopt;
  int d = order.degree(a.lead().mono, a.lead().comp);
  for (const auto& t : a.terms)
    if (order.degree(t.mono, t.comp) != d) return std::nullopt;
  return d;
}

Polynomial vec_component(const Vec& a, std::uint32_t c, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : a.terms)
    if (t.comp == c) terms.push_back(Term{t.mono, t.coef});
  return Polynomial(ring, std::move(terms));
}

// ---------------------------------------------------------------- reduction

namespace {

// Reduction against a list of elements indexed by component.
class Reducer {
 public:
  Reducer(const ModuleOrder& order, std::size_t rank) : order_(order), by_comp_(rank) {}

  void add(const Vec* g, std::size_t id) {
    by_comp_[g->lead().comp].push_back(Entry{g, id});
  }

  std::optional<std::size_t> find(const VTerm& t, ReductionStrategy strategy,
                                  const Vec** out) const {
    const auto& list = by_comp_[t.comp];
    auto test = [&](const Entry& e) { return e.g->lead().mono.divides(t.mono); };
    if (strategy == ReductionStrategy::first_divisor) {
      for (const auto& e : list)
        if (test(e)) {
          *out = e.g;
          return e.id;
        }
    } else {
      for (auto it = list.rbegin(); it != list.rend(); ++it)
        if (test(*it)) {
          *out = it->g;
          return it->id;
        }
    }
    return std::nullopt;
  }

  // Full reduction; quotient terms are recorded per id when `quotients` is non-null.
  Vec reduce(Vec f, ReductionStrategy strategy,
             std::vector<std::vector<Term>>* quotients = nullptr) const {
    std::vector<VTerm> rem;
    std::size_t start = 0;  // f.terms[start..] is the live part
    while (start < f.terms.size()) {
      const VTerm& lt = f.terms[start];
      const Vec* g = nullptr;
      auto id = find(lt, strategy, &g);
      if (!id) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      Scalar c = lt.coef / g->lead().coef;
      Monomial m = lt.mono / g->lead().mono;
      if (quotients) (*quotients)[*id].push_back(Term{m, c});
      Vec live;
      live.terms.assign(f.terms.begin() + static_cast<std::ptrdiff_t>(start), f.terms.end());
      f = vec_add_multiple(live, -c, m, *g, order_);
      start = 0;
    }
    return Vec{std::move(rem)};
  }

 private:
  struct Entry {
    const Vec* g;
    std::size_t id;
  };
  const ModuleOrder& order_;
  std::vector<std::vector<Entry>> by_comp_;
};

Vec make_monic(Vec v) {
  if (v.is_zero() || v.lead().coef.is_one()) return v;
  Scalar inv = v.lead().coef.inverse();
  for (auto& t : v.terms) t.coef *= inv;
  return v;
}

int max_twisted_degree(const Vec& v, const ModuleOrder& order) {
  int d = kMinusInfinity;
  for (const auto& t : v.terms) d = std::max(d, order.degree(t.mono, t.comp));
  return d;
}

}  // namespace

std::optional<std::size_t> GroebnerBasis::find_divisor(const VTerm& t,
                                                       ReductionStrategy strategy) const {
  Reducer r(order_, order_.rank());
  for (std::size_t k = 0; k < elements_.size(); ++k) r.add(&elements_[k], k);
  const Vec* g = nullptr;
  return r.find(t, strategy, &g);
}

Vec GroebnerBasis::normal_form(const Vec& f, ReductionStrategy strategy) const {
  Reducer r(order_, order_.rank());
  for (std::size_t k = 0; k < elements_.size(); ++k) r.add(&elements_[k], k);
  return r.reduce(f, strategy);
}

Vec GroebnerBasis::normal_form_tracking(const Vec& f, std::vector<Polynomial>& quotients) const {
  Reducer r(order_, order_.rank());
  for (std::size_t k = 0; k < elements_.size(); ++k) r.add(&elements_[k], k);
  std::vector<std::vector<Term>> q(elements_.size());
  Vec rem = r.reduce(f, ReductionStrategy::first_divisor, &q);
  quotients.clear();
  for (auto& terms : q) quotients.emplace_back(ring_, std::move(terms));
  return rem;
}

std::vector<std::vector<Monomial>> GroebnerBasis::lead_ideals() const {
  std::vector<std::vector<Monomial>> out(order_.rank());
  for (const auto& g : elements_) out[g.lead().comp].push_back(g.lead().mono);
  return out;
}

HilbertSeries GroebnerBasis::quotient_hilbert_series() const {
  return hilbert_series(lead_ideals(), order_.twists(), ring_->nvars());
}

bool GroebnerBasis::is_everything() const {
  std::vector<bool> hit(order_.rank(), false);
  for (const auto& g : elements_)
    if (g.lead().mono.is_one()) hit[g.lead().comp] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const ModuleOrder& order, std::vector<Vec> gens,
                         const BuchbergerOptions& options) {
  const int cap = options.degree_cap > 0 ? options.degree_cap : ring->degree_cap();
  const std::size_t rank = order.rank();
  const bool product_criterion = rank == 1;

  struct Input {
    Vec v;
    int sugar;
  };
  std::vector<Input> inputs;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms) {
      if (t.comp >= rank) throw std::invalid_argument("module element outside the free module");
      if (t.mono.size() != ring->nvars()) throw OrderMismatch("module element has wrong variable count");
    }
    Vec v = vec_resort(std::move(g), order);
    if (!options.allow_inhomogeneous && !vec_degree(v, order))
      throw InhomogeneousInput("inhomogeneous generator in Gröbner basis input");
    int s = max_twisted_degree(v, order);
    inputs.push_back(Input{std::move(v), s});
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const Input& a, const Input& b) { return a.sugar < b.sugar; });

  std::vector<Vec> basis;
  std::vector<int> sugar;
  std::vector<Pair> pairs;
  std::size_t next_input = 0;
  bool unit_found = false;

  auto add_element = [&](Vec h, int s) {
    const std::size_t t = basis.size();
    basis.push_back(std::move(h));
    sugar.push_back(s);
    const VTerm& lt = basis[t].lead();
    // Gebauer–Möller: drop old pairs whose lcm is a proper multiple "through" the new lead.
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.comp != lt.comp || !lt.mono.divides(p.lcm)) return false;
      Monomial li = Monomial::lcm(basis[p.i].lead().mono, lt.mono);
      Monomial lj = Monomial::lcm(basis[p.j].lead().mono, lt.mono);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      const VTerm& li = basis[i].lead();
      if (li.comp != lt.comp) continue;
      Monomial l = Monomial::lcm(li.mono, lt.mono);
      int si = sugar[i] + l.degree() - li.mono.degree();
      int st = s + l.degree() - lt.mono.degree();
      fresh.push_back(Pair{i, t, l, lt.comp, std::max(si, st)});
    }
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b)
        if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          drop[a] = true;
          break;
        }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      bool class_coprime = false;
      for (std::size_t b = a; b < fresh.size(); ++b) {
        if (drop[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
        if (product_criterion && Monomial::coprime(basis[fresh[b].i].lead().mono, lt.mono))
          class_coprime = true;
        if (b != a) drop[b] = true;
      }
      if (class_coprime) drop[a] = true;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) pairs.push_back(fresh[a]);
  };

  for (;;) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
    bool take_input = next_input < inputs.size() &&
                      (best == pairs.end() || inputs[next_input].sugar <= best->sugar);
    if (!take_input && best == pairs.end()) break;

    Vec s;
    int s_sugar;
    if (take_input) {
      s = std::move(inputs[next_input].v);
      s_sugar = inputs[next_input].sugar;
      ++next_input;
    } else {
      Pair p = *best;
      pairs.erase(best);
      const Vec& gi = basis[p.i];
      const Vec& gj = basis[p.j];
      Monomial mi = p.lcm / gi.lead().mono, mj = p.lcm / gj.lead().mono;
      s = vec_scale(gi, gi.lead().coef.inverse(), mi);
      s = vec_add_multiple(s, -gj.lead().coef.inverse(), mj, gj, order);
      s_sugar = p.sugar;
    }
    if (s_sugar > options.truncate_degree) continue;
    if (s_sugar > cap)
      throw ResourceCapExceeded("Gröbner basis S-pair degree " + std::to_string(s_sugar) +
                                " exceeds the degree cap " + std::to_string(cap));
    Reducer red(order, rank);
    for (std::size_t k = 0; k < basis.size(); ++k) red.add(&basis[k], k);
    Vec h = red.reduce(std::move(s), ReductionStrategy::first_divisor);
    if (h.is_zero()) continue;
    h = make_monic(std::move(h));
    bool unit = h.lead().mono.is_one() && rank == 1;
    add_element(std::move(h), s_sugar);
    if (unit) {
      unit_found = true;
      break;
    }
  }

  if (unit_found) {
    Vec one;
    one.terms.push_back(VTerm{Monomial(ring->nvars()), 0, ring->field().one()});
    return GroebnerBasis(ring, order, {one});
  }

  // Minimal basis, then tail reduction.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const VTerm& lk = basis[k].lead();
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k) continue;
      const VTerm& ll = basis[l].lead();
      if (ll.comp != lk.comp || !ll.mono.divides(lk.mono)) continue;
      if (!(ll.mono == lk.mono) || l < k) redundant = true;
    }
    if (!redundant) keep.push_back(k);
  }
  Reducer red(order, rank);
  for (std::size_t k : keep) red.add(&basis[k], k);
  std::vector<Vec> reduced;
  reduced.reserve(keep.size());
  for (std::size_t k : keep) {
    Vec tail;
    tail.terms.assign(basis[k].terms.begin() + 1, basis[k].terms.end());
    Vec r = red.reduce(std::move(tail), ReductionStrategy::first_divisor);
    Vec g;
    g.terms.push_back(basis[k].lead());
    g.terms.insert(g.terms.end(), r.terms.begin(), r.terms.end());
    reduced.push_back(make_monic(std::move(g)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Vec& a, const Vec& b) { return order.compare(a.lead(), b.lead()) < 0; });
  return GroebnerBasis(ring, order, std::move(reduced));
}

GroebnerBasis ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             const BuchbergerOptions& options) {
  ModuleOrder order = ModuleOrder::top(ring->order(), {0});
  std::vector<Vec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.ring() && !g.ring()->same_as(*ring)) throw RingMismatch();
    vs.push_back(Vec::from_polynomial(g, 0));
  }
  return buchberger(ring, order, std::move(vs), options);
}

// ---------------------------------------------------------------- syzygies

SyzygyModule syzygies(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  std::vector<Monomial> lead_monos;
  std::vector<std::uint32_t> lead_comps;
  for (const auto& e : g) {
    lead_monos.push_back(e.lead().mono);
    lead_comps.push_back(e.lead().comp);
  }
  SyzygyModule out{ModuleOrder::schreyer(gb.order(), lead_monos, lead_comps), {}};
  const ModuleOrder& order = gb.order();
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g[i].lead().comp != g[j].lead().comp) continue;
      Monomial l = Monomial::lcm(g[i].lead().mono, g[j].lead().mono);
      Monomial mi = l / g[i].lead().mono, mj = l / g[j].lead().mono;
      Scalar ci = g[i].lead().coef.inverse(), cj = g[j].lead().coef.inverse();
      Vec s = vec_scale(g[i], ci, mi);
      s = vec_add_multiple(s, -cj, mj, g[j], order);
      std::vector<Polynomial> q;
      Vec rem = gb.normal_form_tracking(s, q);
      if (!rem.is_zero()) throw std::logic_error("S-vector of a Gröbner basis did not reduce to zero");
      std::vector<VTerm> terms;
      terms.push_back(VTerm{mi, static_cast<std::uint32_t>(i), ci});
      terms.push_back(VTerm{mj, static_cast<std::uint32_t>(j), -cj});
      for (std::size_t k = 0; k < q.size(); ++k)
        for (const auto& t : q[k].terms())
          terms.push_back(VTerm{t.mono, static_cast<std::uint32_t>(k), -t.coef});
      Vec syz = Vec::from_terms(std::move(terms), out.order);
      if (!syz.is_zero()) out.generators.push_back(std::move(syz));
    }
  }
  return out;
}

SubmoduleLifter::SubmoduleLifter(const RingPtr& ring, std::vector<int> target_twists,
                                 const std::vector<Vec>& gens, std::vector<int> gen_degrees,
                                 const std::vector<Vec>& extra, const BuchbergerOptions& options)
    : ring_(ring), rank_(target_twists.size()), ngens_(gens.size()) {
  if (gen_degrees.size() != gens.size())
    throw std::invalid_argument("generator degree list has the wrong length");
  target_order_ = ModuleOrder::top(ring->order(), target_twists);
  source_order_ = ModuleOrder::top(ring->order(), gen_degrees);
  std::vector<int> twists = target_twists;
  twists.insert(twists.end(), gen_degrees.begin(), gen_degrees.end());
  ModuleOrder order = ModuleOrder::block(ring->order(), twists, rank_);

  std::vector<Vec> elems;
  elems.reserve(gens.size() + extra.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<VTerm> terms = gens[j].terms;
    terms.push_back(VTerm{Monomial(ring->nvars()), static_cast<std::uint32_t>(rank_ + j),
                          ring->field().one()});
    elems.push_back(Vec::from_terms(std::move(terms), order));
  }
  for (const auto& n : extra) elems.push_back(vec_resort(n, order));
  gb_ = buchberger(ring, order, std::move(elems), options);

  for (const auto& e : gb_.elements()) {
    if (e.lead().comp < rank_) continue;
    Vec k = e;
    for (auto& t : k.terms) t.comp -= static_cast<std::uint32_t>(rank_);
    kernel_.push_back(vec_resort(std::move(k), source_order_));
  }
}

std::optional<std::vector<Polynomial>> SubmoduleLifter::lift(const Vec& v) const {
  Vec nf = gb_.normal_form(vec_resort(v, gb_.order()));
  std::vector<std::vector<Term>> cof(ngens_);
  for (const auto& t : nf.terms) {
    if (t.comp < rank_) return std::nullopt;
    cof[t.comp - rank_].push_back(Term{t.mono, -t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(ngens_);
  for (auto& terms : cof) out.emplace_back(ring_, std::move(terms));
  return out;
}

bool SubmoduleLifter::contains(const Vec& v) const {
  Vec nf = gb_.normal_form(vec_resort(v, gb_.order()));
  return nf.is_zero() || nf.lead().comp >= rank_;
}

std::vector<Vec> syzygies_of(const RingPtr& ring, const std::vector<int>& target_twists,
                             const std::vector<Vec>& gens, const std::vector<int>& gen_degrees,
                             const std::vector<Vec>& extra) {
  return SubmoduleLifter(ring, target_twists, gens, gen_degrees, extra).kernel();
}

}  // namespace kdg
