#include "kdg/quotient_ring.hpp"

#include <sstream>

namespace kdg {

QuotientRing::QuotientRing(RingPtr ring, std::vector<Polynomial> ideal) : ring_(std::move(ring)) {
  for (auto& g : ideal) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_as(*ring_)) throw RingMismatch();
    if (!g.is_homogeneous())
      throw InhomogeneousInput("ideal generator " + g.to_string() + " is not homogeneous");
    ideal_.push_back(std::move(g));
  }
  gb_ = ideal_groebner(ring_, ideal_);
  zero_ring_ = gb_.is_everything() && gb_.size() > 0;
  auto leads = gb_.lead_ideals();
  int combinatorial = krull_dim_combinatorial(leads[0], ring_->nvars());
  dim_ = krull_dim_pole_order(leads[0], ring_->nvars());
  if (dim_ != combinatorial)
    throw std::logic_error("Krull dimension routes disagree for " + describe());
}

std::shared_ptr<const QuotientRing> QuotientRing::make(RingPtr ring, std::vector<Polynomial> ideal) {
  return std::make_shared<const QuotientRing>(std::move(ring), std::move(ideal));
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  if (p.is_zero()) return Polynomial(ring_);
  if (p.ring() && !p.ring()->same_as(*ring_)) throw RingMismatch();
  Vec nf = gb_.normal_form(Vec::from_polynomial(p, 0));
  return vec_component(nf, 0, ring_);
}

HilbertSeries QuotientRing::hilbert_series() const { return gb_.quotient_hilbert_series(); }

bool QuotientRing::same_as(const QuotientRing& other) const {
  if (!ring_->same_as(*other.ring_)) return false;
  if (gb_.size() != other.gb_.size()) return false;
  for (std::size_t k = 0; k < gb_.size(); ++k)
    if (!(gb_.elements()[k] == other.gb_.elements()[k])) return false;
  return true;
}

std::string QuotientRing::describe() const {
  std::ostringstream os;
  os << "k[";
  for (std::size_t i = 0; i < ring_->nvars(); ++i) os << (i ? "," : "") << ring_->variables()[i];
  os << "]";
  if (!ideal_.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < ideal_.size(); ++i) os << (i ? ", " : "") << ideal_[i].to_string();
    os << ")";
  }
  return os.str();
}

bool is_nilpotent(const Polynomial& g, const QuotientRing& q) {
  Polynomial r = q.reduce(g);
  if (r.is_zero()) return true;
  if (q.nvars() + 1 > kMaxVariables)
    throw ResourceCapExceeded("nilpotency test needs one spare variable");
  std::vector<std::string> vars = q.ring()->variables();
  std::string aux = "_rabinowitsch";
  while (q.ring()->index_of(aux)) aux += "_";
  vars.push_back(aux);
  RingPtr big = PolyRing::make(q.field(), vars, q.ring()->order(), q.ring()->degree_cap());
  std::vector<Polynomial> gens;
  for (const auto& j : q.ideal()) gens.push_back(j.embedded(big));
  Polynomial t = Polynomial::variable(big, q.nvars());
  gens.push_back(Polynomial::constant(big, 1) - t * r.embedded(big));
  BuchbergerOptions opts;
  opts.allow_inhomogeneous = true;
  GroebnerBasis gb = ideal_groebner(big, gens, opts);
  return gb.is_everything();
}

}  // namespace kdg
