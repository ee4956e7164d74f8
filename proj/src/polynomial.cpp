#include "kdg/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kdg {

PolyRing::PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order,
                   int degree_cap)
    : field_(field), variables_(std::move(variables)), order_(order), degree_cap_(degree_cap) {
  if (variables_.size() > kMaxVariables)
    throw std::invalid_argument("too many variables");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  if (degree_cap_ < 1) throw std::invalid_argument("degree cap must be positive");
}

RingPtr PolyRing::make(Field field, std::vector<std::string> variables, MonomialOrder order,
                       int degree_cap) {
  return std::make_shared<const PolyRing>(field, std::move(variables), order, degree_cap);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

bool PolyRing::same_as(const PolyRing& other) const {
  return field_ == other.field_ && variables_ == other.variables_ &&
         order_.kind == other.order_.kind && degree_cap_ == other.degree_cap_;
}

namespace {

const RingPtr& common_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring()) return a.ring();
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) throw RingMismatch();
  return a.ring();
}

// Sorts decreasing and merges equal monomials, dropping zeros.
std::vector<Term> normalize(const MonomialOrder& order, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return order.compare(x.mono, y.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw OrderMismatch("term has wrong variable count");
    if (!(t.coef.field() == ring_->field())) throw FieldMismatch();
  }
  terms_ = normalize(ring_->order(), std::move(terms));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->nvars());
  return Polynomial(ring, {Term{one, c}});
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int power) {
  Monomial m = Monomial::variable(ring->nvars(), index, power);
  Scalar one = ring->field().one();
  return Polynomial(ring, {Term{m, one}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  return Polynomial(ring, {Term{m, c}});
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree();
}

int Polynomial::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_unit_constant() const {
  return terms_.size() == 1 && terms_.front().mono.is_one();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = common_ring(a, b);
  if (a.is_zero()) return Polynomial(ring, b.terms_);
  if (b.is_zero()) return Polynomial(ring, a.terms_);
  const MonomialOrder& order = ring->order();
  Polynomial r(ring);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = order.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = a.terms_[i].coef + b.terms_[j].coef;
      if (!s.is_zero()) r.terms_.push_back(Term{a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
  Polynomial r(ring);
  r.terms_ = normalize(ring->order(), std::move(prod));
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embedded(const RingPtr& target) const {
  if (!ring_) return Polynomial(target);
  if (!(target->field() == ring_->field()) || target->nvars() < ring_->nvars())
    throw RingMismatch();
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (ring_->variables()[i] != target->variables()[i]) throw RingMismatch();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{t.mono.resized(target->nvars()), t.coef});
  return Polynomial(target, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef))
      return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef.prints_negative();
    Scalar mag = neg ? -t.coef : t.coef;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag.is_one();
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << monomial_to_string(t.mono, ring_->variables());
    }
  }
  return os.str();
}

Polynomial poly_op(const Polynomial& lhs, const Polynomial& rhs, PolyOp op) {
  if (lhs.ring() && rhs.ring() && lhs.ring() != rhs.ring() &&
      !lhs.ring()->same_as(*rhs.ring()))
    throw RingMismatch();
  switch (op) {
    case PolyOp::add: return lhs + rhs;
    case PolyOp::sub: return lhs - rhs;
    case PolyOp::mul: return lhs * rhs;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

}  // namespace kdg
