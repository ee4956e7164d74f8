#include "kdg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace kdg {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables are supported");
}

void check_exponent(int e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max())
    throw std::out_of_range("exponent out of range: " + std::to_string(e));
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  check_nvars(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  check_exponent(e);
  degree_ += e - exps_[i];
  exps_[i] = static_cast<std::uint16_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw OrderMismatch("monomial product across variable counts");
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    int e = a.exps_[i] + b.exps_[i];
    check_exponent(e);
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exps_[i] < b.exps_[i]) throw std::domain_error("monomial division not exact");
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::min(a.exps_[i], b.exps_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars_; ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::resized(std::size_t nvars) const {
  Monomial r(nvars);
  for (std::size_t i = 0; i < std::min<std::size_t>(nvars, nvars_); ++i) r.set(i, exps_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw OrderMismatch("comparing monomials in " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()) + " variables");
  const std::size_t n = a.size();
  if (kind == OrderKind::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_reference(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw OrderMismatch("comparing monomials of different length");
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da > db) return std::strong_ordering::greater;
  if (da < db) return std::strong_ordering::less;
  std::vector<int> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  auto last = std::find_if(diff.rbegin(), diff.rend(), [](int v) { return v != 0; });
  if (last == diff.rend()) return std::strong_ordering::equal;
  return *last < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b,
                                   const MonomialOrder& order) {
  return order.compare(a, b);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace kdg
