#include "kdg/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace kdg {

std::string int_or_infinity(int v) {
  if (v == kMinusInfinity) return "-inf";
  if (v == kPlusInfinity) return "+inf";
  return std::to_string(v);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t c) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_ = {c};
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<std::int64_t> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

std::int64_t LaurentPoly::operator[](int e) const {
  if (e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a[e] + b[e];
  return LaurentPoly::from_coefficients(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::divided_by_one_minus_t() const {
  if (at_one() != 0) throw std::logic_error("numerator not divisible by (1 - t)");
  if (is_zero()) return {};
  // q = p / (1 - t): q_k = sum_{j <= k} p_j.
  std::vector<std::int64_t> q(coeffs_.size() - 1);
  std::int64_t run = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    run += coeffs_[k];
    q[k] = run;
  }
  return from_coefficients(low_, std::move(q));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = low_; e <= high(); ++e) {
    std::int64_t c = (*this)[e];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

HilbertSeries::Reduced HilbertSeries::reduced() const {
  Reduced r{numerator_, nvars_};
  if (r.numerator.is_zero()) return {LaurentPoly{}, kMinusInfinity};
  while (r.pole_order > 0 && r.numerator.at_one() == 0) {
    r.numerator = r.numerator.divided_by_one_minus_t();
    --r.pole_order;
  }
  return r;
}

int HilbertSeries::dimension() const { return reduced().pole_order; }

namespace {

// C(n, k) for n >= 0, 0 <= k; small arguments only.
std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

LaurentPoly one_minus_t_power(int k) {
  LaurentPoly r = LaurentPoly::constant(1);
  const LaurentPoly f = LaurentPoly::from_coefficients(0, {1, -1});
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

}  // namespace

std::int64_t HilbertSeries::value(int d) const {
  Reduced r = reduced();
  if (r.numerator.is_zero()) return 0;
  if (r.pole_order == 0) return r.numerator[d];
  std::int64_t total = 0;
  for (int i = r.numerator.low(); i <= std::min(d, r.numerator.high()); ++i)
    total += r.numerator[i] * binomial(d - i + r.pole_order - 1, r.pole_order - 1);
  return total;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  int m = std::max(a.nvars_, b.nvars_);
  return {a.numerator_ * one_minus_t_power(m - a.nvars_) + b.numerator_ * one_minus_t_power(m - b.nvars_),
          m};
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  return a + HilbertSeries(-b.numerator_, b.nvars_);
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) { return (a - b).is_zero(); }

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

LaurentPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return LaurentPoly::constant(1);
  if (gens.front().degree() == 0) return {};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    LaurentPoly r = LaurentPoly::constant(1);
    for (const auto& g : gens)
      r = r * (LaurentPoly::constant(1) - LaurentPoly::monomial(g.degree(), 1));
    return r;
  }
  // Pivot on the variable shared by the most generators, at its smallest positive exponent.
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  int e = 0;
  for (const auto& g : gens)
    if (g[best] > 0 && (e == 0 || g[best] < e)) e = g[best];
  Monomial pivot = Monomial::variable(nvars, best, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(best, std::max(0, g[best] - e));
    colon.push_back(q);
  }
  return numerator_rec(std::move(with_pivot), nvars) +
         numerator_rec(std::move(colon), nvars).shifted(e);
}

}  // namespace

LaurentPoly hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars) {
  return numerator_rec(std::move(generators), nvars);
}

HilbertSeries hilbert_series(const std::vector<std::vector<Monomial>>& leads,
                             const std::vector<int>& twists, std::size_t nvars) {
  LaurentPoly total;
  for (std::size_t c = 0; c < twists.size(); ++c) {
    std::vector<Monomial> gens = c < leads.size() ? leads[c] : std::vector<Monomial>{};
    total = total + hilbert_numerator(std::move(gens), nvars).shifted(twists[c]);
  }
  return {total, static_cast<int>(nvars)};
}

int krull_dim_combinatorial(const std::vector<Monomial>& generators, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : generators) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) mask |= 1u << v;
    if (mask == 0) return kMinusInfinity;
    supports.push_back(mask);
  }
  int best = 0;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t u = 0; u < limit; ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int krull_dim_pole_order(const std::vector<Monomial>& generators, std::size_t nvars) {
  return HilbertSeries(hilbert_numerator(generators, nvars), static_cast<int>(nvars)).dimension();
}

}  // namespace kdg
