#include "kdg/linalg.hpp"

#include <algorithm>

namespace kdg {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

struct ModP {
  using value = std::int64_t;
  std::int64_t p;
  value from(const Scalar& s) const { return s.residue(); }
  bool zero(value v) const { return v == 0; }
  value sub_mul(value a, value f, value b) const {  // a - f*b
    value r = (a - (f * b) % p) % p;
    return r < 0 ? r + p : r;
  }
  value div(value a, value b) const { return (a * mod_inverse(b, p)) % p; }
  value add(value a, value b) const { return (a + b) % p; }
};

struct Rat {
  using value = mpq_class;
  value from(const Scalar& s) const { return s.rational(); }
  bool zero(const value& v) const { return sgn(v) == 0; }
  value sub_mul(const value& a, const value& f, const value& b) const { return a - f * b; }
  value div(const value& a, const value& b) const { return a / b; }
  value add(const value& a, const value& b) const { return a + b; }
};

template <class F>
class Echelon {
 public:
  using value = typename F::value;
  using Row = std::vector<std::pair<std::uint32_t, value>>;  // sorted by column, nonzero

  explicit Echelon(F f) : f_(std::move(f)) {}

  Row convert(const SparseRow& in) const {
    std::map<std::uint32_t, value> acc;
    for (const auto& [c, s] : in) {
      value v = f_.from(s);
      if (f_.zero(v)) continue;
      auto it = acc.find(c);
      if (it == acc.end()) {
        acc.emplace(c, v);
      } else {
        it->second = f_.add(it->second, v);
      }
    }
    Row r;
    for (auto& [c, v] : acc)
      if (!f_.zero(v)) r.emplace_back(c, v);
    return r;
  }

  // Reduces r against stored pivots until its leading column is free.
  void reduce(Row& r) const {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) return;
      const Row& p = rows_[it->second];
      value factor = f_.div(r.front().second, p.front().second);
      Row out;
      out.reserve(r.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          out.push_back(std::move(r[i++]));
        } else if (i == r.size() || p[j].first < r[i].first) {
          value v = f_.sub_mul(value(0), factor, p[j].second);
          out.emplace_back(p[j].first, std::move(v));
          ++j;
        } else {
          value v = f_.sub_mul(r[i].second, factor, p[j].second);
          if (!f_.zero(v)) out.emplace_back(r[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }

  bool add(const SparseRow& in) {
    Row r = convert(in);
    reduce(r);
    if (r.empty()) return false;
    pivots_.emplace(r.front().first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool in_span(const SparseRow& in) const {
    Row r = convert(in);
    reduce(r);
    return r.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  F f_;
  std::vector<Row> rows_;
  std::map<std::uint32_t, std::size_t> pivots_;
};

}  // namespace

struct SparseEchelon::Impl {
  std::unique_ptr<Echelon<ModP>> modp;
  std::unique_ptr<Echelon<Rat>> rat;
};

SparseEchelon::SparseEchelon(const Field& field) : impl_(std::make_unique<Impl>()) {
  if (field.is_prime_field())
    impl_->modp = std::make_unique<Echelon<ModP>>(ModP{field.characteristic()});
  else
    impl_->rat = std::make_unique<Echelon<Rat>>(Rat{});
}

SparseEchelon::~SparseEchelon() = default;
SparseEchelon::SparseEchelon(SparseEchelon&&) noexcept = default;
SparseEchelon& SparseEchelon::operator=(SparseEchelon&&) noexcept = default;

bool SparseEchelon::add(const SparseRow& row) {
  return impl_->modp ? impl_->modp->add(row) : impl_->rat->add(row);
}

bool SparseEchelon::in_span(const SparseRow& row) const {
  return impl_->modp ? impl_->modp->in_span(row) : impl_->rat->in_span(row);
}

std::size_t SparseEchelon::rank() const {
  return impl_->modp ? impl_->modp->rank() : impl_->rat->rank();
}

std::size_t sparse_rank(const Field& field, const std::vector<SparseRow>& rows) {
  SparseEchelon e(field);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace kdg
