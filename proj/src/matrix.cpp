#include "kdg/matrix.hpp"

#include <sstream>

namespace kdg {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_columns(const RingPtr& ring, std::size_t rows,
                                    const std::vector<Vec>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::vector<Term>> entries(rows);
    for (const auto& t : cols[j].terms) {
      if (t.comp >= rows) throw std::invalid_argument("column element outside the matrix rows");
      entries[t.comp].push_back(Term{t.mono, t.coef});
    }
    for (std::size_t i = 0; i < rows; ++i)
      if (!entries[i].empty()) m(i, j) = Polynomial(ring, std::move(entries[i]));
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

Vec PolyMatrix::column(std::size_t c, const ModuleOrder& order) const {
  std::vector<VTerm> terms;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& t : (*this)(r, c).terms())
      terms.push_back(VTerm{t.mono, static_cast<std::uint32_t>(r), t.coef});
  return Vec::from_terms(std::move(terms), order);
}

std::vector<Vec> PolyMatrix::columns(const ModuleOrder& order) const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c, order));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::scaled(const Scalar& s) const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = p.scaled(s);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix m(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  PolyMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.ring_ ? a.ring_ : b.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b(k, l).is_zero()) m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return m;
}

PolyMatrix PolyMatrix::hstack(const std::vector<PolyMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  RingPtr ring;
  for (const auto& b : blocks) {
    if (b.rows_ != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols_;
    if (!ring) ring = b.ring_;
  }
  PolyMatrix m(ring, rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    m.set_block(0, c0, b);
    c0 += b.cols_;
  }
  return m;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw std::invalid_argument("block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix m(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

PolyMatrix PolyMatrix::reduced(const GroebnerBasis& ideal_gb) const {
  PolyMatrix m = *this;
  if (ideal_gb.size() == 0) return m;
  for (auto& p : m.data_)
    if (!p.is_zero()) p = vec_component(ideal_gb.normal_form(Vec::from_polynomial(p, 0)), 0, ring_);
  return m;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace kdg
