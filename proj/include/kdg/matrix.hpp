#pragma once

#include <vector>

#include "kdg/groebner.hpp"

namespace kdg {

/// Dense matrix of polynomials over one ambient ring. Columns are module elements.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(const RingPtr& ring, std::size_t n);
  /// Columns given as module elements of S^rows.
  static PolyMatrix from_columns(const RingPtr& ring, std::size_t rows, const std::vector<Vec>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Vec column(std::size_t c, const ModuleOrder& order) const;
  std::vector<Vec> columns(const ModuleOrder& order) const;

  PolyMatrix transpose() const;
  PolyMatrix scaled(const Scalar& s) const;
  PolyMatrix operator-() const { return scaled(ring_->field().from_int(-1)); }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Kronecker product: (a ⊗ b)(i·rb + k, j·cb + l) = a(i,j)·b(k,l).
  static PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix hstack(const std::vector<PolyMatrix>& blocks, std::size_t rows);
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block);
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Entry-wise reduction modulo an ideal Gröbner basis.
  PolyMatrix reduced(const GroebnerBasis& ideal_gb) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

}  // namespace kdg
