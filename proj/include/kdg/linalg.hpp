#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "kdg/scalar.hpp"

namespace kdg {

/// Sparse row: (column, value) pairs with distinct columns, any order, zeros allowed.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incremental row echelon form over a field, for rank and span-membership questions.
/// Prime fields run on plain int64 residues; the rationals on GMP.
class SparseEchelon {
 public:
  explicit SparseEchelon(const Field& field);
  ~SparseEchelon();
  SparseEchelon(SparseEchelon&&) noexcept;
  SparseEchelon& operator=(SparseEchelon&&) noexcept;

  /// Inserts the row; true when it was independent of the rows so far.
  bool add(const SparseRow& row);
  bool in_span(const SparseRow& row) const;
  std::size_t rank() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Rank of a set of sparse rows.
std::size_t sparse_rank(const Field& field, const std::vector<SparseRow>& rows);

}  // namespace kdg
