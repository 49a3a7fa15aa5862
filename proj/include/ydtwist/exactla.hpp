#pragma once

// Dense exact linear algebra over Q(zeta_ell).

#include <cstddef>
#include <vector>

#include "ydtwist/cyclotomic.hpp"

namespace ydtwist {

class CycMatrix {
 public:
  CycMatrix(const CycField& field, std::size_t rows, std::size_t cols);
  /// Row-major entries; every entry must belong to `field`.
  CycMatrix(const CycField& field, std::size_t rows, std::size_t cols, std::vector<CycScalar> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const CycField& field() const noexcept { return *field_; }

  CycScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const CycScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<CycScalar> column(std::size_t c) const;
  CycMatrix transpose() const;

 private:
  const CycField* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycScalar> entries_;
};

struct ColumnReduction {
  CycMatrix reduced;                    ///< reduced column echelon form; nonzero columns first
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  ///< pivot row of reduced column j, for j < rank
};

/// Reduced column echelon form by exact elimination. Rows are scanned top to
/// bottom; in each row the leftmost remaining column with a nonzero entry
/// becomes the next pivot column, is scaled to pivot 1, and is used to clear
/// that row in every other column.
ColumnReduction column_reduce(const CycMatrix& m);

std::size_t rank(const CycMatrix& m);

}  // namespace ydtwist
