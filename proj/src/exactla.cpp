#include "ydtwist/exactla.hpp"

#include <utility>

#include "ydtwist/error.hpp"

namespace ydtwist {

CycMatrix::CycMatrix(const CycField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

CycMatrix::CycMatrix(const CycField& field, std::size_t rows, std::size_t cols, std::vector<CycScalar> entries)
    : field_(&field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::InvalidParams, "matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (&e.field() != field_) throw Error(ErrorCode::ContextMismatch, "matrix entries from different cyclotomic fields");
}

std::vector<CycScalar> CycMatrix::column(std::size_t c) const {
  std::vector<CycScalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ColumnReduction column_reduce(const CycMatrix& m) {
  ColumnReduction out{m, 0, {}};
  CycMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t next = 0;
  for (std::size_t r = 0; r < rows && next < cols; ++r) {
    std::size_t pc = next;
    while (pc < cols && a(r, pc).is_zero()) ++pc;
    if (pc == cols) continue;
    if (pc != next)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, pc), a(i, next));
    const CycScalar scale = a(r, next).inv();
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, next).is_zero()) a(i, next) = a(i, next) * scale;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == next || a(r, c).is_zero()) continue;
      const CycScalar factor = a(r, c);
      // Rows above r are zero in the pivot column.
      for (std::size_t i = r; i < rows; ++i)
        if (!a(i, next).is_zero()) a(i, c) -= factor * a(i, next);
    }
    out.pivot_rows.push_back(r);
    ++next;
  }
  out.rank = next;
  return out;
}

std::size_t rank(const CycMatrix& m) { return column_reduce(m).rank; }

}  // namespace ydtwist
