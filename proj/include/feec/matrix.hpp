#pragma once

#include <cstddef>
#include <vector>

#include "feec/scalar.hpp"

namespace feec {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// All rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<ExactScalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void append_row(const std::vector<ExactScalar>& row);
  std::vector<ExactScalar> row(std::size_t i) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

/// [top; bottom].  Column counts must agree.
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

/// Exact rank.  Rows are scaled to integers, then reduced by fraction-free
/// (Bareiss) elimination, pivoting on the first nonzero entry of each column.
std::size_t rank_exact(const RationalMatrix& m);

/// `row` reduced against the row space of m: the zero vector iff row lies in
/// that space, otherwise a nonzero witness with zeros in every pivot column.
std::vector<ExactScalar> residual(const RationalMatrix& m, const std::vector<ExactScalar>& row);

}  // namespace feec
