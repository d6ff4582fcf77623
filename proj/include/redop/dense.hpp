#pragma once

#include <cstddef>
#include <vector>

#include "redop/scalar.hpp"

namespace redop {

/// Row-major dense matrix of exact rationals. Only used for the small
/// coordinate problems behind the lattice join and quotient-algebra
/// computations; series elimination itself works on sparse term lists.
class DenseMatrix {
public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form with leftmost pivoting; returns the
  /// pivot column of each surviving row, top to bottom.
  std::vector<std::size_t> rref();

  /// Basis of {x : M x = 0} as coordinate vectors, one per free column,
  /// deterministic order.
  std::vector<std::vector<Scalar>> null_space() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

} // namespace redop
