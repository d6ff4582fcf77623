#include "redop/dense.hpp"

#include <algorithm>

namespace redop {

std::vector<std::size_t> DenseMatrix::rref() {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero())
      ++pivot;
    if (pivot == rows_)
      continue;
    if (pivot != row)
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(pivot, c), at(row, c));
    const Scalar inv = at(row, col).reciprocal();
    for (std::size_t c = col; c < cols_; ++c)
      at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero())
        continue;
      const Scalar factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        at(r, c) -= factor * at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

std::vector<std::vector<Scalar>> DenseMatrix::null_space() const {
  DenseMatrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots)
    is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Scalar> vec(cols_, Scalar(0));
    vec[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      vec[pivots[r]] = -reduced.at(r, free);
    basis.push_back(std::move(vec));
  }
  return basis;
}

} // namespace redop
