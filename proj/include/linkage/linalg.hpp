#pragma once

#include <vector>

#include "linkage/field.hpp"

namespace linkage {

/// Dense matrix over a Field, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static DenseMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  DenseMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Field& f, DenseMatrix a);
std::size_t rank(const Field& f, const DenseMatrix& a);

/// Basis of { v : A v = 0 } as columns of the returned matrix (cols x k).
DenseMatrix kernel(const Field& f, const DenseMatrix& a);

/// Solves A X = B; returns false if inconsistent. Free variables are set to 0.
bool solve(const Field& f, const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& x);

DenseMatrix multiply(const Field& f, const DenseMatrix& a, const DenseMatrix& b);

}  // namespace linkage
