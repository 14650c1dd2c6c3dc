#include "linkage/linalg.hpp"

namespace linkage {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Echelon row_reduce(const Field& f, DenseMatrix a) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && Field::is_zero(a.at(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(p, k), a.at(r, k));
    Scalar inv = f.inv(a.at(r, c));
    for (std::size_t k = c; k < a.cols(); ++k) a.at(r, k) = f.mul(a.at(r, k), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || Field::is_zero(a.at(i, c))) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!Field::is_zero(a.at(r, k))) a.at(i, k) = f.sub(a.at(i, k), f.mul(factor, a.at(r, k)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Field& f, const DenseMatrix& a) { return row_reduce(f, a).pivots.size(); }

DenseMatrix kernel(const Field& f, const DenseMatrix& a) {
  Echelon e = row_reduce(f, a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix k(a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k.at(e.pivots[r], j) = f.neg(e.reduced.at(r, fc));
  }
  return k;
}

bool solve(const Field& f, const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& x) {
  if (a.rows() != b.rows()) throw StructuralError("solve: row mismatch");
  DenseMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  Echelon e = row_reduce(f, std::move(aug));
  x = DenseMatrix(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return false;
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.reduced.at(r, a.cols() + j);
  }
  return true;
}

DenseMatrix multiply(const Field& f, const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("multiply: dimension mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (Field::is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!Field::is_zero(b.at(k, j))) c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

}  // namespace linkage
