#include "locoh/poly_matrix.hpp"

#include <algorithm>

#include "locoh/error.hpp"
#include "locoh/linalg.hpp"

namespace locoh {

PolyMatrix::PolyMatrix(CoefficientRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& right) const {
  if (!(ring_ == right.ring_) || rows_ != right.rows_) {
    throw Error(ErrorKind::LengthMismatch, "column concatenation needs equal row counts over one ring");
  }
  PolyMatrix out(ring_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out.at(r, cols_ + c) = right(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

ExactMatrix PolyMatrix::to_constant() const {
  std::vector<Scalar> vals;
  vals.reserve(entries_.size());
  for (const auto& p : entries_) {
    if (!p.is_constant()) throw Error(ErrorKind::InvalidArgument, "matrix entry is not a constant");
    vals.push_back(p.constant_term());
  }
  return ExactMatrix(ring_.base, rows_, cols_, std::move(vals));
}

ExactMatrix PolyMatrix::evaluated_at_ones() const {
  std::vector<Scalar> vals;
  vals.reserve(entries_.size());
  for (const auto& p : entries_) {
    Scalar s = 0;
    for (const auto& [m, c] : p.terms()) s = ring_.base.add(s, c);
    vals.push_back(s);
  }
  return ExactMatrix(ring_.base, rows_, cols_, std::move(vals));
}

namespace {

std::size_t poly_bareiss(std::vector<Poly>& a, std::size_t rows, std::size_t cols, const CoefficientRing& ring,
                         int* sign) {
  Poly prev = ring.one();
  std::size_t r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
      if (sign) *sign = -*sign;
    }
    const Poly pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Poly f = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly v = pivot * a[i * cols + j] - f * a[r * cols + j];
        a[i * cols + j] = v.divide_exact(prev);
      }
      a[i * cols + c] = ring.zero();
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const PolyMatrix& m) {
  if (m.ring().x_vars == 0) return rank(m.to_constant());
  std::vector<Poly> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(m(r, c));
  return poly_bareiss(a, m.rows(), m.cols(), m.ring(), nullptr);
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NotSquare,
                "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return m.ring().one();
  std::vector<Poly> a;
  a.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.push_back(m(r, c));
  int sign = 1;
  if (poly_bareiss(a, n, n, m.ring(), &sign) < n) return m.ring().zero();
  return sign > 0 ? a[n * n - 1] : -a[n * n - 1];
}

}  // namespace locoh
