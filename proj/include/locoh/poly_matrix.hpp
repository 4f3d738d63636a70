#pragma once

#include <cstddef>
#include <vector>

#include "locoh/matrix.hpp"
#include "locoh/nested_poly.hpp"

namespace locoh {

/// Dense matrix over R_0 (polynomials in the X-variables).
class PolyMatrix {
 public:
  PolyMatrix(CoefficientRing ring, std::size_t rows, std::size_t cols);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poly& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

  /// Columns of this followed by the columns of `right`.
  PolyMatrix hconcat(const PolyMatrix& right) const;
  PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Constant matrix; throws InvalidArgument if some entry is not constant.
  ExactMatrix to_constant() const;
  /// Every entry evaluated at X_1 = ... = X_m = 1.
  ExactMatrix evaluated_at_ones() const;

  bool operator==(const PolyMatrix& other) const {
    return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  CoefficientRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Rank over the fraction field of R_0 (fraction-free elimination with exact
/// polynomial division).
std::size_t rank(const PolyMatrix& m);

/// Exact determinant in R_0. Throws NotSquare.
Poly determinant(const PolyMatrix& m);

}  // namespace locoh
