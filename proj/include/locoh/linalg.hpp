#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "locoh/matrix.hpp"

namespace locoh {

/// Coordinate-list matrix used for large, mostly-zero constant matrices
/// (strands). Duplicate coordinates are not allowed.
struct SparseMatrix {
  ScalarDomain domain;
  std::size_t rows = 0;
  std::size_t cols = 0;
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };
  std::vector<Entry> entries;

  ExactMatrix to_dense() const;
};

/// Rank over the fraction field of the matrix's domain. Uses fraction-free
/// (Bareiss) elimination over ZZ/QQ and word-size elimination over GF(p);
/// the matrix is first split into the connected blocks of its nonzero
/// pattern, which leaves the rank unchanged. Pivots are the first nonzero
/// entry scanning down the current column.
std::size_t rank(const ExactMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Rank after mapping every entry into `over` (e.g. an integer matrix read mod p).
std::size_t rank(const ExactMatrix& m, const ScalarDomain& over);

/// Rank by plain dense elimination with no block splitting. Slower; kept as
/// an independent path for cross-checking `rank`.
std::size_t dense_rank(const ExactMatrix& m);

/// Exact determinant. Throws NotSquare.
Scalar determinant(const ExactMatrix& m);

/// Invariant factors of an integer matrix: a list of length rows() holding
/// d_1 | d_2 | ... | d_r (positive) followed by rows() - r zeros, so that
/// coker m = (+) ZZ/d_i with ZZ/0 = ZZ. Throws DomainMismatch for non-ZZ input.
std::vector<mpz_class> smith_normal_form(const ExactMatrix& m);

}  // namespace locoh
