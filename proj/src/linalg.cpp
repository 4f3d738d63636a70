#include "locoh/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "locoh/error.hpp"

namespace locoh {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    const std::uint64_t scale = inverse(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * scale % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
      }
    }
    ++r;
  }
  return r;
}

// Fraction-free elimination; every stored entry stays an integer minor.
// Returns the rank; `a` is left in echelon form.
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols, int* sign = nullptr) {
  mpz_class prev = 1;
  std::size_t r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
      if (sign) *sign = -*sign;
    }
    const mpz_class& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * a[i * cols + j] - f * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

// Clears denominators row by row; row scaling does not change the rank and
// multiplies the determinant by the returned factor.
std::vector<mpz_class> integer_rows(const std::vector<Scalar>& dense, std::size_t rows, std::size_t cols,
                                    mpz_class* scale = nullptr) {
  std::vector<mpz_class> out(rows * cols);
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), dense[i * cols + j].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& x = dense[i * cols + j];
      out[i * cols + j] = x.get_num() * (lcm / x.get_den());
    }
    if (scale) *scale *= lcm;
  }
  return out;
}

std::size_t dense_block_rank(const ScalarDomain& dom, const std::vector<Scalar>& dense, std::size_t rows,
                             std::size_t cols) {
  if (dom.kind() == DomainKind::PrimeField) {
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) a[i] = dense[i].get_num().get_ui();
    return rank_mod_p(std::move(a), rows, cols, dom.modulus());
  }
  auto a = integer_rows(dense, rows, cols);
  return bareiss(a, rows, cols);
}

}  // namespace

ExactMatrix SparseMatrix::to_dense() const {
  std::vector<Scalar> dense(rows * cols);
  for (const auto& e : entries) dense.at(e.row * cols + e.col) = e.value;
  return ExactMatrix(domain, rows, cols, std::move(dense));
}

std::size_t rank(const SparseMatrix& m) {
  const std::size_t R = m.rows, C = m.cols;
  DisjointSets sets(R + C);
  for (const auto& e : m.entries) {
    if (e.row >= R || e.col >= C) throw Error(ErrorKind::LengthMismatch, "sparse entry outside the matrix");
    m.domain.require(e.value);
    if (e.value != 0) sets.unite(e.row, R + e.col);
  }
  // Blocks keep ascending row/column order so pivoting stays deterministic.
  std::vector<std::vector<std::size_t>> block_rows(R + C), block_cols(R + C);
  std::vector<std::vector<const SparseMatrix::Entry*>> block_entries(R + C);
  std::vector<bool> row_seen(R, false), col_seen(C, false);
  for (const auto& e : m.entries) {
    if (e.value == 0) continue;
    const std::size_t root = sets.find(e.row);
    block_entries[root].push_back(&e);
    if (!row_seen[e.row]) {
      row_seen[e.row] = true;
      block_rows[root].push_back(e.row);
    }
    if (!col_seen[e.col]) {
      col_seen[e.col] = true;
      block_cols[root].push_back(e.col);
    }
  }
  std::size_t total = 0;
  std::vector<std::size_t> row_pos(R), col_pos(C);
  for (std::size_t root = 0; root < R + C; ++root) {
    if (block_entries[root].empty()) continue;
    auto& rows = block_rows[root];
    auto& cols = block_cols[root];
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
    for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;
    std::vector<Scalar> dense(rows.size() * cols.size());
    for (const auto* e : block_entries[root]) dense[row_pos[e->row] * cols.size() + col_pos[e->col]] = e->value;
    total += dense_block_rank(m.domain, dense, rows.size(), cols.size());
  }
  return total;
}

std::size_t rank(const ExactMatrix& m) {
  SparseMatrix sparse{m.domain(), m.rows(), m.cols(), {}};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) sparse.entries.push_back({r, c, m(r, c)});
  return rank(sparse);
}

std::size_t rank(const ExactMatrix& m, const ScalarDomain& over) { return rank(m.over(over)); }

std::size_t dense_rank(const ExactMatrix& m) { return dense_block_rank(m.domain(), m.entries(), m.rows(), m.cols()); }

Scalar determinant(const ExactMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorKind::NotSquare,
                "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return m.domain().make(1);
  const ScalarDomain& dom = m.domain();
  if (dom.kind() == DomainKind::PrimeField) {
    // Gaussian elimination over GF(p) tracking the product of pivots.
    std::vector<Scalar> a = m.entries();
    Scalar det = dom.make(1);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv * n + c] == 0) ++piv;
      if (piv == n) return dom.make(0);
      if (piv != c) {
        std::swap_ranges(a.begin() + piv * n, a.begin() + (piv + 1) * n, a.begin() + c * n);
        det = dom.neg(det);
      }
      det = dom.mul(det, a[c * n + c]);
      const Scalar inv = dom.inv(a[c * n + c]);
      for (std::size_t i = c + 1; i < n; ++i) {
        const Scalar f = dom.mul(a[i * n + c], inv);
        if (f == 0) continue;
        for (std::size_t j = c; j < n; ++j) a[i * n + j] = dom.sub(a[i * n + j], dom.mul(f, a[c * n + j]));
      }
    }
    return det;
  }
  mpz_class scale;
  auto a = integer_rows(m.entries(), n, n, &scale);
  int sign = 1;
  if (bareiss(a, n, n, &sign) < n) return dom.make(0);
  mpq_class det(mpz_class(sign * a[n * n - 1]), scale);
  det.canonicalize();
  return dom.make(det);
}

std::vector<mpz_class> smith_normal_form(const ExactMatrix& m) {
  if (m.domain().kind() != DomainKind::Integers) {
    throw Error(ErrorKind::DomainMismatch, "Smith normal form needs an integer matrix, got " + m.domain().name());
  }
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<mpz_class> a(R * C);
  for (std::size_t i = 0; i < R * C; ++i) a[i] = m.entries()[i].get_num();
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * C + j]; };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x != y) std::swap_ranges(a.begin() + x * C, a.begin() + (x + 1) * C, a.begin() + y * C);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < R; ++i) std::swap(at(i, x), at(i, y));
  };

  std::vector<mpz_class> invariants;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    bool found_any = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (at(i, j) != 0 && (pi == R || abs(at(i, j)) < abs(at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R) break;
      found_any = true;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (at(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), at(i, t).get_mpz_t(), at(t, t).get_mpz_t());
        for (std::size_t j = t; j < C; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (at(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), at(t, j).get_mpz_t(), at(t, t).get_mpz_t());
        for (std::size_t i = t; i < R; ++i) at(i, j) -= q * at(i, t);
        if (at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < R && divides_all; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(at(i, j).get_mpz_t(), at(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < C; ++k) at(t, k) += at(i, k);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (!found_any) break;
    invariants.push_back(abs(at(t, t)));
  }
  invariants.resize(R, mpz_class(0));
  return invariants;
}

}  // namespace locoh
