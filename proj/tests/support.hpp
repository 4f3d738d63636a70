#pragma once

// Shared helpers for the test binaries: seeded generators and small
// independent oracles that avoid the library's own elimination code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "locoh/matrix.hpp"
#include "locoh/nested_poly.hpp"
#include "locoh/poly_matrix.hpp"
#include "locoh/scalar.hpp"

namespace testing {

using namespace locoh;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ScalarDomain qq() { return ScalarDomain::rationals(); }
inline ScalarDomain zz() { return ScalarDomain::integers(); }
inline ScalarDomain gf(std::uint64_t p) { return ScalarDomain::prime_field(p); }

// Cofactor expansion along the first row, over the rationals.
inline mpq_class cofactor_det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const mpq_class term = a[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : mpq_class(-term);
  }
  return total;
}

inline std::vector<std::vector<mpq_class>> to_rows(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Textbook Gauss-Jordan over Q or Z/p with full division, no blocking.
inline std::size_t naive_rank(std::vector<std::vector<mpq_class>> a, std::uint64_t p = 0) {
  auto reduce = [&](mpq_class v) -> mpq_class {
    if (p == 0) return v;
    mpz_class num = v.get_num() % mpz_class(p), den = v.get_den() % mpz_class(p);
    if (num < 0) num += p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    return mpq_class(mpz_class(num * inv % p));
  };
  for (auto& row : a)
    for (auto& v : row) v = reduce(v);
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = reduce(a[r][k] - factor * a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

// Pi(n) from the digit criterion: p misses every C(n, i) exactly when
// n + 1 = b * p^k with 1 <= b < p.
inline bool digit_criterion_in_pi(long n, long p) {
  if (n < 1) return false;
  long v = n + 1;
  while (v % p == 0) v /= p;
  return v >= p;
}

inline bool small_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Count of exponent vectors in [0, bound)^nvars outside the monomial ideal.
inline std::uint64_t brute_staircase(const std::vector<std::vector<int>>& gens, std::size_t nvars, int bound) {
  std::vector<int> e(nvars, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool inside = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < nvars; ++i) divides = divides && g[i] <= e[i];
      inside = inside || divides;
    }
    if (!inside) ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] == bound) e[i++] = 0;
    if (i == nvars) return count;
  }
}

// Random polynomial in K[X_1..X_m] with up to `terms` terms of degree <= max_degree.
inline Poly random_poly(Rng& rng, const ScalarDomain& dom, std::size_t nvars, int max_degree, int terms,
                        int coef_range = 4, int exact_degree = -1) {
  Poly out(dom, nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    const int deg = exact_degree >= 0 ? exact_degree : uniform(rng, 0, max_degree);
    for (int k = 0; k < deg && nvars > 0; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nvars) - 1))];
    out.add_term(Monomial(e), dom.make(mpq_class(uniform(rng, -coef_range, coef_range))));
  }
  return out;
}

inline std::vector<Monomial> u_monomials(std::size_t s, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(s, 0);
  // Stars and bars by odometer over [0, degree]^s.
  for (;;) {
    int sum = 0;
    for (int v : e) sum += v;
    if (sum == degree) out.emplace_back(e);
    std::size_t i = 0;
    while (i < s && ++e[i] > degree) e[i++] = 0;
    if (i == s) return out;
  }
}

// Random U-homogeneous polynomial of U-degree delta with coefficients from make_coef.
template <class MakeCoef>
NestedPolynomial random_homogeneous(Rng& rng, const CoefficientRing& ring, std::size_t s, int delta, int terms,
                                    MakeCoef make_coef) {
  const auto monos = u_monomials(s, delta);
  NestedPolynomial f(ring, s);
  for (int t = 0; t < terms; ++t) {
    f.add_term(monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(monos.size()) - 1))], make_coef());
  }
  return f;
}

// Presentation entries rebuilt directly: entry (rho, lambda) is the
// coefficient of U^(rho - lambda) in f. Bases are sorted by comparing
// negated tuples with std::lexicographical_compare.
inline std::vector<std::vector<int>> negative_compositions(std::size_t s, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == s) {
      if (left >= 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int v = 1; v <= left - static_cast<int>(s - i - 1); ++v) {
      cur.push_back(v);
      rec(i + 1, left - v);
      cur.pop_back();
    }
  };
  if (s >= 1 && d >= static_cast<int>(s)) rec(0, d);
  std::sort(out.begin(), out.end());  // ascending on the positive tuples -lambda
  for (auto& t : out)
    for (auto& v : t) v = -v;
  return out;
}

inline std::vector<std::vector<Poly>> direct_presentation(const std::vector<NestedPolynomial>& gens, std::size_t s,
                                                          int d, const CoefficientRing& ring) {
  const auto rows = negative_compositions(s, d);
  std::vector<std::vector<Poly>> out(rows.size());
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    const int delta = f.terms().begin()->first.total_degree();
    for (const auto& lambda : negative_compositions(s, d + delta)) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<int> mu(s);
        bool ok = true;
        for (std::size_t i = 0; i < s; ++i) {
          mu[i] = rows[r][i] - lambda[i];
          ok = ok && mu[i] >= 0;
        }
        const auto it = ok ? f.terms().find(Monomial(mu)) : f.terms().end();
        out[r].push_back(it == f.terms().end() ? ring.zero() : it->second);
      }
    }
  }
  return out;
}

}  // namespace testing
