#include "locoh/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "locoh/error.hpp"

namespace locoh {

Monomial Monomial::unit(std::size_t nvars, std::size_t var) {
  std::vector<int> e(nvars, 0);
  e.at(var) = 1;
  return Monomial(std::move(e));
}

int Monomial::total_degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw Error(ErrorKind::LengthMismatch, "monomials of different length");
  for (std::size_t i = 0; i < size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::all_negative() const noexcept {
  for (int e : exps_)
    if (e >= 0) return false;
  return true;
}

bool Monomial::all_nonnegative() const noexcept {
  for (int e : exps_)
    if (e < 0) return false;
  return true;
}

Monomial Monomial::operator+(const Monomial& other) const {
  if (size() != other.size()) throw Error(ErrorKind::LengthMismatch, "monomials of different length");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator-(const Monomial& other) const {
  if (size() != other.size()) throw Error(ErrorKind::LengthMismatch, "monomials of different length");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator-() const {
  std::vector<int> e(exps_);
  for (int& x : e) x = -x;
  return Monomial(std::move(e));
}

Monomial Monomial::extended(std::size_t extra) const {
  std::vector<int> e(exps_);
  e.resize(e.size() + extra, 0);
  return Monomial(std::move(e));
}

bool lex_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "cannot compare tuples of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  return a < b;
}

std::uint64_t binomial(long n, long k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

void fill_descending(std::size_t var, std::size_t nvars, int left, std::vector<int>& cur,
                     std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur[var] = left;
    out.emplace_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[var] = e;
    fill_descending(var + 1, nvars, left - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(nvars, 0);
  fill_descending(0, nvars, degree, cur, out);
  return out;
}

}  // namespace locoh
