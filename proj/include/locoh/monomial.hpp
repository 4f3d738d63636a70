#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace locoh {

/// Exponent vector. Entries are non-negative for ordinary monomials in the
/// U- or X-variables; the inverse-polynomial code also uses it for strictly
/// negative tuples. The built-in ordering is lexicographic with variable 1
/// the most significant, i.e. the Lex term order U_1 > ... > U_s.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<int> exponents) : exps_(exponents) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial unit(std::size_t nvars, std::size_t var);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  /// |lambda|: sum of the entries.
  int total_degree() const noexcept;
  bool divides(const Monomial& other) const;
  bool all_negative() const noexcept;
  bool all_nonnegative() const noexcept;

  Monomial operator+(const Monomial& other) const;
  Monomial operator-(const Monomial& other) const;
  Monomial operator-() const;
  /// Appends `extra` zero exponents.
  Monomial extended(std::size_t extra) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// U^a <_Lex U^b: at the first index where they differ, a is smaller.
/// Throws LengthMismatch for tuples of different lengths.
bool lex_less(const Monomial& a, const Monomial& b);

/// C(n, k) for 0 <= k <= n, else 0.
std::uint64_t binomial(long n, long k) noexcept;

/// All exponent vectors in `nvars` variables of total degree `degree`,
/// in descending lex order (x_1^degree first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace locoh
