#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "locoh/monomial.hpp"
#include "locoh/scalar.hpp"

namespace locoh {

/// Sparse polynomial in X_1..X_m over a scalar domain; with m = 0 it is just
/// a scalar. This is the element type of the coefficient ring R_0. Terms are
/// kept in a map keyed by exponent vector (ascending lex) with no zero
/// coefficients stored, so equality of term maps is equality of polynomials.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Poly(ScalarDomain domain, std::size_t nvars) : domain_(domain), nvars_(nvars) {}
  static Poly constant(ScalarDomain domain, std::size_t nvars, const Scalar& value);
  static Poly variable(ScalarDomain domain, std::size_t nvars, std::size_t var);
  static Poly term(ScalarDomain domain, const Monomial& mono, const Scalar& coef);

  const ScalarDomain& domain() const noexcept { return domain_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero if absent).
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& mono) const;

  /// Highest total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;
  /// Common total degree of all terms; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const noexcept;

  /// Lex-largest term; the polynomial must be nonzero.
  const std::pair<const Monomial, Scalar>& leading_lex() const { return *terms_.rbegin(); }

  Poly& add_term(const Monomial& mono, const Scalar& coef);
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& mono, const Scalar& coef) const;

  /// Exact quotient this / divisor; throws InvalidArgument if the division
  /// leaves a remainder.
  Poly divide_exact(const Poly& divisor) const;

  /// Same polynomial with `extra` trailing variables added.
  Poly extended(std::size_t extra) const;
  /// Coefficients mapped into another domain (e.g. integer data mod p).
  Poly over(const ScalarDomain& target) const;

  bool operator==(const Poly& other) const {
    return domain_ == other.domain_ && nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const Poly& other) const;

  ScalarDomain domain_;
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace locoh
