#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "locoh/monomial.hpp"
#include "locoh/poly.hpp"

namespace locoh {

/// R_0: either a bare scalar domain (x_vars == 0) or K[X_1..X_m].
struct CoefficientRing {
  ScalarDomain base;
  std::size_t x_vars = 0;

  Poly zero() const { return Poly(base, x_vars); }
  Poly one() const { return Poly::constant(base, x_vars, 1); }
  bool operator==(const CoefficientRing&) const = default;
};

/// Element of S = R_0[U_1..U_s], stored as U-monomial -> R_0-coefficient
/// with no zero coefficients.
class NestedPolynomial {
 public:
  using TermMap = std::map<Monomial, Poly>;

  NestedPolynomial(CoefficientRing ring, std::size_t u_vars) : ring_(ring), u_vars_(u_vars) {}
  static NestedPolynomial constant(CoefficientRing ring, std::size_t u_vars, const Poly& coef);
  static NestedPolynomial u_variable(CoefficientRing ring, std::size_t u_vars, std::size_t var);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t u_vars() const noexcept { return u_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  NestedPolynomial& add_term(const Monomial& u_mono, const Poly& coef);

  NestedPolynomial operator+(const NestedPolynomial& other) const;
  NestedPolynomial operator-(const NestedPolynomial& other) const;
  NestedPolynomial operator-() const;
  NestedPolynomial operator*(const NestedPolynomial& other) const;
  NestedPolynomial scaled(const Scalar& c) const;

  /// Common U-degree; nullopt for zero. Throws NotHomogeneous for mixed degrees.
  std::optional<int> u_degree() const;

  /// Nonzero coefficients a_lambda, duplicates removed, in descending U-lex
  /// order of first appearance. Empty for f = 0.
  std::vector<Poly> content() const;

  bool operator==(const NestedPolynomial& other) const {
    return ring_ == other.ring_ && u_vars_ == other.u_vars_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const NestedPolynomial& other) const;

  CoefficientRing ring_;
  std::size_t u_vars_;
  TermMap terms_;
};

/// A graded ideal of S given by U-homogeneous generators.
class GradedIdeal {
 public:
  /// Throws NotHomogeneous / RingMismatch on bad generators.
  GradedIdeal(CoefficientRing ring, std::size_t u_vars, std::vector<NestedPolynomial> generators);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t u_vars() const noexcept { return u_vars_; }
  const std::vector<NestedPolynomial>& generators() const noexcept { return generators_; }

  /// Same generators with coefficients read in another base domain.
  GradedIdeal over(const ScalarDomain& base) const;

 private:
  CoefficientRing ring_;
  std::size_t u_vars_;
  std::vector<NestedPolynomial> generators_;
};

/// Concatenated generator contents, deduplicated.
std::vector<Poly> content_ideal(const GradedIdeal& ideal);

}  // namespace locoh
