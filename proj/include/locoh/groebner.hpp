#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "locoh/poly.hpp"
#include "locoh/poly_matrix.hpp"

namespace locoh {

enum class OrderKind { DegRevLex, Lex };

/// Term order on X-monomials with X_1 > X_2 > ... .
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;

  bool greater(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

/// Reduced Groebner basis of an ideal of K[X_1..X_m], K a field. The basis
/// is monic, inter-reduced and sorted by ascending leading monomial, so it
/// is unique for the ideal and the order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Poly> generators, std::vector<Poly> basis, MonomialOrder order);

  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  std::vector<Monomial> leading_monomials() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const;

 private:
  std::vector<Poly> generators_;
  std::vector<Poly> basis_;
  MonomialOrder order_;
};

/// Throws NotAField over ZZ and RingMismatch for mixed rings. An empty
/// generator list yields the zero ideal.
GroebnerBasis buchberger(const std::vector<Poly>& generators, MonomialOrder order = {});

/// 1 in (gens). Fields: Groebner basis test (any nonzero constant when m = 0).
/// ZZ with m = 0: gcd of the generators is 1. ZZ with m > 0 throws NotAField.
bool is_unit_ideal(const std::vector<Poly>& generators);

/// f in rad(gens), via 1 in (gens, 1 - T f) with a new last variable T.
bool in_radical(const Poly& f, const std::vector<Poly>& generators);

/// dim_K K[X]/(gens) < infinity: the leading monomials contain a pure power
/// of every variable.
bool is_cofinite(const std::vector<Poly>& generators);

/// Number of monomials outside the monomial ideal spanned by `leading`
/// (the staircase); nullopt when infinite.
std::optional<std::uint64_t> staircase_count(const std::vector<Monomial>& leading, std::size_t nvars);

/// dim_K K[X]/(gens), nullopt if infinite.
std::optional<std::uint64_t> quotient_dimension(const std::vector<Poly>& generators);

/// dim_K of the cokernel of a matrix over K[X_1..X_m] (no grading needed),
/// nullopt if infinite. The column module is encoded as the ideal
/// (sum_rho M[rho][c] E_rho, E_i E_j) in K[X, E_1..E_n]; the E-degree-one
/// standard monomials are a K-basis of the cokernel.
std::optional<std::uint64_t> module_quotient_dimension(const PolyMatrix& m);

}  // namespace locoh
