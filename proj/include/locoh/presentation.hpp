#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "locoh/nested_poly.hpp"
#include "locoh/poly_matrix.hpp"

namespace locoh {

/// B(d): the monomials U^lambda with every lambda_i <= -1 and |lambda| = -d,
/// a free R_0-basis of the (-d)-th component of the inverse polynomials.
/// Ascending order: U^lambda < U^mu iff U^{-lambda} <_Lex U^{-mu}.
class InverseBasis {
 public:
  InverseBasis(std::size_t s, int d, std::vector<Monomial> elements);

  std::size_t s() const noexcept { return s_; }
  int degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  const Monomial& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Monomial& lambda) const;

 private:
  std::size_t s_;
  int d_;
  std::vector<Monomial> elements_;
  std::map<Monomial, std::size_t> index_;
};

/// Throws DegreeTooSmall when d < s (the component vanishes: the module has end -s).
InverseBasis inverse_basis(std::size_t s, int d);

/// f * U^lambda inside the inverse polynomials: each term a_mu U^mu lands
/// on lambda + mu when every entry stays <= -1 and is annihilated otherwise.
std::map<Monomial, Poly> inverse_action(const NestedPolynomial& f, const Monomial& lambda);

struct ColumnBlock {
  std::size_t generator;  // index into the ideal's generator list
  int generator_degree;   // delta_i
  InverseBasis basis;     // B(d + delta_i)
};

/// M(f_1..f_r; d): rows indexed by B(d), columns block-major by generator,
/// each block indexed by B(d + delta_i); entry (rho, lambda) is the
/// coefficient of U^rho in f_i U^lambda. Its cokernel is H^s_{R+}(R)_{-d}.
struct PresentationMatrix {
  std::size_t s;
  int d;
  InverseBasis row_basis;
  std::vector<ColumnBlock> column_blocks;
  PolyMatrix entries;
};

/// Zero generators contribute no columns. Throws DegreeTooSmall, NotHomogeneous.
PresentationMatrix presentation_matrix(const GradedIdeal& ideal, int d);

/// Upper bound on the number of t x t submatrices minors_ideal will visit.
inline constexpr std::uint64_t kMaxMinorCount = 184756;  // C(20, 10)

/// Distinct nonzero t x t minors. Throws SizeTooLarge if t exceeds the
/// matrix, TooManyMinors past kMaxMinorCount.
std::vector<Poly> minors_ideal(const PolyMatrix& m, std::size_t t);

}  // namespace locoh
