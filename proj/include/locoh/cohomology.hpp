#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "locoh/nested_poly.hpp"
#include "locoh/strand.hpp"

namespace locoh {

/// Which top local cohomology components of R = S/I to measure, with
/// S = R_0[U_1..U_s] and s = ideal.u_vars().
struct CohomologyQuery {
  GradedIdeal ideal;
  int d_min;
  int d_max;
  StrandOptions strand{};

  std::size_t s() const noexcept { return ideal.u_vars(); }
};

/// Throws DegreeTooSmall when d_min < s, InvalidArgument when d_max < d_min.
CohomologyQuery make_query(GradedIdeal ideal, int d_min, int d_max, StrandOptions strand = {});

/// Ceiling taken from LOCOH_MAX_DEGREE when set.
StrandOptions strand_options_from_env();

enum class TopMethod { FieldRank, SmithForm, Strands, ModuleGroebner };
std::string to_string(TopMethod method);

struct TopResult {
  int d = 0;
  std::uint64_t value = 0;  // dim_K, or length over ZZ
  TopMethod method = TopMethod::FieldRank;
  std::uint64_t rows = 0;   // C(d-1, s-1)
  std::uint64_t rank = 0;   // FieldRank only
  std::vector<mpz_class> invariant_factors;  // SmithForm only
  std::optional<StrandReport> strands;       // Strands only
};

/// Length of H^s_{R_+}(R)_{-d}. Throws DegreeTooSmall for d < s and
/// NotFiniteLength (naming the content ideal) when the length is infinite.
TopResult top_dimension(const GradedIdeal& ideal, int d, const StrandOptions& options = {});

struct HilbertRow {
  int d = 0;
  std::optional<TopResult> result;
  std::string error;  // set when the component has infinite length

  bool vanishing() const { return result && result->value == 0; }
};

struct HilbertTable {
  CohomologyQuery query;
  std::vector<HilbertRow> rows;
};

/// One row per d in range; NotFiniteLength is recorded on its row.
HilbertTable hilbert_table(const CohomologyQuery& q);

struct VanishingReport {
  int d = 0;
  bool cokernel_zero = false;  // route A
  bool content_unit = false;   // route B
  bool vanishes() const { return cokernel_zero; }
};

/// Decides H^s_{R_+}(R)_{-d} = 0 from the cokernel and, separately, from the
/// content ideal. Throws RouteDisagreement if the two answers differ.
VanishingReport vanishes(const GradedIdeal& ideal, int d);

enum class GapFree { AllVanish, NoneVanish };
std::string to_string(GapFree verdict);

/// Checks every d in range; mixed answers raise TheoremViolation.
GapFree gap_free_check(const CohomologyQuery& q);

/// Length of R_0/content(I) over R_0; nullopt when infinite.
std::optional<std::uint64_t> content_colength(const GradedIdeal& ideal);

struct TopComponent {
  std::vector<Poly> content;
  std::optional<std::uint64_t> quotient_length;  // length of R_0/content, nullopt if infinite
  std::optional<std::uint64_t> top_value;        // top_dimension at d = s, nullopt if infinite
};

/// Compares top_dimension(ideal, s) with the length of R_0/content(I);
/// throws TheoremViolation when they differ.
TopComponent top_component_at_s(const GradedIdeal& ideal, const StrandOptions& options = {});

/// Primes dividing C(n, i) for some 1 <= i <= n, ascending.
std::vector<std::uint64_t> pi_set(long n);

/// d(d-1)^2(d-2)/12 for d >= 3.
mpz_class h0_closed(long d);
/// d^2 - 1, or d^2 when 4 divides d; d >= 2.
mpz_class h2_closed(long d);
/// Delta_1 = Delta_2 = 2, Delta_n = 2 Delta_{n-1} - 2 Delta_{n-2}; n >= 1.
mpz_class tridiag_det(long n);
/// The n x n matrix with 2 on the diagonal and subdiagonal, 1 above.
ExactMatrix tridiag_matrix(long n);

/// Polynomial in r with rational coefficients, lowest degree first.
struct RationalPolynomial {
  std::vector<mpq_class> coefficients;

  int degree() const;
  mpq_class operator()(const mpq_class& r) const;
  std::string to_string(const std::string& var = "r") const;
};

struct FitPoint {
  int d;
  mpz_class value;
};

struct Interpolant {
  RationalPolynomial polynomial;
  std::vector<int> window;  // degrees d it passes through
  int conflict_d;           // a tabulated d it misses
  mpz_class conflict_value;
  mpq_class predicted;
};

struct FitResult {
  std::optional<RationalPolynomial> polynomial;  // in r = -d
  std::vector<Interpolant> refutation;           // two entries when not polynomial
  bool is_polynomial() const { return polynomial.has_value(); }
};

/// Interpolates the window + 1 points with the largest d and checks every
/// other point exactly. Throws InsufficientData below window + 2 points or
/// when the degrees are not consecutive.
FitResult fit_reverse_polynomial(std::vector<FitPoint> points, int window = 6);
FitResult fit_reverse_polynomial(const HilbertTable& table, int window = 6);

struct CharComparisonRow {
  int d;
  std::uint64_t h0;
  std::uint64_t hp;
  bool equal;
  bool p_in_pi;  // p divides some C(d-2, i)
};

/// h_0 and h_p for the built-in three-variable example; throws
/// TheoremViolation unless h_0 <= h_p with equality exactly when p is not
/// in pi_set(d - 2).
std::vector<CharComparisonRow> char_comparison(std::uint64_t p, int d_min, int d_max,
                                               const StrandOptions& options = {});

struct MinimalPrimesReport {
  bool whole_ring = false;
  std::vector<std::string> generators;  // content(I) R + R_+
};

MinimalPrimesReport minimal_primes_report(const GradedIdeal& ideal);

/// Number of prime factors of |n| counted with multiplicity; n != 0.
std::uint64_t prime_factor_count(const mpz_class& n);

}  // namespace locoh
