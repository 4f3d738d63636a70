#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locoh/error.hpp"
#include "locoh/linalg.hpp"
#include "locoh/poly_matrix.hpp"

namespace locoh {

/// A matrix over K[X_1..X_m] whose nonzero entry (rho, c) is homogeneous of
/// total X-degree column_degrees[c] - row_shifts[rho]. Its cokernel is then
/// a graded module and can be measured one degree at a time.
class GradedMatrix {
 public:
  /// Throws GradingViolation if an entry breaks the grading, LengthMismatch
  /// for shift vectors of the wrong size.
  GradedMatrix(PolyMatrix matrix, std::vector<int> row_shifts, std::vector<int> column_degrees);

  const PolyMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<int>& row_shifts() const noexcept { return row_shifts_; }
  const std::vector<int>& column_degrees() const noexcept { return column_degrees_; }
  std::size_t x_vars() const noexcept { return matrix_.ring().x_vars; }
  int max_row_shift() const noexcept;
  int max_column_degree() const noexcept;

 private:
  PolyMatrix matrix_;
  std::vector<int> row_shifts_;
  std::vector<int> column_degrees_;
};

/// Finds shifts making every entry homogeneous, with the smallest row shift
/// of each connected block of the nonzero pattern set to 0. nullopt when no
/// such grading exists (e.g. an entry mixes total degrees).
std::optional<GradedMatrix> infer_grading(const PolyMatrix& m);

/// Degree-e piece of the image as a constant matrix: rows are (row rho,
/// monomial of degree e - shift_rho), columns are (column c, monomial of
/// degree e - degree_c); monomials in descending lex order.
ExactMatrix strand_matrix(const GradedMatrix& g, int e);

/// Dimension of the degree-e piece of the free module; depends only on m,
/// the row shifts and e.
std::uint64_t ambient_dimension(const GradedMatrix& g, int e);

struct StrandRow {
  int degree;
  std::uint64_t ambient;
  std::uint64_t image_rank;
  std::uint64_t coker;
};

struct StrandReport {
  std::vector<StrandRow> per_degree;
  std::uint64_t total = 0;
  int stabilized_at = -1;  // -1 when the walk was cut off
};

struct StrandOptions {
  /// Highest degree examined before giving up; default from default_ceiling.
  std::optional<int> ceiling;
};

/// max(row shifts) + max(column degrees) * (rows + 2) + 8.
int default_ceiling(const GradedMatrix& g);

/// Cokernel dimension was not certified below the ceiling; carries the
/// degrees examined so far.
class NotFiniteLengthError : public Error {
 public:
  NotFiniteLengthError(const std::string& message, StrandReport partial)
      : Error(ErrorKind::NotFiniteLength, message), partial_(std::move(partial)) {}

  const StrandReport& partial() const noexcept { return partial_; }

 private:
  StrandReport partial_;
};

/// dim_K coker, walking e = 0, 1, ... and stopping at the first
/// e >= max(row shifts) whose strand has zero cokernel. Past that degree the
/// cokernel (generated in degrees <= max row shift) is zero forever.
/// Throws NotFiniteLengthError above the ceiling, NotAField over ZZ.
StrandReport coker_dimension(const GradedMatrix& g, const StrandOptions& options = {});

/// coker == 0, checked on degrees 0..max(row shifts) only.
bool coker_is_zero(const GradedMatrix& g);

struct BruteForceResult {
  std::uint64_t dimension;
  /// The truncation at degree_cap did not yet show a zero top piece, so the
  /// value may undercount.
  bool cap_too_small;
};

/// Independent recount: one constant matrix covering every degree <= cap at
/// once, dimension = truncated ambient - rank.
BruteForceResult brute_force_coker_dim(const GradedMatrix& g, int degree_cap);

}  // namespace locoh
