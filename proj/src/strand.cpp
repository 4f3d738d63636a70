#include "locoh/strand.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace locoh {

GradedMatrix::GradedMatrix(PolyMatrix matrix, std::vector<int> row_shifts, std::vector<int> column_degrees)
    : matrix_(std::move(matrix)), row_shifts_(std::move(row_shifts)), column_degrees_(std::move(column_degrees)) {
  if (row_shifts_.size() != matrix_.rows() || column_degrees_.size() != matrix_.cols()) {
    throw Error(ErrorKind::LengthMismatch, "grading vectors do not match the matrix shape");
  }
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      const Poly& p = matrix_(r, c);
      if (p.is_zero()) continue;
      const auto deg = p.homogeneous_degree();
      const int want = column_degrees_[c] - row_shifts_[r];
      if (!deg || *deg != want) {
        throw Error(ErrorKind::GradingViolation, "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                                     ") is not homogeneous of degree " + std::to_string(want));
      }
    }
  }
}

int GradedMatrix::max_row_shift() const noexcept {
  return row_shifts_.empty() ? 0 : *std::max_element(row_shifts_.begin(), row_shifts_.end());
}

int GradedMatrix::max_column_degree() const noexcept {
  return column_degrees_.empty() ? 0 : *std::max_element(column_degrees_.begin(), column_degrees_.end());
}

std::optional<GradedMatrix> infer_grading(const PolyMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::optional<int>> shift(R), degree(C);
  std::vector<int> entry_degree(R * C, 0);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) {
      if (m(r, c).is_zero()) continue;
      auto d = m(r, c).homogeneous_degree();
      if (!d) return std::nullopt;
      entry_degree[r * C + c] = *d;
    }
  for (std::size_t start = 0; start < R; ++start) {
    if (shift[start]) continue;
    // Breadth-first over the bipartite row/column pattern of one block.
    std::vector<std::size_t> block_rows{start}, block_cols;
    std::deque<std::pair<bool, std::size_t>> queue{{true, start}};
    shift[start] = 0;
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t c = 0; c < C; ++c) {
          if (m(idx, c).is_zero()) continue;
          const int want = *shift[idx] + entry_degree[idx * C + c];
          if (!degree[c]) {
            degree[c] = want;
            block_cols.push_back(c);
            queue.push_back({false, c});
          } else if (*degree[c] != want) {
            return std::nullopt;
          }
        }
      } else {
        for (std::size_t r = 0; r < R; ++r) {
          if (m(r, idx).is_zero()) continue;
          const int want = *degree[idx] - entry_degree[r * C + idx];
          if (!shift[r]) {
            shift[r] = want;
            block_rows.push_back(r);
            queue.push_back({true, r});
          } else if (*shift[r] != want) {
            return std::nullopt;
          }
        }
      }
    }
    int lowest = *shift[block_rows.front()];
    for (std::size_t r : block_rows) lowest = std::min(lowest, *shift[r]);
    for (std::size_t r : block_rows) shift[r] = *shift[r] - lowest;
    for (std::size_t c : block_cols) degree[c] = *degree[c] - lowest;
  }
  std::vector<int> shifts(R), degrees(C);
  for (std::size_t r = 0; r < R; ++r) shifts[r] = *shift[r];
  for (std::size_t c = 0; c < C; ++c) degrees[c] = degree[c].value_or(0);
  return GradedMatrix(m, std::move(shifts), std::move(degrees));
}

namespace {

struct StrandLayout {
  std::size_t rows = 0;
  // Row index of (rho, monomial).
  std::vector<std::map<Monomial, std::size_t>> row_index;
};

StrandLayout layout_rows(const GradedMatrix& g, int e) {
  StrandLayout out;
  out.row_index.resize(g.matrix().rows());
  for (std::size_t r = 0; r < g.matrix().rows(); ++r) {
    for (auto& mono : monomials_of_degree(g.x_vars(), e - g.row_shifts()[r])) {
      out.row_index[r].emplace(std::move(mono), out.rows++);
    }
  }
  return out;
}

SparseMatrix sparse_strand(const GradedMatrix& g, int e) {
  const PolyMatrix& m = g.matrix();
  const StrandLayout layout = layout_rows(g, e);
  SparseMatrix out{m.ring().base, layout.rows, 0, {}};
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& shift : monomials_of_degree(g.x_vars(), e - g.column_degrees()[c])) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [mono, coef] : m(r, c).terms()) {
          // Grading guarantees the product lands in the row's degree.
          out.entries.push_back({layout.row_index[r].at(mono + shift), out.cols, coef});
        }
      }
      ++out.cols;
    }
  }
  return out;
}

void require_field(const GradedMatrix& g) {
  if (!g.matrix().ring().base.is_field()) {
    throw Error(ErrorKind::NotAField, "strand dimensions need a coefficient field, got " + g.matrix().ring().base.name());
  }
}

StrandRow strand_row(const GradedMatrix& g, int e) {
  const std::uint64_t ambient = ambient_dimension(g, e);
  const std::uint64_t image = rank(sparse_strand(g, e));
  return StrandRow{e, ambient, image, ambient - image};
}

}  // namespace

ExactMatrix strand_matrix(const GradedMatrix& g, int e) { return sparse_strand(g, e).to_dense(); }

std::uint64_t ambient_dimension(const GradedMatrix& g, int e) {
  const long m = static_cast<long>(g.x_vars());
  std::uint64_t total = 0;
  for (int s : g.row_shifts()) {
    const long k = e - s;
    if (k < 0) continue;
    total += m == 0 ? (k == 0 ? 1 : 0) : binomial(k + m - 1, m - 1);
  }
  return total;
}

int default_ceiling(const GradedMatrix& g) {
  return g.max_row_shift() + g.max_column_degree() * (static_cast<int>(g.matrix().rows()) + 2) + 8;
}

StrandReport coker_dimension(const GradedMatrix& g, const StrandOptions& options) {
  require_field(g);
  const int ceiling = options.ceiling.value_or(default_ceiling(g));
  const int floor = g.max_row_shift();
  StrandReport report;
  for (int e = 0;; ++e) {
    if (e > ceiling) {
      throw NotFiniteLengthError("cokernel not certified finite by degree " + std::to_string(ceiling) +
                                     " (" + std::to_string(report.total) + " dimensions so far)",
                                 report);
    }
    const StrandRow row = strand_row(g, e);
    report.per_degree.push_back(row);
    report.total += row.coker;
    if (e >= floor && row.coker == 0) {
      report.stabilized_at = e;
      return report;
    }
  }
}

bool coker_is_zero(const GradedMatrix& g) {
  require_field(g);
  for (int e = 0; e <= g.max_row_shift(); ++e) {
    if (strand_row(g, e).coker != 0) return false;
  }
  return true;
}

namespace {

// Every exponent vector of total degree <= cap, smallest degree first.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int cap) {
  std::vector<Monomial> out;
  if (cap < 0) return out;
  std::vector<int> cur(nvars, 0);
  // Odometer over [0, cap]^nvars, filtered by total degree.
  for (;;) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum <= cap) out.emplace_back(cur);
    std::size_t i = 0;
    while (i < nvars && ++cur[i] > cap) cur[i++] = 0;
    if (i == nvars) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
  return out;
}

}  // namespace

BruteForceResult brute_force_coker_dim(const GradedMatrix& g, int degree_cap) {
  require_field(g);
  const PolyMatrix& m = g.matrix();
  const auto monos = monomials_up_to(g.x_vars(), degree_cap);
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<int> row_degree;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& a : monos)
      if (g.row_shifts()[r] + a.total_degree() <= degree_cap) {
        row_of.emplace(std::make_pair(r, a), row_degree.size());
        row_degree.push_back(g.row_shifts()[r] + a.total_degree());
      }
  SparseMatrix big{m.ring().base, row_degree.size(), 0, {}};
  std::vector<int> col_degree;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& b : monos) {
      if (g.column_degrees()[c] + b.total_degree() > degree_cap) continue;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [t, coef] : m(r, c).terms()) big.entries.push_back({row_of.at({r, t + b}), big.cols, coef});
      col_degree.push_back(g.column_degrees()[c] + b.total_degree());
      ++big.cols;
    }
  const std::uint64_t dimension = big.rows - rank(big);

  // The top degree alone decides whether truncating at the cap lost anything.
  std::vector<std::size_t> top_rows(big.rows, SIZE_MAX), top_cols(big.cols, SIZE_MAX);
  SparseMatrix top{big.domain, 0, 0, {}};
  for (std::size_t i = 0; i < big.rows; ++i)
    if (row_degree[i] == degree_cap) top_rows[i] = top.rows++;
  for (std::size_t j = 0; j < big.cols; ++j)
    if (col_degree[j] == degree_cap) top_cols[j] = top.cols++;
  for (const auto& e : big.entries)
    if (top_rows[e.row] != SIZE_MAX && top_cols[e.col] != SIZE_MAX)
      top.entries.push_back({top_rows[e.row], top_cols[e.col], e.value});
  const bool top_zero = top.rows == rank(top);
  return BruteForceResult{dimension, !(top_zero && degree_cap >= g.max_row_shift())};
}

}  // namespace locoh
