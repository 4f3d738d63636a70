#include "locoh/matrix.hpp"

#include "locoh/error.hpp"

namespace locoh {

ExactMatrix::ExactMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols)
    : domain_(domain), rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : domain_(domain), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                               std::to_string(entries_.size()));
  }
  for (auto& x : entries_) {
    x.canonicalize();
    domain_.require(x);
  }
}

ExactMatrix ExactMatrix::from_rows(ScalarDomain domain, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorKind::LengthMismatch, "ragged matrix literal");
    for (long v : row) entries.push_back(domain.make(v));
  }
  return ExactMatrix(domain, rows.size(), cols, std::move(entries));
}

ExactMatrix ExactMatrix::identity(ScalarDomain domain, std::size_t n) {
  ExactMatrix m(domain, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  value.canonicalize();
  domain_.require(value);
  entries_.at(r * cols_ + c) = std::move(value);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(domain_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  return t;
}

ExactMatrix ExactMatrix::over(const ScalarDomain& target) const {
  ExactMatrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = target.make(entries_[i]);
  return m;
}

}  // namespace locoh
