#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "locoh/scalar.hpp"

namespace locoh {

/// Dense row-major matrix whose entries all belong to one declared domain.
class ExactMatrix {
 public:
  ExactMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols);
  /// Validates entries.size() == rows * cols and domain membership.
  ExactMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  /// Convenience for tests and small literals; values are mapped into the domain.
  static ExactMatrix from_rows(ScalarDomain domain, std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix identity(ScalarDomain domain, std::size_t n);

  const ScalarDomain& domain() const noexcept { return domain_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Checked write; the value must already belong to the domain.
  void set(std::size_t r, std::size_t c, Scalar value);

  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  ExactMatrix transpose() const;
  /// Maps every entry into `target` (e.g. integer data read modulo p).
  ExactMatrix over(const ScalarDomain& target) const;

  bool operator==(const ExactMatrix& other) const {
    return domain_ == other.domain_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

 private:
  ScalarDomain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

}  // namespace locoh
