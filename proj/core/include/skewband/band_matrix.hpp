#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <vector>

#include "skewband/polynomial.hpp"

namespace skewband {

// Dense n x n matrices larger than this are refused (CapExceeded) unless
// the caller passes an explicit higher cap.
inline constexpr std::int64_t kDenseDimensionCap = 4096;

// Describes the skew-symmetric Toeplitz band matrix of order n whose
// first k superdiagonals are 1 and whose remaining superdiagonal entries
// are -x (0 when the matrix is taken at x = 0).  Subdiagonals follow by
// skew symmetry.
struct BandMatrixSpec {
  std::int64_t n = 0;  // matrix order, >= 1
  std::int64_t k = 0;  // bandwidth, >= 1
};

class IntegerMatrix {
 public:
  IntegerMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows * cols)) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  mpz_class& at(std::int64_t r, std::int64_t c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return e_[static_cast<std::size_t>(r * cols_ + c)];
  }
  const mpz_class& at(std::int64_t r, std::int64_t c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return e_[static_cast<std::size_t>(r * cols_ + c)];
  }

 private:
  std::int64_t rows_, cols_;
  std::vector<mpz_class> e_;
};

// Same layout with polynomial entries (used for the determinant-in-x
// computations, where off-band entries are the indeterminate).
class PolyMatrix {
 public:
  PolyMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows * cols)) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  IntegerPolynomial& at(std::int64_t r, std::int64_t c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return e_[static_cast<std::size_t>(r * cols_ + c)];
  }
  const IntegerPolynomial& at(std::int64_t r, std::int64_t c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return e_[static_cast<std::size_t>(r * cols_ + c)];
  }

 private:
  std::int64_t rows_, cols_;
  std::vector<IntegerPolynomial> e_;
};

// Materializes the matrix at x = 0.  Throws std::invalid_argument for
// n < 1 or k < 1 and CapExceeded when n exceeds the cap.
IntegerMatrix build_integer_matrix(const BandMatrixSpec& spec,
                                   std::int64_t cap = kDenseDimensionCap);

// Materializes the matrix with the off-band indeterminate left symbolic.
PolyMatrix build_poly_matrix(const BandMatrixSpec& spec,
                             std::int64_t cap = kDenseDimensionCap);

// Entrywise evaluation at a concrete x.
IntegerMatrix evaluate(const PolyMatrix& m, const mpz_class& x);

}  // namespace skewband
