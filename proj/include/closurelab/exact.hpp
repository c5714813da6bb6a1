#pragma once

// Exact integer linear algebra on small dense matrices. Elimination is
// fraction-free (Bareiss); it runs on checked int64 and restarts on GMP
// integers when an intermediate minor overflows.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace closurelab::exact {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Determinant of a square matrix.
mpz_class determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Rank over GF(p); p must be prime and below 2^31.
std::size_t rankModP(const IntMatrix& m, std::uint32_t p);

/// Affine rank (dimension of the affine hull plus one) of a point set; 0 for an empty set.
std::size_t affineRank(const std::vector<std::vector<std::int64_t>>& points);

bool isPrime(std::uint64_t n);

}  // namespace closurelab::exact
