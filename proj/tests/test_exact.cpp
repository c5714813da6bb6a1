#include <doctest.h>

#include "closurelab/corpus.hpp"
#include "closurelab/exact.hpp"

using namespace closurelab;
using exact::IntMatrix;

namespace {

// Laplace expansion along the first row, in GMP integers.
mpz_class laplace(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const mpz_class term = m[0][c] * laplace(minor);
    total += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

IntMatrix fromRows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("determinant matches Laplace expansion on random matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 6));
    IntMatrix m(n, n);
    std::vector<std::vector<mpz_class>> ref(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = rng.between(-9, 9);
        ref[i][j] = static_cast<long>(m(i, j));
      }
    CHECK(exact::determinant(m) == laplace(ref));
  }
}

TEST_CASE("determinant survives int64 overflow of intermediate minors") {
  const std::int64_t big = 3'000'000'000'000LL;
  auto m = fromRows({{big, 1, 0}, {1, big, 1}, {0, 1, big}});
  std::vector<std::vector<mpz_class>> ref{{mpz_class(std::to_string(big)), 1, 0},
                                          {1, mpz_class(std::to_string(big)), 1},
                                          {0, 1, mpz_class(std::to_string(big))}};
  CHECK(exact::determinant(m) == laplace(ref));
}

TEST_CASE("rank over Q and over GF(p)") {
  CHECK(exact::rank(fromRows({{1, 2}, {2, 4}})) == 1);
  CHECK(exact::rank(fromRows({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
  CHECK(exact::rank(IntMatrix(0, 3)) == 0);
  // [[1,1],[1,-1]] has determinant -2: full rank over Q, rank 1 over GF(2)
  const auto m = fromRows({{1, 1}, {1, -1}});
  CHECK(exact::rank(m) == 2);
  CHECK(exact::rankModP(m, 2) == 1);
  CHECK(exact::rankModP(m, 3) == 2);
}

TEST_CASE("rank of random products is bounded by the inner dimension") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.between(1, 6));
    const std::size_t cols = static_cast<std::size_t>(rng.between(1, 6));
    const std::size_t inner = static_cast<std::size_t>(rng.between(1, 4));
    IntMatrix a(rows, inner), b(inner, cols), c(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k) a(i, k) = rng.between(-3, 3);
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) b(k, j) = rng.between(-3, 3);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) c(i, j) += a(i, k) * b(k, j);
    const auto rc = exact::rank(c);
    CHECK(rc <= std::min({rows, cols, inner}));
    CHECK(rc <= exact::rank(a));
    CHECK(exact::rankModP(c, 1'000'000'007) == rc);  // no small-prime collapse at this size
  }
}

TEST_CASE("affine rank of point sets") {
  CHECK(exact::affineRank({}) == 0);
  CHECK(exact::affineRank({{1, 2, 3}}) == 1);
  CHECK(exact::affineRank({{1, 0}, {0, 1}, {2, -1}}) == 2);  // collinear
  CHECK(exact::affineRank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(exact::affineRank({{0, 0}, {1, 0}, {0, 1}, {1, 1}}) == 3);
}

TEST_CASE("primality") {
  CHECK(exact::isPrime(2));
  CHECK(exact::isPrime(2147483647));
  CHECK_FALSE(exact::isPrime(1));
  CHECK_FALSE(exact::isPrime(91));
}
