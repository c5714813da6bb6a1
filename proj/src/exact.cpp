#include "closurelab/exact.hpp"

#include <stdexcept>
#include <utility>

#include "closurelab/errors.hpp"

namespace closurelab::exact {
namespace {

struct Overflow {};

struct CheckedInt {
  std::int64_t v;
  static CheckedInt fromInt(std::int64_t x) { return {x}; }
  bool isZero() const { return v == 0; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return {a.v / b.v}; }
  CheckedInt operator-() const {
    if (v == INT64_MIN) throw Overflow{};
    return {-v};
  }
};

struct BigInt {
  mpz_class v;
  static BigInt fromInt(std::int64_t x) { return {mpz_class(static_cast<long>(x))}; }
  bool isZero() const { return v == 0; }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return {a.v * b.v}; }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return {a.v - b.v}; }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
    return {q};
  }
  BigInt operator-() const { return {-v}; }
};

template <typename T>
struct Elimination {
  std::size_t rank = 0;
  T lastPivot = T::fromInt(1);
  bool negate = false;
};

// Fraction-free row echelon reduction; every intermediate entry is a minor
// of the input, so the divisions by the previous pivot are exact.
template <typename T>
Elimination<T> bareiss(const IntMatrix& in) {
  const std::size_t rows = in.rows(), cols = in.cols();
  std::vector<T> a;
  a.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.push_back(T::fromInt(in(i, j)));
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };

  Elimination<T> out;
  T prev = T::fromInt(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c).isZero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      out.negate = !out.negate;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      at(i, c) = T::fromInt(0);
    }
    prev = at(r, c);
    ++r;
  }
  out.rank = r;
  out.lastPivot = prev;
  return out;
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  try {
    auto e = bareiss<CheckedInt>(m);
    if (e.rank < m.rows()) return 0;
    mpz_class d(static_cast<long>(e.lastPivot.v));
    return e.negate ? mpz_class(-d) : d;
  } catch (const Overflow&) {
    auto e = bareiss<BigInt>(m);
    if (e.rank < m.rows()) return 0;
    return e.negate ? mpz_class(-e.lastPivot.v) : e.lastPivot.v;
  }
}

std::size_t rank(const IntMatrix& m) {
  try {
    return bareiss<CheckedInt>(m).rank;
  } catch (const Overflow&) {
    return bareiss<BigInt>(m).rank;
  }
}

std::size_t rankModP(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::int64_t P = p;
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = ((m(i, j) % P) + P) % P;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  auto inverse = [&](std::int64_t x) {
    std::int64_t result = 1, base = x, e = P - 2;
    while (e > 0) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const std::int64_t inv = inverse(at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = at(i, c) * inv % P;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) at(i, j) = ((at(i, j) - f * at(r, j)) % P + P) % P;
    }
    ++r;
  }
  return r;
}

std::size_t affineRank(const std::vector<std::vector<std::int64_t>>& points) {
  if (points.empty()) return 0;
  const std::size_t dim = points.front().size();
  IntMatrix diffs(points.size() - 1, dim);
  for (std::size_t k = 1; k < points.size(); ++k)
    for (std::size_t i = 0; i < dim; ++i) diffs(k - 1, i) = points[k][i] - points[0][i];
  return rank(diffs) + 1;
}

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace closurelab::exact
