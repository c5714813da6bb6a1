#include "closurelab/exponent.hpp"

#include <sstream>

#include "closurelab/errors.hpp"

namespace closurelab {

void requireRank(std::size_t rank) {
  if (rank > kMaxVariables) {
    throw ArgumentError("at most " + std::to_string(kMaxVariables) + " variables are supported, got " +
                        std::to_string(rank));
  }
}

ExponentVector::ExponentVector(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) { requireRank(rank); }

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords) {
  requireRank(coords.size());
  rank_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

ExponentVector ExponentVector::fromSpan(std::span<const Exponent> coords) {
  ExponentVector v(coords.size());
  std::copy(coords.begin(), coords.end(), v.c_.begin());
  return v;
}

ExponentVector ExponentVector::unit(std::size_t rank, std::size_t i) {
  ExponentVector v(rank);
  v.c_[i] = 1;
  return v;
}

ExponentVector ExponentVector::indicator(std::size_t rank, VarSet set) {
  ExponentVector v(rank);
  for (auto i : set.indices()) v.c_[i] = 1;
  return v;
}

long long ExponentVector::degree() const {
  long long s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += c_[i];
  return s;
}

Exponent ExponentVector::maxEntry() const {
  Exponent m = 0;
  for (std::size_t i = 0; i < rank_; ++i) m = std::max(m, c_[i]);
  return m;
}

bool ExponentVector::isZero() const {
  return std::all_of(begin(), end(), [](Exponent e) { return e == 0; });
}

bool ExponentVector::isNonnegative() const {
  return std::all_of(begin(), end(), [](Exponent e) { return e >= 0; });
}

VarSet ExponentVector::support() const {
  VarSet s;
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] != 0) s.insert(i);
  return s;
}

VarSet ExponentVector::coSupport() const {
  VarSet s;
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] < 0) s.insert(i);
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

ExponentVector ExponentVector::dropped(VarSet vars) const {
  ExponentVector out(rank_ - (vars & VarSet::full(rank_)).size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (!vars.contains(i)) out.c_[k++] = c_[i];
  return out;
}

ExponentVector ExponentVector::appended(Exponent value) const {
  ExponentVector out(rank_ + 1u);
  std::copy(begin(), end(), out.c_.begin());
  out.c_[rank_] = value;
  return out;
}

std::string ExponentVector::toString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

namespace {
void sameRank(const ExponentVector& a, const ExponentVector& b) {
  if (a.rank() != b.rank())
    throw DimensionMismatch("exponent vectors of rank " + std::to_string(a.rank()) + " and " +
                            std::to_string(b.rank()));
}
}  // namespace

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  sameRank(a, b);
  ExponentVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  sameRank(a, b);
  ExponentVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

ExponentVector operator*(Exponent k, const ExponentVector& a) {
  ExponentVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.c_[i] = k * a.c_[i];
  return out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  sameRank(a, b);
  ExponentVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.c_[i] = std::max(a.c_[i], b.c_[i]);
  return out;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  sameRank(a, b);
  ExponentVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.c_[i] = std::min(a.c_[i], b.c_[i]);
  return out;
}

ExponentVector quotientPart(const ExponentVector& a, const ExponentVector& b) {
  sameRank(a, b);
  ExponentVector out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.c_[i] = std::max(a.c_[i] - b.c_[i], 0);
  return out;
}

}  // namespace closurelab
