#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace closurelab {

/// Hard upper bound on the number of ring variables. Every fixed-size
/// container in the library is sized by this constant.
inline constexpr std::size_t kMaxVariables = 16;

using Exponent = std::int32_t;

/// A subset of the variable indices {0, ..., r-1}, stored as a bitmask.
/// Used for prime supports, simplicial faces and co-supports.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}
  VarSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  static constexpr VarSet full(std::size_t rank) {
    return VarSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }
  static constexpr VarSet single(std::size_t i) { return VarSet(1u << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(std::size_t i) { bits_ |= (1u << i); }
  constexpr void erase(std::size_t i) { bits_ &= ~(1u << i); }
  constexpr bool isSubsetOf(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet minus(VarSet o) const { return VarSet(bits_ & ~o.bits_); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// Orders by cardinality first, then lexicographically on the sorted index list.
  friend bool faceLess(VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return false;
  }

  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr auto operator<=>(VarSet a, VarSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

bool faceLess(VarSet a, VarSet b);

/// A multidegree in Z^r. Entries past rank() are kept at zero so that the
/// defaulted comparisons are exact.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank);
  ExponentVector(std::initializer_list<Exponent> coords);
  static ExponentVector fromSpan(std::span<const Exponent> coords);
  static ExponentVector unit(std::size_t rank, std::size_t i);
  static ExponentVector indicator(std::size_t rank, VarSet set);

  std::size_t rank() const { return rank_; }
  Exponent operator[](std::size_t i) const { return c_[i]; }
  Exponent& operator[](std::size_t i) { return c_[i]; }
  const Exponent* data() const { return c_.data(); }
  std::span<const Exponent> coords() const { return {c_.data(), rank_}; }
  const Exponent* begin() const { return c_.data(); }
  const Exponent* end() const { return c_.data() + rank_; }

  long long degree() const;
  Exponent maxEntry() const;
  bool isZero() const;
  bool isNonnegative() const;
  VarSet support() const;
  VarSet coSupport() const;

  /// Componentwise `this <= other`, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector dropped(VarSet vars) const;
  ExponentVector appended(Exponent value) const;

  std::string toString() const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator*(Exponent k, const ExponentVector& a);
  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
  /// Componentwise max(a - b, 0): the generator of (x^a) : x^b.
  friend ExponentVector quotientPart(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::uint8_t rank_ = 0;
  std::array<Exponent, kMaxVariables> c_{};
};

void requireRank(std::size_t rank);

}  // namespace closurelab
