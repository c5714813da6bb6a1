#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "closurelab/exponent.hpp"
#include "closurelab/kernels.hpp"

namespace closurelab {

/// A monomial prime (x_i : i in vars). The empty set stands for the zero ideal.
struct PrimeSupport {
  VarSet vars;

  std::size_t height() const { return vars.size(); }
  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
  friend auto operator<=>(const PrimeSupport& a, const PrimeSupport& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() <=> b.vars.size();
    return a.vars <=> b.vars;
  }
};

/// An irreducible monomial ideal (x_i^{e_i} : i in domain), stored as a
/// dense vector with 0 meaning "variable absent".
struct IrreducibleComponent {
  ExponentVector exps;

  VarSet support() const { return exps.support(); }
  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// A monomial ideal given by its minimal generating set G(I).
///
/// Generators are kept sorted (lexicographically on exponent vectors), so two
/// ideals are equal exactly when their generator lists are equal. The zero
/// ideal has no generators; the unit ideal has the single generator 0.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t rank);
  static MonomialIdeal unit(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::span<const ExponentVector> generators() const { return gens_; }
  std::size_t numGenerators() const { return gens_.size(); }

  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && gens_.front().isZero(); }
  bool isProper() const { return !isUnit(); }
  bool isSquarefree() const;

  /// Whether x^alpha lies in the ideal. Negative entries are allowed and
  /// simply never satisfied by a generator coordinate > alpha_i.
  bool contains(const ExponentVector& alpha) const;
  /// J is contained in this ideal.
  bool contains(const MonomialIdeal& j) const;

  /// Componentwise maximum over G(I) (the exponent of lcm G(I)).
  ExponentVector lcmExponents() const;
  /// d(I): maximal total degree of a minimal generator.
  long long maxGenDegree() const;
  /// Largest single-variable exponent over G(I).
  Exponent maxSingleExponent() const;

  const kernels::GeneratorBlock& block() const { return block_; }

  std::string toString() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.rank_ == b.rank_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(std::size_t rank, std::vector<ExponentVector> gens);
  friend MonomialIdeal fromMinimalSorted(std::size_t rank, std::vector<ExponentVector> gens);
  MonomialIdeal(std::size_t rank, std::vector<ExponentVector> minimalSortedGens);

  std::size_t rank_ = 0;
  std::vector<ExponentVector> gens_;
  kernels::GeneratorBlock block_;
};

/// Inclusion-minimal antichain generating the same ideal. Throws
/// DimensionMismatch on mixed lengths and ArgumentError on negative entries.
MonomialIdeal minimalize(std::size_t rank, std::vector<ExponentVector> gens);

/// Trusts the caller that `gens` is already a sorted antichain.
MonomialIdeal fromMinimalSorted(std::size_t rank, std::vector<ExponentVector> gens);

MonomialIdeal power(const MonomialIdeal& ideal, int n);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& ideal);
/// (I : x^m).
MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& m);
/// x^m * I.
MonomialIdeal multiply(const MonomialIdeal& ideal, const ExponentVector& m);

/// I[F]: set x_i = 1 for i in F; the result lives in the remaining r - |F|
/// variables (relative order preserved).
MonomialIdeal restrictIdeal(const MonomialIdeal& ideal, VarSet vars);
/// (I, y) in one more variable; y is the last coordinate.
MonomialIdeal extendWithVariable(const MonomialIdeal& ideal);
/// The same generators viewed in a larger ring; new variables are appended.
MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t newRank);

/// Irredundant irreducible decomposition by repeated splitting
/// (B, uv) = (B, u) ∩ (B, v) for coprime u, v.
std::vector<IrreducibleComponent> irreducibleDecomposition(const MonomialIdeal& ideal);
MonomialIdeal componentIdeal(std::size_t rank, const IrreducibleComponent& c);
/// Intersection of the ideals of the given components.
MonomialIdeal intersectComponents(std::size_t rank, std::span<const IrreducibleComponent> comps);

/// Irredundant primary decomposition: irreducible components grouped by radical.
std::vector<std::pair<PrimeSupport, MonomialIdeal>> primaryDecomposition(const MonomialIdeal& ideal);

/// Ass(R/J), read off the irreducible decomposition. Sorted by height, then bitmask.
std::vector<PrimeSupport> associatedPrimes(const MonomialIdeal& ideal);
/// Ass(R/J) by searching primes of the form (J : x^alpha) with alpha in the
/// box below lcm G(J). Independent of the decomposition route.
std::vector<PrimeSupport> associatedPrimesByWitness(const MonomialIdeal& ideal);
std::vector<PrimeSupport> minimalPrimes(const MonomialIdeal& ideal);

struct HeightDim {
  std::size_t height;
  std::size_t dim;
  friend bool operator==(const HeightDim&, const HeightDim&) = default;
};
HeightDim heightDim(const MonomialIdeal& ideal);

/// All associated primes have the same height.
bool isUnmixed(const MonomialIdeal& ideal);

/// Square-free I is a complete intersection iff its generator supports are
/// pairwise disjoint. Throws ArgumentError on non-square-free input.
bool isCompleteIntersectionSquarefree(const MonomialIdeal& ideal);

}  // namespace closurelab
