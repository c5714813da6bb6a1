#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "closurelab/exponent.hpp"
#include "closurelab/monomial_ideal.hpp"

namespace closurelab {

/// Coefficient field: characteristic 0 (the rationals) or GF(p).
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws ArgumentError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// "q" or "fp:P".
  static FieldSpec parse(const std::string& text);
  std::string toString() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// A simplicial complex on the ground set [r], stored by its facets.
///
/// Two degenerate complexes are kept apart: VOID has no faces at all, EMPTY
/// has only the empty face. Their reduced homology differs (zero everywhere
/// versus k in degree -1).
class SimplicialComplex {
 public:
  enum class State { kVoid, kEmpty, kPlain };

  SimplicialComplex() = default;

  static SimplicialComplex voidComplex(std::size_t ground);
  static SimplicialComplex emptyComplex(std::size_t ground);
  static SimplicialComplex simplex(std::size_t ground, VarSet vertices);
  /// Generated by `generators`; non-maximal sets are dropped. An empty list
  /// gives VOID, a list containing only the empty set gives EMPTY.
  static SimplicialComplex fromFacets(std::size_t ground, std::vector<VarSet> generators);

  std::size_t ground() const { return ground_; }
  State state() const { return state_; }
  bool isVoid() const { return state_ == State::kVoid; }
  bool isEmptyComplex() const { return state_ == State::kEmpty; }
  /// Sorted by faceLess.
  const std::vector<VarSet>& facets() const { return facets_; }

  /// Largest face size minus one; -1 for EMPTY and -2 for VOID.
  int dim() const;
  bool contains(VarSet face) const;
  VarSet vertices() const;
  /// All faces including the empty one, sorted by faceLess.
  std::vector<VarSet> faces() const;
  /// f[k + 1] = number of k-dimensional faces, k = -1 .. dim.
  std::vector<std::size_t> fVector() const;

  /// link(F) = {G disjoint from F : F ∪ G in Δ}; VOID when F is not a face.
  SimplicialComplex link(VarSet face) const;
  /// Relabel vertex i as perm[i].
  SimplicialComplex permuted(const std::vector<std::size_t>& perm) const;

  std::string toString() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t ground_ = 0;
  State state_ = State::kVoid;
  std::vector<VarSet> facets_;
};

std::string stateName(SimplicialComplex::State state);

/// Δ(I): faces are the sets F with x_F outside √I. VOID for the unit ideal.
SimplicialComplex stanleyReisnerComplex(const MonomialIdeal& ideal);
/// I_Δ, generated by the minimal non-faces. The unit ideal for VOID.
MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex);

/// dims[i + 1] = dim H~_i(Δ; k) for i = -1 .. max(dim Δ, -1).
class ReducedHomology {
 public:
  ReducedHomology() = default;
  explicit ReducedHomology(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  std::size_t operator[](int i) const {
    const auto k = static_cast<std::size_t>(i + 1);
    return i >= -1 && k < dims_.size() ? dims_[k] : 0;
  }
  int top() const { return static_cast<int>(dims_.size()) - 2; }
  bool isZero() const;
  long long eulerCharacteristic() const;
  const std::vector<std::size_t>& dims() const { return dims_; }

  friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Ranks of the simplicial boundary maps over k, with faces in faceLess
/// order. Results are memoised per thread.
ReducedHomology reducedHomologyDims(const SimplicialComplex& complex, FieldSpec field = {});

/// Reisner's criterion: every link (including Δ itself) has vanishing reduced
/// homology below its dimension. Throws ArgumentError on VOID.
bool isCohenMacaulayComplex(const SimplicialComplex& complex, FieldSpec field = {});

}  // namespace closurelab
