#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "closurelab/depth.hpp"
#include "closurelab/monomial_ideal.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/simplicial_complex.hpp"

namespace closurelab {

/// R/J is Cohen-Macaulay: Betti depth equals dim R/J.
bool isCM(const MonomialIdeal& ideal, FieldSpec field = {});

/// l(I) == height(I).
bool isEquimultiple(const MonomialIdeal& ideal, const ScanLimits& limits = {});

enum class CheckOutcome { kHolds, kViolated, kUnresolved, kNotApplicable };

std::string outcomeName(CheckOutcome outcome);

struct TheoremCheck {
  std::string name;
  CheckOutcome outcome = CheckOutcome::kNotApplicable;
  std::string detail;
};

struct CMRow {
  int n = 0;
  std::size_t depth = 0;
  std::size_t dim = 0;
  bool cm = false;
};

struct CMClassification {
  std::size_t rank = 0;
  std::string ideal;
  std::size_t height = 0;
  std::size_t analyticSpread = 0;
  bool equimultiple = false;
  std::vector<CMRow> perN;
  bool squarefree = false;
  std::optional<bool> completeIntersection;
  mpz_class n1;
  std::vector<TheoremCheck> checks;
};

/// CM verdicts of closure(I^n) for n = 1 .. nWindow (Betti depth), compared
/// with equimultiplicity and, for square-free I, with the complete
/// intersection property. A contradiction with either equivalence raises
/// ConsistencyError.
CMClassification classify(const MonomialIdeal& ideal, FieldSpec field, int nWindow, const ScanLimits& limits = {});

/// Intersection of P^n over the minimal primes P of a square-free I.
MonomialIdeal symbolicPowerSquarefree(const MonomialIdeal& ideal, int n);

struct IdentityCheck {
  CheckOutcome outcome = CheckOutcome::kNotApplicable;
  /// A generator of one side missing from the other, when the identity fails.
  std::optional<ExponentVector> witness;
  std::string detail;
};

/// closure(I^n) == closure(Q_1^n) ∩ ... ∩ closure(Q_s^n) for the irredundant
/// primary decomposition of I. Needs I and closure(I^n) unmixed; otherwise
/// the outcome is kNotApplicable.
IdentityCheck checkPrimDecClosure(const MonomialIdeal& ideal, int n, const ScanLimits& limits = {});

struct LinkCheck {
  CheckOutcome outcome = CheckOutcome::kNotApplicable;
  std::optional<std::size_t> vertex;
  std::string detail;
};

/// If closure(I_Δ^n) is CM, then closure(I_link(i)^n) is CM for every vertex
/// i of Δ, the link ideal taken in the polynomial ring on the link's vertices.
LinkCheck checkLinkCM(const MonomialIdeal& ideal, int n, FieldSpec field = {}, const ScanLimits& limits = {});

struct LowDimVerdict {
  bool cm = false;
  bool completeIntersection = false;
  std::string shape;
  /// False when closure(I_Δ^n) is CM but Δ is not one of the allowed shapes.
  bool consistent = true;
};

/// For dim Δ in {0, 1}: when closure(I_Δ^n) is CM, Δ must have at most two
/// vertices (dim 0, n >= 2) or be an edge, a path of length two, or a cycle
/// of length 3 or 4 (dim 1, n >= 3).
LowDimVerdict lowDimClassification(const SimplicialComplex& complex, int n, FieldSpec field = {},
                                   const ScanLimits& limits = {});

/// Shape name of a complex of dimension 0 or 1, e.g. "path of length 2".
std::string graphShape(const SimplicialComplex& complex);

}  // namespace closurelab
