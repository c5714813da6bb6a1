#include "closurelab/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "closurelab/errors.hpp"

namespace closurelab {

MonomialIdeal::MonomialIdeal(std::size_t rank, std::vector<ExponentVector> minimalSortedGens)
    : rank_(rank), gens_(std::move(minimalSortedGens)), block_(rank, gens_) {}

MonomialIdeal MonomialIdeal::zero(std::size_t rank) {
  requireRank(rank);
  return MonomialIdeal(rank, {});
}

MonomialIdeal MonomialIdeal::unit(std::size_t rank) {
  requireRank(rank);
  return MonomialIdeal(rank, {ExponentVector(rank)});
}

bool MonomialIdeal::isSquarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) { return g.maxEntry() <= 1; });
}

bool MonomialIdeal::contains(const ExponentVector& alpha) const {
  if (alpha.rank() != rank_) throw DimensionMismatch("monomial rank differs from ideal rank");
  return kernels::active().firstDivisor(block_, alpha.data()) >= 0;
}

bool MonomialIdeal::contains(const MonomialIdeal& j) const {
  if (j.rank_ != rank_) throw DimensionMismatch("ideal ranks differ");
  return std::all_of(j.gens_.begin(), j.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

ExponentVector MonomialIdeal::lcmExponents() const {
  ExponentVector out(rank_);
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

long long MonomialIdeal::maxGenDegree() const {
  long long d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Exponent MonomialIdeal::maxSingleExponent() const {
  Exponent d = 0;
  for (const auto& g : gens_) d = std::max(d, g.maxEntry());
  return d;
}

std::string MonomialIdeal::toString() const {
  if (isZero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) os << ", ";
    const auto& g = gens_[k];
    if (g.isZero()) {
      os << '1';
      continue;
    }
    bool first = true;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (g[i] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << 'x' << (i + 1);
      if (g[i] != 1) os << '^' << g[i];
    }
  }
  os << ')';
  return os.str();
}

MonomialIdeal fromMinimalSorted(std::size_t rank, std::vector<ExponentVector> gens) {
  return MonomialIdeal(rank, std::move(gens));
}

MonomialIdeal minimalize(std::size_t rank, std::vector<ExponentVector> gens) {
  requireRank(rank);
  for (const auto& g : gens) {
    if (g.rank() != rank)
      throw DimensionMismatch("generator " + g.toString() + " has rank " + std::to_string(g.rank()) + ", expected " +
                              std::to_string(rank));
    if (!g.isNonnegative()) throw ArgumentError("generator " + g.toString() + " has a negative exponent");
  }
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor always has degree <= the multiple, so earlier survivors are the only candidates.
  std::vector<ExponentVector> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(rank, std::move(kept));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("ideal ranks differ");
  std::vector<ExponentVector> out;
  out.reserve(a.numGenerators() * b.numGenerators());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) out.push_back(g + h);
  return minimalize(a.rank(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& ideal, int n) {
  if (n < 0) throw ArgumentError("power exponent must be nonnegative, got " + std::to_string(n));
  MonomialIdeal result = MonomialIdeal::unit(ideal.rank());
  for (int k = 0; k < n; ++k) result = product(result, ideal);
  return result;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("ideal ranks differ");
  std::vector<ExponentVector> out(a.generators().begin(), a.generators().end());
  out.insert(out.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.rank(), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("ideal ranks differ");
  std::vector<ExponentVector> out;
  out.reserve(a.numGenerators() * b.numGenerators());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) out.push_back(lcm(g, h));
  return minimalize(a.rank(), std::move(out));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) out.push_back(ExponentVector::indicator(ideal.rank(), g.support()));
  return minimalize(ideal.rank(), std::move(out));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& m) {
  if (m.rank() != ideal.rank()) throw DimensionMismatch("colon monomial rank differs from ideal rank");
  if (!m.isNonnegative()) throw ArgumentError("colon monomial must be nonnegative");
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) out.push_back(quotientPart(g, m));
  return minimalize(ideal.rank(), std::move(out));
}

MonomialIdeal multiply(const MonomialIdeal& ideal, const ExponentVector& m) {
  if (m.rank() != ideal.rank()) throw DimensionMismatch("monomial rank differs from ideal rank");
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) out.push_back(g + m);
  return minimalize(ideal.rank(), std::move(out));
}

MonomialIdeal restrictIdeal(const MonomialIdeal& ideal, VarSet vars) {
  vars = vars & VarSet::full(ideal.rank());
  const std::size_t rank = ideal.rank() - vars.size();
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) out.push_back(g.dropped(vars));
  return minimalize(rank, std::move(out));
}

MonomialIdeal extendWithVariable(const MonomialIdeal& ideal) {
  const std::size_t rank = ideal.rank() + 1;
  requireRank(rank);
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) out.push_back(g.appended(0));
  out.push_back(ExponentVector::unit(rank, rank - 1));
  return minimalize(rank, std::move(out));
}

MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t newRank) {
  if (newRank < ideal.rank()) throw ArgumentError("cannot embed into a smaller ring");
  requireRank(newRank);
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) {
    ExponentVector e(newRank);
    for (std::size_t i = 0; i < ideal.rank(); ++i) e[i] = g[i];
    out.push_back(e);
  }
  return minimalize(newRank, std::move(out));
}

bool isCompleteIntersectionSquarefree(const MonomialIdeal& ideal) {
  if (!ideal.isSquarefree()) throw ArgumentError("complete-intersection test requires a square-free ideal");
  if (!ideal.isProper()) throw ArgumentError("complete-intersection test requires a proper ideal");
  VarSet seen;
  for (const auto& g : ideal.generators()) {
    if (g.support().intersects(seen)) return false;
    seen = seen | g.support();
  }
  return true;
}

}  // namespace closurelab
