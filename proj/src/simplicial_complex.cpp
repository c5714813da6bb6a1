#include "closurelab/simplicial_complex.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "closurelab/errors.hpp"
#include "closurelab/exact.hpp"

namespace closurelab {

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !exact::isPrime(p)) throw ArgumentError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "0") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last && first != last) return prime(p);
  }
  throw ArgumentError("unknown field '" + text + "' (expected q or fp:P)");
}

std::string FieldSpec::toString() const { return characteristic == 0 ? "q" : "fp:" + std::to_string(characteristic); }

SimplicialComplex SimplicialComplex::voidComplex(std::size_t ground) {
  SimplicialComplex c;
  c.ground_ = ground;
  return c;
}

SimplicialComplex SimplicialComplex::emptyComplex(std::size_t ground) {
  SimplicialComplex c;
  c.ground_ = ground;
  c.state_ = State::kEmpty;
  c.facets_ = {VarSet{}};
  return c;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t ground, VarSet vertices) {
  return fromFacets(ground, {vertices});
}

SimplicialComplex SimplicialComplex::fromFacets(std::size_t ground, std::vector<VarSet> generators) {
  requireRank(ground);
  for (auto g : generators)
    if (!g.isSubsetOf(VarSet::full(ground))) throw ArgumentError("face " + std::to_string(g.bits()) + " leaves the ground set");
  if (generators.empty()) return voidComplex(ground);
  std::sort(generators.begin(), generators.end(), [](VarSet a, VarSet b) { return b.size() < a.size() || (a.size() == b.size() && a < b); });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<VarSet> kept;
  for (auto g : generators)
    if (std::none_of(kept.begin(), kept.end(), [&](VarSet k) { return g.isSubsetOf(k); })) kept.push_back(g);
  std::sort(kept.begin(), kept.end(), faceLess);
  SimplicialComplex c;
  c.ground_ = ground;
  c.state_ = (kept.size() == 1 && kept.front().empty()) ? State::kEmpty : State::kPlain;
  c.facets_ = std::move(kept);
  return c;
}

int SimplicialComplex::dim() const {
  if (isVoid()) return -2;
  int d = -1;
  for (auto f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.isSubsetOf(f); });
}

VarSet SimplicialComplex::vertices() const {
  VarSet v;
  for (auto f : facets_) v = v | f;
  return v;
}

std::vector<VarSet> SimplicialComplex::faces() const {
  std::set<std::uint32_t> seen;
  for (auto f : facets_) {
    const std::uint32_t bits = f.bits();
    for (std::uint32_t s = bits;; s = (s - 1) & bits) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<VarSet> out;
  out.reserve(seen.size());
  for (auto s : seen) out.emplace_back(s);
  std::sort(out.begin(), out.end(), faceLess);
  return out;
}

std::vector<std::size_t> SimplicialComplex::fVector() const {
  if (isVoid()) return {};
  std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 2), 0);
  for (auto face : faces()) ++f[face.size()];
  return f;
}

SimplicialComplex SimplicialComplex::link(VarSet face) const {
  if (!contains(face)) return voidComplex(ground_);
  std::vector<VarSet> gens;
  for (auto f : facets_)
    if (face.isSubsetOf(f)) gens.push_back(f.minus(face));
  return fromFacets(ground_, std::move(gens));
}

SimplicialComplex SimplicialComplex::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != ground_) throw DimensionMismatch("permutation size differs from ground set");
  if (isVoid()) return *this;
  std::vector<VarSet> gens;
  for (auto f : facets_) {
    VarSet g;
    for (auto i : f.indices()) g.insert(perm[i]);
    gens.push_back(g);
  }
  return fromFacets(ground_, std::move(gens));
}

std::string stateName(SimplicialComplex::State state) {
  switch (state) {
    case SimplicialComplex::State::kVoid: return "void";
    case SimplicialComplex::State::kEmpty: return "empty";
    case SimplicialComplex::State::kPlain: return "plain";
  }
  return "?";
}

std::string SimplicialComplex::toString() const {
  if (isVoid()) return "void";
  if (isEmptyComplex()) return "{}";
  std::string s = "<";
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    if (k) s += ", ";
    s += "{";
    auto idx = facets_[k].indices();
    for (std::size_t j = 0; j < idx.size(); ++j) s += (j ? "," : "") + std::to_string(idx[j] + 1);
    s += "}";
  }
  return s + ">";
}

SimplicialComplex stanleyReisnerComplex(const MonomialIdeal& ideal) {
  const std::size_t r = ideal.rank();
  std::vector<VarSet> supports;
  for (const auto& g : ideal.generators()) supports.push_back(g.support());
  auto isFace = [&](std::uint32_t bits) {
    return std::none_of(supports.begin(), supports.end(), [&](VarSet s) { return s.isSubsetOf(VarSet(bits)); });
  };
  if (!isFace(0)) return SimplicialComplex::voidComplex(r);
  std::vector<VarSet> facets;
  const std::uint32_t all = VarSet::full(r).bits();
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (!isFace(s)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < r && maximal; ++i)
      if (!((s >> i) & 1u) && isFace(s | (1u << i))) maximal = false;
    if (maximal) facets.emplace_back(s);
  }
  return SimplicialComplex::fromFacets(r, std::move(facets));
}

MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex) {
  const std::size_t r = complex.ground();
  if (complex.isVoid()) return MonomialIdeal::unit(r);
  std::vector<ExponentVector> gens;
  const std::uint32_t all = VarSet::full(r).bits();
  for (std::uint32_t s = 1; s <= all; ++s) {
    const VarSet f(s);
    if (complex.contains(f)) continue;
    bool minimal = true;
    for (auto i : f.indices())
      if (!complex.contains(VarSet(s & ~(1u << i)))) minimal = false;
    if (minimal) gens.push_back(ExponentVector::indicator(r, f));
  }
  return minimalize(r, std::move(gens));
}

}  // namespace closurelab
