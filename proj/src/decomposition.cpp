#include <algorithm>
#include <map>

#include "closurelab/errors.hpp"
#include "closurelab/monomial_ideal.hpp"

namespace closurelab {
namespace {

// Q contains Q' iff every generator x_i^{f_i} of Q' is divisible by x_i^{e_i} in Q.
bool componentContains(const IrreducibleComponent& q, const IrreducibleComponent& qp) {
  for (std::size_t i = 0; i < q.exps.rank(); ++i) {
    if (qp.exps[i] == 0) continue;
    if (q.exps[i] == 0 || q.exps[i] > qp.exps[i]) return false;
  }
  return true;
}

std::vector<IrreducibleComponent> pruneRedundant(std::vector<IrreducibleComponent> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      redundant = a != b && componentContains(comps[a], comps[b]);
    if (!redundant) out.push_back(comps[a]);
  }
  return out;
}

class Splitter {
 public:
  explicit Splitter(std::size_t rank) : rank_(rank) {}

  const std::vector<IrreducibleComponent>& run(const MonomialIdeal& ideal) {
    auto key = std::vector<ExponentVector>(ideal.generators().begin(), ideal.generators().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto gens = ideal.generators();
    auto split = std::find_if(gens.begin(), gens.end(), [](const ExponentVector& g) { return g.support().size() >= 2; });
    std::vector<IrreducibleComponent> result;
    if (split == gens.end()) {
      IrreducibleComponent leaf{ExponentVector(rank_)};
      for (const auto& g : gens)
        for (std::size_t i = 0; i < rank_; ++i)
          if (g[i] != 0) leaf.exps[i] = g[i];
      result.push_back(leaf);
    } else {
      const ExponentVector g = *split;
      const std::size_t var = g.support().indices().front();
      ExponentVector u(rank_), v = g;
      u[var] = g[var];
      v[var] = 0;
      std::vector<ExponentVector> left, right;
      for (const auto& h : gens) {
        if (h == g) continue;
        left.push_back(h);
        right.push_back(h);
      }
      left.push_back(u);
      right.push_back(v);
      auto a = run(minimalize(rank_, std::move(left)));
      const auto& b = run(minimalize(rank_, std::move(right)));
      a.insert(a.end(), b.begin(), b.end());
      result = pruneRedundant(std::move(a));
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  std::size_t rank_;
  std::map<std::vector<ExponentVector>, std::vector<IrreducibleComponent>> memo_;
};

}  // namespace

std::vector<IrreducibleComponent> irreducibleDecomposition(const MonomialIdeal& ideal) {
  if (ideal.isZero() || ideal.isUnit())
    throw ArgumentError("irreducible decomposition needs a nonzero proper ideal");
  Splitter splitter(ideal.rank());
  return splitter.run(ideal);
}

MonomialIdeal componentIdeal(std::size_t rank, const IrreducibleComponent& c) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    if (c.exps[i] == 0) continue;
    ExponentVector g(rank);
    g[i] = c.exps[i];
    gens.push_back(g);
  }
  return minimalize(rank, std::move(gens));
}

MonomialIdeal intersectComponents(std::size_t rank, std::span<const IrreducibleComponent> comps) {
  MonomialIdeal acc = MonomialIdeal::unit(rank);
  for (const auto& c : comps) acc = intersect(acc, componentIdeal(rank, c));
  return acc;
}

std::vector<std::pair<PrimeSupport, MonomialIdeal>> primaryDecomposition(const MonomialIdeal& ideal) {
  std::map<PrimeSupport, MonomialIdeal> groups;
  for (const auto& c : irreducibleDecomposition(ideal)) {
    PrimeSupport p{c.support()};
    auto q = componentIdeal(ideal.rank(), c);
    auto it = groups.find(p);
    if (it == groups.end())
      groups.emplace(p, q);
    else
      it->second = intersect(it->second, q);
  }
  return {groups.begin(), groups.end()};
}

std::vector<PrimeSupport> associatedPrimes(const MonomialIdeal& ideal) {
  if (ideal.isUnit()) return {};
  if (ideal.isZero()) return {PrimeSupport{}};
  std::vector<PrimeSupport> out;
  for (const auto& c : irreducibleDecomposition(ideal)) out.push_back(PrimeSupport{c.support()});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeSupport> associatedPrimesByWitness(const MonomialIdeal& ideal) {
  if (ideal.isUnit()) return {};
  if (ideal.isZero()) return {PrimeSupport{}};
  const std::size_t r = ideal.rank();
  const ExponentVector top = ideal.lcmExponents();
  std::vector<PrimeSupport> out;
  ExponentVector alpha(r);
  while (true) {
    if (!ideal.contains(alpha)) {
      const MonomialIdeal q = colon(ideal, alpha);
      bool prime = true;
      VarSet vars;
      for (const auto& g : q.generators()) {
        if (g.degree() != 1) {
          prime = false;
          break;
        }
        vars = vars | g.support();
      }
      if (prime) out.push_back(PrimeSupport{vars});
    }
    std::size_t i = 0;
    while (i < r && alpha[i] == top[i]) alpha[i++] = 0;
    if (i == r) break;
    ++alpha[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeSupport> minimalPrimes(const MonomialIdeal& ideal) {
  const auto ass = associatedPrimes(ideal);
  std::vector<PrimeSupport> out;
  for (const auto& p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(),
                                [&](const PrimeSupport& q) { return q != p && q.vars.isSubsetOf(p.vars); });
    if (minimal) out.push_back(p);
  }
  return out;
}

HeightDim heightDim(const MonomialIdeal& ideal) {
  if (ideal.isUnit()) throw ArgumentError("height of the unit ideal is undefined");
  std::size_t h = ideal.rank();
  for (const auto& p : minimalPrimes(ideal)) h = std::min(h, p.height());
  if (ideal.isZero()) h = 0;
  return {h, ideal.rank() - h};
}

bool isUnmixed(const MonomialIdeal& ideal) {
  const auto ass = associatedPrimes(ideal);
  return std::all_of(ass.begin(), ass.end(), [&](const PrimeSupport& p) { return p.height() == ass.front().height(); });
}

}  // namespace closurelab
