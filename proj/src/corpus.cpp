#include "closurelab/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "closurelab/errors.hpp"

namespace closurelab {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ArgumentError("empty range");
  const std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return v % n;
}

CorpusSpec parseCorpusSpec(const std::string& text, CorpusSpec spec) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("corpus entry '" + item + "' is not key=value");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    unsigned long long v;
    try {
      std::size_t used = 0;
      v = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ArgumentError("corpus value '" + value + "' is not a nonnegative integer");
    }
    if (key == "r") spec.maxRank = v;
    else if (key == "min-r") spec.minRank = v;
    else if (key == "count") spec.count = v;
    else if (key == "seed") spec.seed = v;
    else if (key == "max-exp") spec.maxExponent = static_cast<int>(v);
    else if (key == "max-gens") spec.maxGenerators = v;
    else throw ArgumentError("unknown corpus key '" + key + "'");
  }
  spec.minRank = std::min(spec.minRank, spec.maxRank);
  if (spec.maxRank == 0 || spec.maxRank > kMaxVariables) throw ArgumentError("corpus rank out of range");
  if (spec.maxExponent < 1 || spec.maxGenerators < 1) throw ArgumentError("corpus needs max-exp >= 1 and max-gens >= 1");
  return spec;
}

std::string toString(const CorpusSpec& spec) {
  return "min-r=" + std::to_string(spec.minRank) + ",r=" + std::to_string(spec.maxRank) + ",count=" +
         std::to_string(spec.count) + ",seed=" + std::to_string(spec.seed) + ",max-exp=" +
         std::to_string(spec.maxExponent) + ",max-gens=" + std::to_string(spec.maxGenerators);
}

std::vector<MonomialIdeal> randomIdeals(const CorpusSpec& spec) {
  Rng rng(spec.seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < spec.count) {
    const auto r = static_cast<std::size_t>(rng.between(static_cast<int>(spec.minRank), static_cast<int>(spec.maxRank)));
    const auto m = static_cast<std::size_t>(rng.between(1, static_cast<int>(spec.maxGenerators)));
    std::vector<ExponentVector> gens;
    while (gens.size() < m) {
      ExponentVector g(r);
      for (std::size_t i = 0; i < r; ++i) g[i] = rng.between(0, spec.maxExponent);
      if (!g.isZero()) gens.push_back(g);
    }
    out.push_back(minimalize(r, std::move(gens)));
  }
  return out;
}

namespace {

void extendAntichains(const std::vector<std::uint32_t>& subsets, std::size_t from, std::vector<std::uint32_t>& chosen,
                      std::size_t rank, std::vector<MonomialIdeal>& out) {
  if (!chosen.empty()) {
    std::vector<ExponentVector> gens;
    for (auto s : chosen) gens.push_back(ExponentVector::indicator(rank, VarSet(s)));
    out.push_back(minimalize(rank, std::move(gens)));
  }
  for (std::size_t k = from; k < subsets.size(); ++k) {
    const auto s = subsets[k];
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) {
      return (c & s) == c || (c & s) == s;
    });
    if (comparable) continue;
    chosen.push_back(s);
    extendAntichains(subsets, k + 1, chosen, rank, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MonomialIdeal> allSquarefreeIdeals(std::size_t rank) {
  requireRank(rank);
  if (rank > 5) throw ArgumentError("exhaustive square-free enumeration is limited to 5 variables");
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1u << rank); ++s) subsets.push_back(s);
  std::vector<std::uint32_t> chosen;
  std::vector<MonomialIdeal> out;
  extendAntichains(subsets, 0, chosen, rank, out);
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return std::lexicographical_compare(a.generators().begin(), a.generators().end(), b.generators().begin(),
                                        b.generators().end());
  });
  return out;
}

std::vector<MonomialIdeal> sampleSquarefreeIdeals(std::size_t rank, std::size_t count, std::uint64_t seed) {
  auto all = allSquarefreeIdeals(rank);
  Rng rng(seed);
  count = std::min(count, all.size());
  // partial Fisher-Yates
  for (std::size_t k = 0; k < count; ++k) std::swap(all[k], all[k + rng.below(all.size() - k)]);
  all.resize(count);
  return all;
}

}  // namespace closurelab
