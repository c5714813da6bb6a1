#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "closurelab/monomial_ideal.hpp"

namespace closurelab {

/// Seeded generator with its own range reduction, so a seed gives the same
/// corpus on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

struct CorpusSpec {
  std::size_t minRank = 1;
  std::size_t maxRank = 3;
  std::size_t count = 100;
  std::uint64_t seed = 7;
  int maxExponent = 4;
  std::size_t maxGenerators = 4;
};

/// "r=3,count=100,seed=7" plus optional min-r, max-exp, max-gens. `r` sets
/// the largest rank; ranks are drawn from [min-r, r].
CorpusSpec parseCorpusSpec(const std::string& text, CorpusSpec defaults = {});
std::string toString(const CorpusSpec& spec);

/// Proper nonzero ideals: 1..maxGenerators nonzero generators with entries in [0, maxExponent].
std::vector<MonomialIdeal> randomIdeals(const CorpusSpec& spec);

/// Every proper nonzero square-free monomial ideal in `rank` variables.
std::vector<MonomialIdeal> allSquarefreeIdeals(std::size_t rank);

/// `count` distinct ideals drawn without replacement from allSquarefreeIdeals(rank).
std::vector<MonomialIdeal> sampleSquarefreeIdeals(std::size_t rank, std::size_t count, std::uint64_t seed);

}  // namespace closurelab
