#include <doctest.h>

#include <set>

#include "closurelab/corpus.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/parallel.hpp"

using namespace closurelab;

TEST_CASE("the generator is reproducible") {
  Rng a(5), b(5);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
  Rng c(3);
  for (int k = 0; k < 1000; ++k) {
    const auto v = c.between(-2, 4);
    CHECK(v >= -2);
    CHECK(v <= 4);
    CHECK(c.below(7) < 7);
  }
}

TEST_CASE("corpus specs") {
  const auto s = parseCorpusSpec("r=3,count=100,seed=7");
  CHECK(s.maxRank == 3);
  CHECK(s.count == 100);
  CHECK(s.seed == 7);
  const auto t = parseCorpusSpec("r=4,count=5,seed=1,min-r=2,max-exp=3,max-gens=6");
  CHECK(t.minRank == 2);
  CHECK(t.maxExponent == 3);
  CHECK(t.maxGenerators == 6);
  CHECK(parseCorpusSpec(toString(t)).seed == 1);
  CHECK(toString(parseCorpusSpec(toString(t))) == toString(t));
  CHECK_THROWS_AS(parseCorpusSpec("r=3,colour=blue"), ArgumentError);
  CHECK_THROWS_AS(parseCorpusSpec("r=x"), ArgumentError);
}

TEST_CASE("random corpora are deterministic and well formed") {
  const CorpusSpec spec{1, 3, 100, 7, 4, 4};
  const auto a = randomIdeals(spec);
  const auto b = randomIdeals(spec);
  REQUIRE(a.size() == 100);
  CHECK(a == b);
  for (const auto& i : a) {
    CHECK(i.rank() >= 1);
    CHECK(i.rank() <= 3);
    CHECK(i.isProper());
    CHECK_FALSE(i.isZero());
    CHECK(i.numGenerators() <= 4);
    CHECK(i.maxSingleExponent() <= 4);
  }
  auto other = spec;
  other.seed = 8;
  CHECK(randomIdeals(other) != a);
}

TEST_CASE("square-free ideals are enumerated completely") {
  // nonempty antichains in the Boolean lattice minus the one containing the empty set
  const std::size_t expected[] = {0, 1, 4, 18, 166};
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto all = allSquarefreeIdeals(r);
    CHECK(all.size() == expected[r]);
    std::set<std::vector<ExponentVector>> seen;
    for (const auto& i : all) {
      CHECK(i.isSquarefree());
      CHECK(i.isProper());
      seen.insert({i.generators().begin(), i.generators().end()});
    }
    CHECK(seen.size() == all.size());
  }
  CHECK(allSquarefreeIdeals(5).size() == 7579);
}

TEST_CASE("square-free samples are distinct and reproducible") {
  const auto a = sampleSquarefreeIdeals(5, 200, 11);
  CHECK(a.size() == 200);
  CHECK(a == sampleSquarefreeIdeals(5, 200, 11));
  std::set<std::vector<ExponentVector>> seen;
  for (const auto& i : a) seen.insert({i.generators().begin(), i.generators().end()});
  CHECK(seen.size() == 200);
  CHECK(sampleSquarefreeIdeals(3, 50, 1).size() == 18);
}

TEST_CASE("parallel map keeps order") {
  for (std::size_t jobs : {1u, 2u, 7u}) {
    const auto out = parallelMap<int>(50, jobs, [](std::size_t k) { return static_cast<int>(k * k); });
    REQUIRE(out.size() == 50);
    for (std::size_t k = 0; k < 50; ++k) CHECK(out[k] == static_cast<int>(k * k));
  }
}
