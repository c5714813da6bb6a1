// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "closurelab/checks.hpp"
#include "closurelab/corpus.hpp"
#include "closurelab/parallel.hpp"
#include "closurelab/stability.hpp"

using namespace closurelab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome fromChecks(const std::vector<CheckResult>& results) {
  Outcome out;
  for (const auto& r : results) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += r.name + ": " + std::to_string(r.instances) + " instances";
    if (r.passed && !r.detail.empty()) out.detail += " (" + r.detail + ")";
    if (!r.passed) {
      out.passed = false;
      out.detail += " FAILED " + r.detail + (r.counterexample.empty() ? "" : " at " + r.counterexample);
    }
  }
  return out;
}

Outcome require(Outcome o, bool cond, const std::string& why) {
  if (!cond) {
    o.passed = false;
    o.detail += "; " + why;
  }
  return o;
}

CheckOptions baseOptions() {
  CheckOptions opts;
  opts.jobs = defaultJobs();
  return opts;
}

// n0 and n1 straight from the formulas: integer powers for n0, 1024-bit
// floating point with a final ceiling for n1.
mpz_class n0Direct(unsigned long ell, unsigned long d) {
  if (ell <= 2) return 1;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), d, ell - 2);
  return mpz_class(ell * (ell - 1)) * p;
}

mpz_class n1Direct(unsigned long r, unsigned long d) {
  if (r <= 2) return 1;
  mpf_class value(r * (r * r - 1), 1024);
  mpf_class rr(r, 1024), root(0, 1024), t(0, 1024);
  mpf_sqrt(root.get_mpf_t(), rr.get_mpf_t());
  mpf_pow_ui(t.get_mpf_t(), root.get_mpf_t(), r);
  value *= t;
  mpf_set_ui(t.get_mpf_t(), r - 1);
  mpf_pow_ui(t.get_mpf_t(), t.get_mpf_t(), r);
  value *= t;
  mpf_set_ui(t.get_mpf_t(), d);
  mpf_pow_ui(t.get_mpf_t(), t.get_mpf_t(), (r - 2) * (r + 1));
  value *= t;
  mpf_ceil(t.get_mpf_t(), value.get_mpf_t());
  return mpz_class(t);
}

Outcome exampleFamily() {
  const auto opts = baseOptions();
  return fromChecks({checkExampleFamily(3, opts), checkExampleFamily(4, opts)});
}

Outcome oracleEquivalence() {
  auto opts = baseOptions();
  opts.corpus = {1, 3, 120, 7, 4, 4};
  return fromChecks({checkOracleEquivalence(randomIdeals(opts.corpus), 3, opts)});
}

// Shared by the depth criteria: ranks 1..4, exponents up to 3.
const CorpusSpec kDepthCorpus{1, 4, 60, 13, 3, 4};

Outcome depthAgreement() {
  auto opts = baseOptions();
  opts.corpus = kDepthCorpus;
  const auto ideals = randomIdeals(opts.corpus);
  auto out = fromChecks({checkDepthAgreement(ideals, 3, opts)});
  return require(out, ideals.size() >= 50, "fewer than 50 ideals");
}

Outcome quasiDecreasing() {
  auto opts = baseOptions();
  opts.corpus = kDepthCorpus;
  return fromChecks(checkScans(randomIdeals(opts.corpus), 6, opts));
}

Outcome squarefreeSweep() {
  auto opts = baseOptions();
  opts.exhaustiveRank = 4;
  opts.sampleRank = 5;
  opts.sampleCount = 200;
  return fromChecks({checkSquarefreeSweep(4, opts)});
}

Outcome facetInvariants() {
  auto opts = baseOptions();
  opts.corpus = {1, 3, 100, 7, 4, 4};
  auto ideals = randomIdeals(opts.corpus);
  const auto deeper = randomIdeals(kDepthCorpus);
  ideals.insert(ideals.end(), deeper.begin(), deeper.end());
  for (int d = 3; d <= 6; ++d) ideals.push_back(exampleFamilyIdeal(d));
  return fromChecks({checkFacetInvariants(ideals, opts)});
}

Outcome structuralIdentities() {
  auto opts = baseOptions();
  opts.corpus = {1, 3, 100, 7, 4, 4};
  return fromChecks(checkStructuralIdentities(randomIdeals(opts.corpus), 30, opts));
}

Outcome boundFormulas() {
  Outcome out;
  struct Row {
    unsigned long r, d;
    const char* n0;
    const char* n1;
  };
  // n0 is evaluated at l = r, the generic case for an m-primary ideal
  const Row rows[] = {{3, 3, "18", "80811"}, {3, 5, "30", "623539"}, {4, 2, "48", "79626240"}};
  for (const auto& row : rows) {
    const auto n0 = n0Bound(row.r, static_cast<long long>(row.d));
    const auto n1 = n1Bound(row.r, static_cast<long long>(row.d));
    const bool ok = n0 == n0Direct(row.r, row.d) && n1 == n1Direct(row.r, row.d) && n0 == mpz_class(row.n0) &&
                    n1 == mpz_class(row.n1);
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += "(r,d)=(" + std::to_string(row.r) + "," + std::to_string(row.d) + ") n0=" + n0.get_str() +
                  " n1=" + n1.get_str();
    if (!ok) {
      out.passed = false;
      out.detail += " MISMATCH (direct n0=" + n0Direct(row.r, row.d).get_str() +
                    " n1=" + n1Direct(row.r, row.d).get_str() + ")";
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 example family d=3,4: Ass, CM range, height, spread", exampleFamily},
      {"2 facet membership == convex-combination oracle", oracleEquivalence},
      {"3 Takayama depth == Betti depth", depthAgreement},
      {"4 quasi-decreasing depth and nondecreasing Ass", quasiDecreasing},
      {"5 square-free sweep: CM(n=3) <=> CI <=> equimultiple <=> CM(n<=4)", squarefreeSweep},
      {"6 facet coefficient bound and affine rank", facetInvariants},
      {"7 restriction, extension and decomposition identities", structuralIdentities},
      {"8 n0 and n1 against direct evaluation", boundFormulas},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s  (%.1fs)  %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    all &= o.passed;
  }
  return all ? 0 : 1;
}
