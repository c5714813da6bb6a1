// closure-lab: command-line front end for the closurelab library.
//
// Exit status: 0 success, 1 usage or input error, 2 resource cap exceeded,
// 3 internal consistency failure (including failed checks).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "closurelab/checks.hpp"
#include "closurelab/cm.hpp"
#include "closurelab/depth.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/io.hpp"
#include "closurelab/kernels.hpp"
#include "closurelab/parallel.hpp"
#include "closurelab/stability.hpp"

using namespace closurelab;
using nlohmann::ordered_json;

namespace {

struct Config {
  std::string idealPath;
  std::string format = "json";
  std::string outPath;
  std::string field = "q";
  std::size_t jobs = defaultJobs();
  std::uint64_t maxLatticePoints = ScanLimits{}.maxLatticePoints;
  std::uint64_t maxFaces = ScanLimits{}.maxFaces;
  int n = 1;
  int closurePowerN = 0;
  int maxN = 5;
  std::vector<int> box;
  std::string suite = "all";
  std::string corpus;
  std::size_t exhaustiveR = 4;
  std::size_t sampleCount = 200;
  std::uint64_t sampleSeed = 11;

  ScanLimits limits() const { return {maxLatticePoints, maxFaces}; }
  FieldSpec fieldSpec() const { return FieldSpec::parse(field); }
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.outPath, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + cfg.outPath + "'");
  out << text;
}

void emitJson(const Config& cfg, const ordered_json& j) { emit(cfg, j.dump(2) + "\n"); }

io::NamedIdeal loadIdeal(const Config& cfg) {
  if (cfg.idealPath.empty()) throw ArgumentError("--ideal is required");
  auto named = io::parseIdealFile(cfg.idealPath);
  if (named.ideal.isZero()) throw ArgumentError("the zero ideal is not supported here");
  return named;
}

MonomialIdeal targetIdeal(const Config& cfg, const io::NamedIdeal& named) {
  if (cfg.closurePowerN < 0) throw ArgumentError("--closure-power must be nonnegative");
  if (cfg.closurePowerN == 0) return named.ideal;
  return closurePower(named.ideal, cfg.closurePowerN, cfg.limits());
}

std::string targetLabel(const Config& cfg) {
  return cfg.closurePowerN == 0 ? "I" : "closure(I^" + std::to_string(cfg.closurePowerN) + ")";
}

void runNp(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  const auto np = computeNewtonPolyhedron(named.ideal);
  if (cfg.format == "tsv") {
    std::ostringstream os;
    for (std::size_t i = 0; i < np.rank; ++i) os << "a_" << named.variables[i] << '\t';
    os << "b\n";
    for (const auto& f : np.facets) {
      for (auto a : f.a) os << a << '\t';
      os << f.b << '\n';
    }
    emit(cfg, os.str());
    return;
  }
  ordered_json j{{"ideal", io::toJson(named)}, {"polyhedron", io::toJson(np)}};
  j["analytic_spread"] = analyticSpread(np, cfg.limits());
  j["max_generator_degree"] = named.ideal.maxGenDegree();
  emitJson(cfg, j);
}

void runClosure(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  if (cfg.n < 1) throw ArgumentError("--n must be at least 1");
  const auto c = closurePower(named.ideal, cfg.n, cfg.limits());
  if (cfg.format == "tsv") {
    std::ostringstream os;
    for (const auto& v : named.variables) os << v << (&v == &named.variables.back() ? '\n' : '\t');
    for (const auto& g : c.generators())
      for (std::size_t i = 0; i < g.rank(); ++i) os << g[i] << (i + 1 == g.rank() ? '\n' : '\t');
    emit(cfg, os.str());
    return;
  }
  ordered_json j{{"n", cfg.n}, {"closure", io::toJson(io::NamedIdeal{named.variables, c})}};
  j["text"] = io::idealText(c, named.variables);
  emitJson(cfg, j);
}

void runDepth(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  const auto j = targetIdeal(cfg, named);
  const auto field = cfg.fieldSpec();
  std::optional<std::vector<int>> box;
  if (!cfg.box.empty()) box = cfg.box;
  const auto takayama = depthTakayama(j, field, box);
  const auto betti = depthBetti(j, field);
  const auto dim = heightDim(j).dim;
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "target\tdepth\tdim\tmethod\twitness\n";
    os << targetLabel(cfg) << '\t' << takayama.depth << '\t' << dim << "\ttakayama\t"
       << (takayama.witnessDegree ? takayama.witnessDegree->toString() : "-") << '\n';
    os << targetLabel(cfg) << '\t' << betti.depth << '\t' << dim << "\tbetti\t"
       << (betti.witnessDegree ? betti.witnessDegree->toString() : "-") << '\n';
    emit(cfg, os.str());
    return;
  }
  emitJson(cfg, {{"target", targetLabel(cfg)},
                 {"generators", io::idealText(j, named.variables)},
                 {"dim", dim},
                 {"reports", ordered_json::array({io::toJson(takayama), io::toJson(betti)})}});
}

void runAss(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  const auto j = targetIdeal(cfg, named);
  const auto primes = associatedPrimes(j);
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "prime\theight\n";
    for (const auto& p : primes) {
      std::string s;
      for (auto i : p.vars.indices()) s += (s.empty() ? "" : ",") + named.variables[i];
      os << '(' << s << ")\t" << p.height() << '\n';
    }
    emit(cfg, os.str());
    return;
  }
  emitJson(cfg, {{"target", targetLabel(cfg)}, {"method", "irreducible-decomposition"}, {"ass", io::toJson(primes, named.variables)}});
}

void runScan(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  if (cfg.maxN < 1) throw ArgumentError("--max-n must be at least 1");
  const auto report = stabilityScan(named.ideal, cfg.maxN, cfg.fieldSpec(), cfg.limits());
  if (cfg.format == "tsv") {
    emit(cfg, io::scanTsv(report));
    return;
  }
  emitJson(cfg, io::toJson(report, named.variables));
}

void runBounds(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  const auto ell = analyticSpread(named.ideal, cfg.limits());
  const auto d = named.ideal.maxGenDegree();
  const auto n0 = n0Bound(ell, d);
  const auto n1 = n1Bound(named.ideal.rank(), d);
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "r\t" << named.ideal.rank() << "\nd\t" << d << "\nl\t" << ell << "\nn0\t" << n0.get_str() << "\nn1\t"
       << n1.get_str() << '\n';
    emit(cfg, os.str());
    return;
  }
  emitJson(cfg, {{"rank", named.ideal.rank()},
                 {"max_generator_degree", d},
                 {"analytic_spread", ell},
                 {"n0", {{"value", n0.get_str()}, {"method", "certified"}}},
                 {"n1", {{"value", n1.get_str()}, {"method", "certified"}, {"rounding", "ceiling"}}}});
}

void runCm(const Config& cfg) {
  const auto named = loadIdeal(cfg);
  if (cfg.maxN < 1) throw ArgumentError("--max-n must be at least 1");
  const auto cls = classify(named.ideal, cfg.fieldSpec(), cfg.maxN, cfg.limits());
  std::ostringstream table;
  table << "n\tdepth\tdim\tis_cm\n";
  for (const auto& row : cls.perN) table << row.n << '\t' << row.depth << '\t' << row.dim << '\t' << (row.cm ? 1 : 0) << '\n';
  if (cfg.format == "tsv") {
    emit(cfg, table.str());
    return;
  }
  std::cerr << "height " << cls.height << ", analytic spread " << cls.analyticSpread << ", equimultiple "
            << (cls.equimultiple ? "yes" : "no") << '\n'
            << table.str();
  for (const auto& c : cls.checks) std::cerr << c.name << ": " << outcomeName(c.outcome) << '\n';
  emitJson(cfg, io::toJson(cls));
}

int runCheck(const Config& cfg) {
  CheckOptions opts;
  opts.corpus = parseCorpusSpec(cfg.corpus);
  opts.exhaustiveRank = cfg.exhaustiveR;
  opts.sampleCount = cfg.sampleCount;
  opts.sampleSeed = cfg.sampleSeed;
  opts.field = cfg.fieldSpec();
  opts.limits = cfg.limits();
  opts.jobs = cfg.jobs;
  const auto results = runSuite(cfg.suite, opts);
  bool ok = true;
  for (const auto& r : results) ok &= r.passed;
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "suite\tcheck\tstatus\tinstances\tdetail\tcounterexample\n";
    for (const auto& r : results)
      os << r.suite << '\t' << r.name << '\t' << (r.passed ? "pass" : "fail") << '\t' << r.instances << '\t' << r.detail
         << '\t' << r.counterexample << '\n';
    emit(cfg, os.str());
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back({{"suite", r.suite},
                     {"check", r.name},
                     {"status", r.passed ? "pass" : "fail"},
                     {"instances", r.instances},
                     {"detail", r.detail},
                     {"counterexample", r.counterexample.empty() ? ordered_json(nullptr) : ordered_json(r.counterexample)}});
    emitJson(cfg, {{"suite", cfg.suite},
                   {"corpus", toString(opts.corpus)},
                   {"isa", std::string(kernels::isaName(kernels::active().isa))},
                   {"passed", ok},
                   {"results", arr}});
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral closures of powers of monomial ideals: Newton polyhedra, depth, Ass and Cohen-Macaulayness"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool needsIdeal) {
    auto* opt = sub->add_option("--ideal", cfg.idealPath, "Ideal file (JSON or text)");
    if (needsIdeal) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", cfg.outPath, "Write output to this file instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default: CLOSURELAB_JOBS or hardware threads)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-lattice-points", cfg.maxLatticePoints, "Cap on lattice points scanned per closure power");
    sub->add_option("--max-faces", cfg.maxFaces, "Cap on faces visited when computing the analytic spread");
  };
  auto fieldOpt = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Coefficient field: q (rationals) or fp:P");
  };

  auto* np = app.add_subcommand("np", "Facets and vertices of the Newton polyhedron");
  common(np, true);
  auto* closure = app.add_subcommand("closure", "Minimal generators of the integral closure of I^n");
  common(closure, true);
  closure->add_option("--n", cfg.n, "Power")->required();
  auto* depth = app.add_subcommand("depth", "Depth of R/J by degree complexes, checked against Betti numbers");
  common(depth, true);
  fieldOpt(depth);
  depth->add_option("--closure-power", cfg.closurePowerN, "Use J = closure of I^N (default: J = I)");
  depth->add_option("--box", cfg.box, "Per-variable scan bounds, e.g. 4,3,2")->delimiter(',');
  auto* ass = app.add_subcommand("ass", "Associated primes of R/J");
  common(ass, true);
  ass->add_option("--closure-power", cfg.closurePowerN, "Use J = closure of I^N (default: J = I)");
  auto* scanDepth = app.add_subcommand("scan-depth", "Depth and Ass of closure powers for n = 1..N");
  common(scanDepth, true);
  fieldOpt(scanDepth);
  scanDepth->add_option("--max-n", cfg.maxN, "Largest power")->required();
  auto* scanAss = app.add_subcommand("scan-ass", "Ass and depth of closure powers for n = 1..N");
  common(scanAss, true);
  fieldOpt(scanAss);
  scanAss->add_option("--max-n", cfg.maxN, "Largest power")->required();
  auto* bounds = app.add_subcommand("bounds", "Stability bounds n0 and n1");
  common(bounds, true);
  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay classification of closure powers");
  common(cm, true);
  fieldOpt(cm);
  cm->add_option("--max-n", cfg.maxN, "Largest power")->required();
  auto* check = app.add_subcommand("check", "Run invariant suites");
  common(check, false);
  fieldOpt(check);
  check->add_option("--suite", cfg.suite, "newton, homology, depth, stability, cm or all")
      ->check(CLI::IsMember({"newton", "homology", "depth", "stability", "cm", "all"}));
  check->add_option("--corpus", cfg.corpus, "Random corpus, e.g. r=3,count=100,seed=7");
  check->add_option("--exhaustive-r", cfg.exhaustiveR, "Enumerate all square-free ideals up to this many variables")
      ->check(CLI::Range(1, 5));
  check->add_option("--sample-r5", cfg.sampleCount, "Square-free ideals sampled in 5 variables");
  check->add_option("--sample-seed", cfg.sampleSeed, "Seed for the 5-variable sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*np) runNp(cfg);
    else if (*closure) runClosure(cfg);
    else if (*depth) runDepth(cfg);
    else if (*ass) runAss(cfg);
    else if (*scanDepth || *scanAss) runScan(cfg);
    else if (*bounds) runBounds(cfg);
    else if (*cm) runCm(cfg);
    else if (*check) return runCheck(cfg);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << cfg.idealPath << ": " << e.what() << '\n';
    return 1;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 3;
  }
}
