#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit status and stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + CLOSURE_LAB_BIN + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string("\"") + TEST_DATA_DIR + "/" + name + "\""; }

}  // namespace

TEST_CASE("Newton polyhedron output") {
  const auto r = run("np --ideal " + data("x2_y3.txt"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["polyhedron"]["facets"].size() == 3);
  CHECK(j["analytic_spread"] == 2);
  CHECK(j["max_generator_degree"] == 3);
}

TEST_CASE("closure output") {
  const auto r = run("closure --ideal " + data("x2_y3.txt") + " --n 1");
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["text"] == "y^3, x*y^2, x^2");
  const auto t = run("closure --ideal " + data("x2_y3.txt") + " --n 1 --format tsv");
  CHECK(t.out == "x\ty\n0\t3\n1\t2\n2\t0\n");
}

TEST_CASE("scan-ass on the example family") {
  const auto r = run("scan-ass --ideal " + data("ex_d3.json") + " --max-n 5 --format tsv");
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "n\tdepth\tdim\tis_cm\tass_count\tmax_ass_is_maximal\n"
        "1\t1\t1\t1\t2\t0\n"
        "2\t1\t1\t1\t2\t0\n"
        "3\t0\t1\t0\t3\t1\n"
        "4\t0\t1\t0\t3\t1\n"
        "5\t0\t1\t0\t3\t1\n");
  const auto j = nlohmann::json::parse(run("scan-depth --ideal " + data("ex_d3.json") + " --max-n 4").out);
  CHECK(j["astab"]["value"] == 3);
  CHECK(j["astab"]["method"] == "heuristic");
  CHECK(j["per_n"][2]["depth"]["method"] == "takayama");
}

TEST_CASE("bounds") {
  const auto r = run("bounds --ideal " + data("ex_d3.json"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n0"]["value"] == "18");
  CHECK(j["n1"]["value"] == "80811");
}

TEST_CASE("depth of a closure power") {
  for (const char* file : {"sq_ci.json", "sq_ci.txt"}) {
    const auto r = run(std::string("depth --ideal ") + data(file) + " --closure-power 2");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["reports"][0]["depth"] == 2);
    CHECK(j["reports"][0]["method"] == "takayama");
    CHECK(j["reports"][1]["depth"] == 2);
    CHECK(j["reports"][1]["method"] == "betti");
  }
}

TEST_CASE("associated primes") {
  const auto r = run("ass --ideal " + data("ex_d3.json") + " --closure-power 3 --format tsv");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("(x,y,z)\t3") != std::string::npos);
}

TEST_CASE("cm classification") {
  const auto r = run("cm --ideal " + data("sq_ci.txt") + " --max-n 3");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["equimultiple"] == true);
  CHECK(j["complete_intersection"] == true);
  for (const auto& row : j["per_n"]) CHECK(row["is_cm"] == true);
}

TEST_CASE("check suites") {
  const auto r = run("check --suite newton --corpus r=3,count=20,seed=7 --format tsv");
  CHECK(r.status == 0);
  CHECK(r.out.find("\tfail\t") == std::string::npos);
  CHECK(run("check --suite homology").status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 1);
  CHECK(run("np").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("np --ideal " + data("bad_variable.txt")).status == 1);
  CHECK(run("np --ideal " + data("unit.txt")).status == 1);
  CHECK(run("np --ideal " + data("missing.json")).status == 1);
  CHECK(run("closure --ideal " + data("x2_y3.txt") + " --n 0").status == 1);
  CHECK(run("depth --ideal " + data("x2_y3.txt") + " --field fp:6").status == 1);
  CHECK(run("check --suite nonsense").status == 1);
  CHECK(run("closure --ideal " + data("big.txt") + " --n 3 --max-lattice-points 1000").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("identical invocations give identical output") {
  const std::string args = "check --suite depth --corpus r=3,count=10,seed=3";
  const auto a = run(args + " --jobs 1");
  const auto b = run(args + " --jobs 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto c = run("scan-depth --ideal " + data("ex_d3.json") + " --max-n 3");
  CHECK(c.out == run("scan-depth --ideal " + data("ex_d3.json") + " --max-n 3").out);
}
