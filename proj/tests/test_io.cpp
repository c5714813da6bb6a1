#include <doctest.h>

#include "closurelab/checks.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/io.hpp"

using namespace closurelab;

namespace {

MonomialIdeal ideal(std::size_t r, std::vector<ExponentVector> gens) { return minimalize(r, std::move(gens)); }

void checkParseError(const std::string& text, std::size_t line, std::size_t column) {
  CAPTURE(text);
  try {
    io::parseIdeal(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("default variable names") {
  CHECK(io::defaultVariableNames(3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(io::defaultVariableNames(5) == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
}

TEST_CASE("JSON ideals") {
  const auto p = io::parseIdeal(R"({"variables":["x","y","z"],"generators":[[3,0,0],[1,1,1],[0,2,1]]})");
  CHECK(p.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(p.ideal == exampleFamilyIdeal(3));
  const auto q = io::parseIdealJson(R"({"generators":[[2,0],[0,3],[2,1]]})");
  CHECK(q.variables == std::vector<std::string>{"x", "y"});
  CHECK(q.ideal == ideal(2, {{2, 0}, {0, 3}}));
}

TEST_CASE("text ideals") {
  const auto p = io::parseIdeal("variables: x, y\nx^2, y^3\n");
  CHECK(p.ideal == ideal(2, {{2, 0}, {0, 3}}));
  const auto q = io::parseIdeal("# a comment\nx^3, x*y*z\ny^2*z  # trailing\n");
  CHECK(q.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(q.ideal == exampleFamilyIdeal(3));
  CHECK(io::parseIdeal("variables: a, b\nb^2*a, a*a*b").ideal == ideal(2, {{1, 2}, {2, 1}}));
  CHECK(io::parseIdeal("variables: x, y\ny").ideal == ideal(2, {{0, 1}}));
}

TEST_CASE("parse errors carry positions") {
  checkParseError("x^0", 1, 1);
  checkParseError("variables: x, y\nx^2, 1", 2, 1);
  checkParseError("variables: x, y\nx^2, q", 2, 6);
  checkParseError("x^2, y^", 1, 8);
  checkParseError("x^2,\n  y^3 ;", 2, 7);
  checkParseError("variables: x\n", 2, 1);
  checkParseError("{\"generators\": [[1, 0],\n [0, 1]", 2, 8);
  checkParseError(R"({"generators": []})", 1, 1);
  checkParseError(R"({"variables":["x","y"],"generators":[[1]]})", 1, 1);
  checkParseError(R"({"generators":[[-1, 2]]})", 1, 1);
  checkParseError(R"({"generators":[[0, 0]]})", 1, 1);
}

TEST_CASE("printing") {
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(io::monomialText({1, 2, 0}, names) == "x*y^2");
  CHECK(io::monomialText({0, 0, 0}, names) == "1");
  CHECK(io::idealText(exampleFamilyIdeal(3), names) == "y^2*z, x*y*z, x^3");
  CHECK(io::idealText(MonomialIdeal::zero(3), names) == "0");
}

TEST_CASE("text round trip") {
  const auto i = exampleFamilyIdeal(4);
  const auto names = io::defaultVariableNames(3);
  CHECK(io::parseIdeal("variables: x, y, z\n" + io::idealText(i, names)).ideal == i);
  CHECK(io::parseIdeal(io::toJson(io::NamedIdeal{names, i}).dump()).ideal == i);
}

TEST_CASE("JSON shapes") {
  const auto np = io::toJson(computeNewtonPolyhedron(ideal(2, {{2, 0}, {0, 3}})));
  CHECK(np["facets"].size() == 3);
  CHECK(np["facets"][0].contains("a"));
  CHECK(np["vertices"].size() == 2);

  const auto e = io::toJson(SimplicialComplex::emptyComplex(2));
  CHECK(e.dump() == R"({"ground":2,"facets":[[]],"state":"empty"})");
  CHECK(io::toJson(SimplicialComplex::voidComplex(2)).dump() == R"({"ground":2,"facets":[],"state":"void"})");
  CHECK(io::toJson(SimplicialComplex::fromFacets(3, {{0, 2}})).dump() == R"({"ground":3,"facets":[[1,3]],"state":"plain"})");

  const auto d = io::toJson(depthTakayama(ideal(2, {{1, 1}})));
  CHECK(d["depth"] == 1);
  CHECK(d["method"] == "takayama");
  CHECK(d["witness_degree"] == nlohmann::ordered_json::array({-1, 0}));
  CHECK(d["cross_checked_with"] == "betti");
}

TEST_CASE("scan tables") {
  const auto tsv = io::scanTsv(stabilityScan(exampleFamilyIdeal(3), 4));
  CHECK(tsv ==
        "n\tdepth\tdim\tis_cm\tass_count\tmax_ass_is_maximal\n"
        "1\t1\t1\t1\t2\t0\n"
        "2\t1\t1\t1\t2\t0\n"
        "3\t0\t1\t0\t3\t1\n"
        "4\t0\t1\t0\t3\t1\n");
}
