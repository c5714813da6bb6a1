#pragma once

// Ideal files come in two forms. JSON:
//   {"variables": ["x", "y", "z"], "generators": [[3, 0, 0], [1, 1, 1]]}
// and text, with an optional declaration line:
//   variables: x, y, z
//   x^3, x*y*z, y^2*z
// Without the declaration, variables are taken in order of first use.

#include <json.hpp>

#include <string>
#include <vector>

#include "closurelab/cm.hpp"
#include "closurelab/depth.hpp"
#include "closurelab/monomial_ideal.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/simplicial_complex.hpp"
#include "closurelab/stability.hpp"

namespace closurelab::io {

struct NamedIdeal {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
};

std::vector<std::string> defaultVariableNames(std::size_t rank);

/// Throws ParseError with the 1-based line and column of the problem.
NamedIdeal parseIdealText(const std::string& text);
NamedIdeal parseIdealJson(const std::string& text);
/// Dispatches on the first non-blank character ('{' means JSON).
NamedIdeal parseIdeal(const std::string& text);
NamedIdeal parseIdealFile(const std::string& path);

std::string monomialText(const ExponentVector& alpha, const std::vector<std::string>& names);
std::string idealText(const MonomialIdeal& ideal, const std::vector<std::string>& names);

nlohmann::ordered_json toJson(const NamedIdeal& ideal);
nlohmann::ordered_json toJson(const NewtonPolyhedron& np);
nlohmann::ordered_json toJson(const SimplicialComplex& complex);
nlohmann::ordered_json toJson(const DepthReport& report);
nlohmann::ordered_json toJson(const std::vector<PrimeSupport>& primes, const std::vector<std::string>& names);
nlohmann::ordered_json toJson(const StabilityReport& report, const std::vector<std::string>& names);
nlohmann::ordered_json toJson(const CMClassification& cls);
nlohmann::ordered_json toJson(const StabilityIndex& index);

/// Fixed scan columns: n, depth, dim, is_cm, ass_count, max_ass_is_maximal.
std::string scanTsv(const StabilityReport& report);

}  // namespace closurelab::io
