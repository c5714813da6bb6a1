#include "closurelab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "closurelab/errors.hpp"

namespace closurelab::io {

using nlohmann::ordered_json;

std::vector<std::string> defaultVariableNames(std::size_t rank) {
  static const std::vector<std::string> small{"x", "y", "z", "w"};
  if (rank <= small.size()) return {small.begin(), small.begin() + static_cast<std::ptrdiff_t>(rank)};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

namespace {

class TextCursor {
 public:
  explicit TextCursor(const std::string& text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  char get() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  /// Skips blanks and comments; newlines only when `newlines` is set.
  void skipSpace(bool newlines) {
    while (!done()) {
      const char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        get();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  std::string identifier() {
    std::string out;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += get();
    return out;
  }
  long long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer");
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > std::numeric_limits<Exponent>::max()) fail("exponent too large");
    }
    return v;
  }
  bool startsWith(const std::string& word) const { return text_.compare(pos_, word.size(), word) == 0; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

struct RawMonomial {
  std::vector<std::pair<std::size_t, long long>> factors;  // variable index, exponent
  std::size_t line, col;
};

}  // namespace

NamedIdeal parseIdealText(const std::string& text) {
  TextCursor cur(text);
  std::vector<std::string> names;
  bool declared = false;
  cur.skipSpace(true);
  if (cur.startsWith("variables")) {
    cur.identifier();
    cur.skipSpace(false);
    if (cur.peek() != ':') cur.fail("expected ':' after 'variables'");
    cur.get();
    while (true) {
      cur.skipSpace(false);
      if (!isIdentStart(cur.peek())) cur.fail("expected a variable name");
      const auto line = cur.line(), col = cur.col();
      auto name = cur.identifier();
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw ParseError("variable '" + name + "' declared twice", line, col);
      names.push_back(std::move(name));
      cur.skipSpace(false);
      if (cur.peek() == ',') {
        cur.get();
        continue;
      }
      break;
    }
    if (!cur.done() && cur.peek() != '\n') cur.fail("unexpected character in variable declaration");
    declared = true;
    if (names.size() > kMaxVariables) cur.fail("too many variables");
  }

  std::vector<RawMonomial> raw;
  cur.skipSpace(true);
  while (!cur.done()) {
    RawMonomial m{{}, cur.line(), cur.col()};
    while (true) {
      cur.skipSpace(false);
      if (cur.peek() == '1' && m.factors.empty()) {
        cur.get();
      } else {
        if (!isIdentStart(cur.peek())) cur.fail("expected a variable name or 1");
        const auto line = cur.line(), col = cur.col();
        const auto name = cur.identifier();
        auto it = std::find(names.begin(), names.end(), name);
        std::size_t idx;
        if (it != names.end()) {
          idx = static_cast<std::size_t>(it - names.begin());
        } else if (declared) {
          throw ParseError("unknown variable '" + name + "'", line, col);
        } else {
          if (names.size() == kMaxVariables) throw ParseError("too many variables", line, col);
          idx = names.size();
          names.push_back(name);
        }
        long long e = 1;
        cur.skipSpace(false);
        if (cur.peek() == '^') {
          cur.get();
          cur.skipSpace(false);
          e = cur.integer();
        }
        m.factors.emplace_back(idx, e);
      }
      cur.skipSpace(false);
      if (cur.peek() == '*') {
        cur.get();
        continue;
      }
      break;
    }
    raw.push_back(std::move(m));
    cur.skipSpace(false);
    if (cur.peek() == ',' || cur.peek() == '\n') {
      cur.get();
      cur.skipSpace(true);
      continue;
    }
    if (!cur.done()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  }
  if (raw.empty()) cur.fail("empty generator list");
  const std::size_t r = names.size();
  if (r == 0) throw ParseError("generators only define the unit ideal", raw.front().line, raw.front().col);
  std::vector<ExponentVector> gens;
  for (const auto& m : raw) {
    ExponentVector v(r);
    for (auto [i, e] : m.factors) {
      const long long sum = static_cast<long long>(v[i]) + e;
      if (sum > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", m.line, m.col);
      v[i] = static_cast<Exponent>(sum);
    }
    gens.push_back(v);
  }
  auto ideal = minimalize(r, std::move(gens));
  if (ideal.isUnit()) throw ParseError("generators define the unit ideal", raw.front().line, raw.front().col);
  return {std::move(names), std::move(ideal)};
}

namespace {

std::pair<std::size_t, std::size_t> lineColumn(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

NamedIdeal parseIdealJson(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = lineColumn(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
  }
  auto bad = [](const std::string& msg) -> ParseError { return ParseError(msg, 1, 1); };
  if (!doc.is_object()) throw bad("expected a JSON object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) throw bad("missing 'generators' array");
  const auto& gj = doc["generators"];
  if (gj.empty()) throw bad("empty generator list");
  std::vector<std::string> names;
  if (doc.contains("variables")) {
    if (!doc["variables"].is_array()) throw bad("'variables' must be an array of names");
    for (const auto& v : doc["variables"]) {
      if (!v.is_string()) throw bad("variable names must be strings");
      auto name = v.get<std::string>();
      if (std::find(names.begin(), names.end(), name) != names.end()) throw bad("variable '" + name + "' declared twice");
      names.push_back(std::move(name));
    }
  } else {
    if (!gj.front().is_array()) throw bad("generator 1 is not an array");
    names = defaultVariableNames(gj.front().size());
  }
  const std::size_t r = names.size();
  if (r == 0) throw bad("no variables declared");
  if (r > kMaxVariables) throw bad("too many variables");
  std::vector<ExponentVector> gens;
  for (std::size_t k = 0; k < gj.size(); ++k) {
    const auto& g = gj[k];
    const std::string where = "generator " + std::to_string(k + 1);
    if (!g.is_array()) throw bad(where + " is not an array");
    if (g.size() != r) throw bad(where + " has " + std::to_string(g.size()) + " exponents, expected " + std::to_string(r));
    ExponentVector v(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (!g[i].is_number_integer()) throw bad(where + " has a non-integer exponent");
      const auto e = g[i].get<long long>();
      if (e < 0 || e > std::numeric_limits<Exponent>::max()) throw bad(where + " has an exponent out of range");
      v[i] = static_cast<Exponent>(e);
    }
    gens.push_back(v);
  }
  auto ideal = minimalize(r, std::move(gens));
  if (ideal.isUnit()) throw bad("generators define the unit ideal");
  return {std::move(names), std::move(ideal)};
}

NamedIdeal parseIdeal(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parseIdealJson(text);
  return parseIdealText(text);
}

NamedIdeal parseIdealFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open ideal file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseIdeal(buf.str());
}

std::string monomialText(const ExponentVector& alpha, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < alpha.rank(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (alpha[i] != 1) out += "^" + std::to_string(alpha[i]);
  }
  return out.empty() ? "1" : out;
}

std::string idealText(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  if (ideal.isZero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += monomialText(g, names);
  }
  return out;
}

namespace {

ordered_json vec(const ExponentVector& v) { return ordered_json(std::vector<int>(v.begin(), v.end())); }

ordered_json primeJson(const PrimeSupport& p, const std::vector<std::string>& names) {
  ordered_json vars = ordered_json::array();
  for (auto i : p.vars.indices()) vars.push_back(names.at(i));
  return vars;
}

}  // namespace

ordered_json toJson(const NamedIdeal& ideal) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : ideal.ideal.generators()) gens.push_back(vec(g));
  return {{"variables", ideal.variables}, {"generators", gens}};
}

ordered_json toJson(const NewtonPolyhedron& np) {
  ordered_json facets = ordered_json::array();
  for (const auto& f : np.facets) facets.push_back({{"a", f.a}, {"b", f.b}});
  ordered_json verts = ordered_json::array();
  for (const auto& v : np.vertices) verts.push_back(vec(v));
  return {{"facets", facets}, {"vertices", verts}};
}

ordered_json toJson(const SimplicialComplex& complex) {
  ordered_json facets = ordered_json::array();
  if (!complex.isVoid())
    for (auto f : complex.facets()) {
      ordered_json face = ordered_json::array();
      for (auto i : f.indices()) face.push_back(i + 1);
      facets.push_back(face);
    }
  return {{"ground", complex.ground()}, {"facets", facets}, {"state", stateName(complex.state())}};
}

ordered_json toJson(const DepthReport& report) {
  ordered_json out{{"depth", report.depth}, {"method", methodName(report.method)}, {"field", report.field.toString()}};
  out["witness_degree"] = report.witnessDegree ? vec(*report.witnessDegree) : ordered_json(nullptr);
  out["witness_index"] = report.witnessIndex;
  if (report.method == DepthMethod::kTakayama) {
    out["cross_checked_with"] = report.crossChecked ? "betti" : "none";
    out["box_widened"] = report.widened;
  }
  return out;
}

ordered_json toJson(const std::vector<PrimeSupport>& primes, const std::vector<std::string>& names) {
  ordered_json out = ordered_json::array();
  for (const auto& p : primes) out.push_back(primeJson(p, names));
  return out;
}

ordered_json toJson(const StabilityIndex& index) {
  return {{"value", index.index ? ordered_json(*index.index) : ordered_json(nullptr)},
          {"method", index.certified ? "certified" : "heuristic"},
          {"reason", index.reason}};
}

ordered_json toJson(const StabilityReport& report, const std::vector<std::string>& names) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.perN) {
    rows.push_back({{"n", row.n},
                    {"ass", toJson(row.ass, names)},
                    {"depth", toJson(row.depth)},
                    {"dim", row.dim},
                    {"is_cm", row.depth.depth == row.dim}});
  }
  return {{"rank", report.rank},
          {"height", report.height},
          {"analytic_spread", report.analyticSpread},
          {"max_generator_degree", report.maxDegree},
          {"limit_depth", report.limitDepth},
          {"per_n", rows},
          {"astab", toJson(report.astab)},
          {"dstab", toJson(report.dstab)},
          {"n0", report.n0.get_str()},
          {"n1", report.n1.get_str()},
          {"ass_monotone", report.assMonotone},
          {"depth_quasi_decreasing", report.quasiDecreasing}};
}

ordered_json toJson(const CMClassification& cls) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : cls.perN)
    rows.push_back({{"n", row.n}, {"depth", row.depth}, {"dim", row.dim}, {"is_cm", row.cm}, {"method", "betti"}});
  ordered_json checks = ordered_json::array();
  for (const auto& c : cls.checks) checks.push_back({{"name", c.name}, {"outcome", outcomeName(c.outcome)}, {"detail", c.detail}});
  return {{"ideal", cls.ideal},
          {"rank", cls.rank},
          {"height", cls.height},
          {"analytic_spread", cls.analyticSpread},
          {"equimultiple", cls.equimultiple},
          {"squarefree", cls.squarefree},
          {"complete_intersection", cls.completeIntersection ? ordered_json(*cls.completeIntersection) : ordered_json("n/a")},
          {"n1", cls.n1.get_str()},
          {"per_n", rows},
          {"theorem_checks", checks}};
}

std::string scanTsv(const StabilityReport& report) {
  std::ostringstream os;
  os << "n\tdepth\tdim\tis_cm\tass_count\tmax_ass_is_maximal\n";
  const PrimeSupport maximal{VarSet::full(report.rank)};
  for (const auto& row : report.perN) {
    const bool hasMax = std::find(row.ass.begin(), row.ass.end(), maximal) != row.ass.end();
    os << row.n << '\t' << row.depth.depth << '\t' << row.dim << '\t' << (row.depth.depth == row.dim ? 1 : 0) << '\t'
       << row.ass.size() << '\t' << (hasMax ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace closurelab::io
