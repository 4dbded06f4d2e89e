#include "nfkit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "nfkit/error.hpp"

namespace nfkit::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::size_t count(const json& j, const char* what) {
  const long v = integer(j, what);
  if (v < 0) fail(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

Exponents exponents_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail("exponent row must have " + std::to_string(n) + " entries");
  Exponents m;
  for (const auto& e : j) {
    const long v = integer(e, "exponent");
    if (v < 0) fail("exponents must be nonnegative");
    m.push_back(static_cast<int>(v));
  }
  return m;
}

json exponents(const Exponents& m) { return json(m); }

json exponent_list(const std::vector<Exponents>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(exponents(m));
  return out;
}

json rational_row(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational(x));
  return out;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

}  // namespace

json rational(const Rational& r) { return to_string(r); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("rational must be a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.what());
  }
}

json matrix(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rational_row(m.row(i)));
  return out;
}

Matrix matrix_from(const json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  std::vector<RatVector> rows;
  std::size_t cols = j.empty() ? 0 : j[0].size();
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) fail("matrix rows must have equal length");
    RatVector r;
    for (const auto& x : row) r.push_back(rational_from(x));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows, cols);
}

json trunc(Trunc t) { return t ? json(*t) : json("inf"); }

Trunc trunc_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::nullopt;
  return static_cast<int>(integer(j, "trunc"));
}

json spectrum(const EigenSpectrum& s) {
  json nil = json::array();
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t k = i + 1; k < s.n(); ++k)
      if (s.nilpotent()(i, k) != 0) nil.push_back({i + 1, k + 1, rational(s.nilpotent()(i, k))});
  return {{"n", s.n()}, {"q", s.q()}, {"lambda", matrix(s.lambda())}, {"nilpotent", nil}};
}

EigenSpectrum spectrum_from(const json& j) {
  return guarded([&] {
    const std::size_t n = count(member(j, "n"), "n");
    const std::size_t q = count(member(j, "q"), "q");
    const json& lam = member(j, "lambda");
    if (!lam.is_array() || lam.size() != n) fail("lambda must have n rows");
    std::vector<RatVector> rows;
    for (const auto& row : lam) {
      if (!row.is_array() || row.size() != q) fail("lambda rows must have q entries");
      RatVector r;
      for (const auto& x : row) r.push_back(rational_from(x));
      rows.push_back(std::move(r));
    }
    std::vector<NilpotentEntry> nil;
    if (auto it = j.find("nilpotent"); it != j.end()) {
      if (!it->is_array()) fail("nilpotent must be an array of [i, j, value]");
      for (const auto& e : *it) {
        if (!e.is_array() || e.size() != 3) fail("nilpotent entries are [i, j, value]");
        const std::size_t a = count(e[0], "i");
        const std::size_t b = count(e[1], "j");
        if (a < 1 || b < 1 || a > n || b > n) fail("nilpotent index out of range");
        nil.push_back({a - 1, b - 1, rational_from(e[2])});
      }
    }
    return build_spectrum(n, q, rows, nil);
  });
}

json field(const PolyVectorField& f) {
  json terms = json::array();
  // Graded order over (degree, component, exponents).
  std::vector<std::tuple<int, std::size_t, Exponents, Rational>> all;
  for (std::size_t j = 0; j < f.n(); ++j)
    for (const auto& [m, c] : f[j].terms()) all.emplace_back(degree_of(m), j, m, c);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  });
  for (const auto& [d, j, m, c] : all) terms.push_back({{"j", j + 1}, {"m", exponents(m)}, {"c", rational(c)}});
  return {{"n", f.n()}, {"trunc", trunc(f.trunc())}, {"terms", terms}};
}

PolyVectorField field_from(const json& j) {
  return guarded([&] {
    const std::size_t n = count(member(j, "n"), "n");
    const Trunc t = j.contains("trunc") ? trunc_from(j["trunc"]) : Trunc{};
    PolyVectorField f(n, t);
    const json& terms = member(j, "terms");
    if (!terms.is_array()) fail("terms must be an array");
    for (const auto& term : terms) {
      const std::size_t comp = count(member(term, "j"), "j");
      if (comp < 1 || comp > n) fail("component index out of range");
      const Exponents m = exponents_from(member(term, "m"), n);
      if (!within(t, degree_of(m))) fail("term degree exceeds the truncation");
      f.add_term(comp - 1, m, rational_from(member(term, "c")));
    }
    return f;
  });
}

json series(const PolySeries& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"m", exponents(m)}, {"c", rational(c)}});
  return {{"n", p.nvars()}, {"trunc", trunc(p.trunc())}, {"terms", terms}};
}

PolySeries series_from(const json& j) {
  return guarded([&] {
    const std::size_t n = count(member(j, "n"), "n");
    const Trunc t = j.contains("trunc") ? trunc_from(j["trunc"]) : Trunc{};
    PolySeries p(n, t);
    const json& terms = member(j, "terms");
    if (!terms.is_array()) fail("terms must be an array");
    for (const auto& term : terms) {
      const Exponents m = exponents_from(member(term, "m"), n);
      if (!within(t, degree_of(m))) fail("term degree exceeds the truncation");
      p.add_term(m, rational_from(member(term, "c")));
    }
    return p;
  });
}

json resonance_set(const ResonanceSet& rs) {
  json per = json::object();
  for (std::size_t j = 0; j < rs.per_component.size(); ++j)
    per[std::to_string(j + 1)] = exponent_list(rs.per_component[j]);
  json out = {{"finite", rs.finite}, {"r", rs.count}, {"R", per}};
  if (rs.degree_bound) out["degree_bound"] = *rs.degree_bound;
  if (rs.cap) out["cap"] = *rs.cap;
  return out;
}

json hilbert(const HilbertBasis& hb) {
  return {{"generators", exponent_list(hb.generators)}, {"cap_reached", hb.cap_reached}};
}

json centralizer(const CentralizerResult& res) {
  json basis = json::array();
  for (const auto& b : res.basis) basis.push_back(field(b));
  json bounds = {{"d", res.bounds.d}, {"r", res.bounds.r}};
  if (res.bounds.block_lower) bounds["block_lower"] = *res.bounds.block_lower;
  if (res.bounds.block_upper) bounds["block_upper"] = *res.bounds.block_upper;
  json out = {{"dimension", res.dimension}, {"exact", res.exact}, {"basis", basis}, {"bounds", bounds}};
  if (res.truncation) {
    out["truncation"] = *res.truncation;
    json graded = json::object();
    for (std::size_t k = 1; k < res.graded.size(); ++k) graded[std::to_string(k)] = res.graded[k];
    out["graded"] = graded;
    out["caveat"] = "solutions modulo degree > truncation; they need not extend to formal centralizer elements";
  }
  return out;
}

json normalizer(const NormalizerResult& res) {
  json basis = json::array();
  for (const auto& p : res.basis) basis.push_back({{"g", field(p.g)}, {"lambda", series(p.lambda)}});
  return {{"dimension", res.dimension}, {"truncation", res.truncation}, {"basis", basis}};
}

json reduction(const NormalizerReduction& red) {
  return {{"beta", series(red.beta)}, {"alpha", series(red.alpha)}, {"semisimple_commutes", red.semisimple_commutes}};
}

json invariants(const InvariantAlgebra& inv) {
  return {{"n", inv.n},
          {"generators", exponent_list(inv.generators)},
          {"independent", inv.independent},
          {"cap_reached", inv.cap_reached}};
}

InvariantAlgebra invariants_from(const json& j) {
  return guarded([&] {
    InvariantAlgebra inv;
    const json& gens = member(j, "generators");
    if (!gens.is_array()) fail("generators must be an array");
    inv.n = j.contains("n") ? count(j["n"], "n") : (gens.empty() ? 0 : gens[0].size());
    for (const auto& g : gens) inv.generators.push_back(exponents_from(g, inv.n));
    inv.independent = member(j, "independent").get<bool>();
    inv.cap_reached = j.value("cap_reached", false);
    return inv;
  });
}

json module_check(const ModuleCheck& c) {
  json out = {{"verdict", verdict_name(c.verdict)}, {"complete", c.complete}};
  if (c.component) out["component"] = *c.component + 1;
  if (c.witness) out["witness"] = exponents(*c.witness);
  return out;
}

json reduced(const ReducedField& red) {
  json out = field(red.field);
  out["r"] = red.r;
  out["nu"] = matrix(red.nu);
  json eta = json::array();
  for (const auto& e : red.eta) eta.push_back(series(e));
  out["eta"] = eta;
  return out;
}

ReducedField reduced_from(const json& j) {
  return guarded([&] {
    ReducedField red;
    red.field = field_from(j);
    red.r = red.field.n();
    red.nu = matrix_from(member(j, "nu"));
    if (red.nu.rows() != red.r || (red.r > 0 && red.nu.cols() != red.r)) fail("nu must be r x r");
    if (red.r == 0) red.nu = Matrix(0, 0);
    if (auto it = j.find("eta"); it != j.end())
      for (const auto& e : *it) red.eta.push_back(series_from(e));
    return red;
  });
}

namespace {

json semi_ladder(const SemiInvariantLadder& l) {
  json sols = json::array();
  for (const auto& s : l.solutions) sols.push_back({{"s", s.s}, {"k", s.k}, {"ks", s.ks}});
  return {{"solutions", sols}, {"complete", l.complete}, {"bound", l.bound}};
}

}  // namespace

json certificate(const TrivialityCertificate& c) {
  json out = {{"certified", c.certified}, {"mu", rational_row(c.mu)}, {"reasons", c.reasons}};
  if (c.commuting)
    out["commuting_ladder"] = {
        {"degrees", c.commuting->degrees}, {"complete", c.commuting->complete}, {"bound", c.commuting->bound}};
  if (c.first_integrals) out["first_integral_ladder"] = semi_ladder(*c.first_integrals);
  if (c.quadratic_kernel_dim) out["quadratic_kernel_dim"] = *c.quadratic_kernel_dim;
  return out;
}

json ladder(const MultiplierLadder& l) {
  json entries = json::array();
  for (const auto& e : l.entries) {
    json entry = {{"r", e.r}, {"status", status_name(e.status)}};
    if (e.multiplier) entry["multiplier"] = series(*e.multiplier);
    if (e.failed_degree) entry["failed_degree"] = *e.failed_degree;
    if (e.solutions.size() > 1) entry["solution_count"] = e.solutions.size();
    entries.push_back(entry);
  }
  json out = {{"D", l.D}, {"entries", entries}, {"support_note", l.support_note}};
  if (l.semiinvariant)
    out["semiinvariant"] = {{"axis", l.semiinvariant->axis + 1},
                            {"kappa", rational(l.semiinvariant->kappa)},
                            {"mu", rational_row(l.semiinvariant->mu)},
                            {"cofactor", rational(l.semiinvariant->cofactor)},
                            {"ladder", semi_ladder(l.semiinvariant->ladder)}};
  return out;
}

json obstruction(const ObstructionResult& o) {
  json out = {{"status", status_name(o.status)}, {"system", matrix(o.system)}};
  if (!o.alpha.empty()) out["alpha"] = rational_row(o.alpha);
  if (o.candidate) out["candidate"] = series(*o.candidate);
  return out;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace nfkit::json
