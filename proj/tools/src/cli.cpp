#include "nfkit/cli.hpp"

#include <ostream>

#include "nfkit/centralizer.hpp"
#include "nfkit/error.hpp"
#include "nfkit/invariants.hpp"
#include "nfkit/jacobi.hpp"
#include "nfkit/json_io.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/vectorfield.hpp"

namespace nfkit::cli {

namespace {

using Json = nlohmann::json;
namespace io = nfkit::json;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidInput, what);
}

void require_positive(const std::optional<int>& v, const char* flag) {
  if (v) require(*v > 0, std::string(flag) + " must be positive");
}

EigenSpectrum load_spectrum(const RunConfig& c) {
  require(!c.spectrum.empty(), "--spectrum is required");
  return io::spectrum_from(io::load_file(c.spectrum));
}

PolyVectorField load_field(const RunConfig& c) {
  require(!c.field.empty(), "--field is required");
  return io::field_from(io::load_file(c.field));
}

Json resonances(const RunConfig& c) {
  const EigenSpectrum s = load_spectrum(c);
  Json out;
  out["resonance"] = io::resonance_set(resonance_set(s, c.max_degree));
  out["hilbert_basis"] = io::hilbert(hilbert_basis(s));
  out["positive_relation"] = has_positive_relation(s);
  const UWDecomposition uw = uw_decomposition(s);
  auto one_based = [](const std::vector<std::size_t>& v) {
    std::vector<std::size_t> o;
    for (auto i : v) o.push_back(i + 1);
    return o;
  };
  out["U"] = one_based(uw.u);
  out["W"] = one_based(uw.w);
  Json cs = Json::array();
  for (const auto& row : c_matrix_basis(s)) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    cs.push_back(r);
  }
  out["c_matrices"] = cs;
  return out;
}

Json pdnf(const RunConfig& c) {
  const EigenSpectrum s = load_spectrum(c);
  Json basis = Json::array();
  for (const auto& f : pdnf_basis(s, c.max_degree)) basis.push_back(io::field(f));
  return {{"count", basis.size()}, {"basis", basis}};
}

Json centralizer(const RunConfig& c) {
  const EigenSpectrum s = load_spectrum(c);
  const PolyVectorField f = load_field(c);
  return io::centralizer(c.truncate ? centralizer_truncated(s, f, *c.truncate) : centralizer_exact(s, f));
}

Json normalizer(const RunConfig& c) {
  require(c.truncate.has_value(), "--truncate is required");
  const EigenSpectrum s = load_spectrum(c);
  const PolyVectorField f = load_field(c);
  Json out = {{"normalizer", io::normalizer(normalizer_truncated(s, f, *c.truncate))}};
  require(c.g.empty() == c.lambda.empty(), "--g and --lambda go together");
  if (!c.g.empty()) {
    const NormalizerPair pair{io::field_from(io::load_file(c.g)), io::series_from(io::load_file(c.lambda))};
    const bool holds = normalizer_relation_holds(s, f, pair, *c.truncate);
    Json p = {{"holds", holds}};
    if (holds) p["reduction"] = io::reduction(normalizer_reduce(s, f, pair.g, pair.lambda, *c.truncate));
    out["pair"] = p;
  }
  return out;
}

Json invariants(const RunConfig& c) {
  const EigenSpectrum s = load_spectrum(c);
  Json out = {{"algebra", io::invariants(invariant_generators(s))}};
  if (s.has_zero_eigenvalue())
    out["free_module"] = {{"verdict", "not_applicable"}, {"reason", error_name(ErrorCode::ZeroEigenvalue)}};
  else
    out["free_module"] = io::module_check(check_free_module(s, c.search_bound));
  const OneDivCheck od = check_onediv(s, c.search_bound);
  Json o = io::module_check(od.check);
  o["divergence_nonzero"] = od.divergence_nonzero;
  out["onediv"] = o;
  return out;
}

Json reduce(const RunConfig& c) {
  const EigenSpectrum s = load_spectrum(c);
  const PolyVectorField f = load_field(c);
  const InvariantAlgebra inv = invariant_generators(s);
  const ReducedField red = reduce_vectorfield(s, inv, f);
  return {{"algebra", io::invariants(inv)},
          {"reduced", io::reduced(red)},
          {"certificate", io::certificate(triviality_certificate(red, c.cap))},
          {"obstruction", io::obstruction(reduced_multiplier_obstruction(red))}};
}

Json jacobi(const RunConfig& c) {
  require(c.truncate.has_value(), "--truncate is required");
  const EigenSpectrum s = load_spectrum(c);
  const PolyVectorField f = load_field(c);
  const int r_min = c.r_min.value_or(1);
  const int r_max = c.r_max.value_or(*c.truncate);
  Json out = io::ladder(solve_multiplier(s, f, r_min, r_max, *c.truncate));
  out["divergence_first_integral"] = divergence_integral_check(s, f);
  return out;
}

Json classify3(const RunConfig& c) {
  require(c.triple.size() == 3, "classify3 takes three positive integers");
  const Dim3Verdict v = classify_dim3(c.triple[0], c.triple[1], c.triple[2]);
  Json out = {{"holds", v.holds}};
  if (v.holds) {
    out["l1"] = v.l1;
    out["l2"] = v.l2;
  }
  return out;
}

Json check(const RunConfig& c) {
  const EigenSpectrum s = load_spectrum(c);
  Json out = {{"spectrum", io::spectrum(s)}, {"finite_linear_centralizer", is_finite_linear_centralizer(s)}};
  if (!c.field.empty()) {
    const PolyVectorField f = load_field(c);
    const bool pdnf = is_pdnf(s, f);
    out["pdnf"] = pdnf;
    if (pdnf) out["divergence_first_integral"] = divergence_integral_check(s, f);
  }
  return out;
}

// Flat "path: value" lines.
void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    require_positive(config.max_degree, "--max-degree");
    require_positive(config.truncate, "--truncate");
    require_positive(config.r_max, "--r-max");
    require(config.search_bound > 0, "--search-bound must be positive");
    require(config.cap > 0, "--cap must be positive");
    if (config.r_min) require(*config.r_min >= 0, "--r-min must be nonnegative");

    Json report;
    switch (config.command) {
      case Command::Resonances: report = resonances(config); break;
      case Command::PdnfBasis: report = pdnf(config); break;
      case Command::Centralizer: report = centralizer(config); break;
      case Command::Normalizer: report = normalizer(config); break;
      case Command::Invariants: report = invariants(config); break;
      case Command::Reduce: report = reduce(config); break;
      case Command::Jacobi: report = jacobi(config); break;
      case Command::Classify3: report = classify3(config); break;
      case Command::Check: report = check(config); break;
    }
    if (config.format == Format::Json)
      out << report.dump(2) << '\n';
    else
      print_text(report, "", out);
    return 0;
  } catch (const Error& e) {
    const Json report = {{"error", std::string(error_name(e.code()))}, {"message", e.what()}};
    err << report.dump() << '\n';
    return is_scope_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nfkit::cli
