#pragma once

#include <nlohmann/json.hpp>

#include "nfkit/centralizer.hpp"
#include "nfkit/invariants.hpp"
#include "nfkit/jacobi.hpp"
#include "nfkit/polynomial.hpp"
#include "nfkit/resonance.hpp"
#include "nfkit/spectrum.hpp"

// All component and coordinate indices are 1-based in JSON.
namespace nfkit::json {

using nlohmann::json;

json rational(const Rational& r);
Rational rational_from(const json& j);
json matrix(const Matrix& m);
Matrix matrix_from(const json& j);
json trunc(Trunc t);
Trunc trunc_from(const json& j);

json spectrum(const EigenSpectrum& s);
EigenSpectrum spectrum_from(const json& j);

json field(const PolyVectorField& f);
PolyVectorField field_from(const json& j);

json series(const PolySeries& p);
PolySeries series_from(const json& j);

json resonance_set(const ResonanceSet& rs);
json hilbert(const HilbertBasis& hb);
json centralizer(const CentralizerResult& res);
json normalizer(const NormalizerResult& res);
json reduction(const NormalizerReduction& red);

json invariants(const InvariantAlgebra& inv);
InvariantAlgebra invariants_from(const json& j);
json module_check(const ModuleCheck& c);

json reduced(const ReducedField& red);
ReducedField reduced_from(const json& j);
json certificate(const TrivialityCertificate& c);

json ladder(const MultiplierLadder& l);
json obstruction(const ObstructionResult& o);

json load_file(const std::string& path);

}  // namespace nfkit::json
