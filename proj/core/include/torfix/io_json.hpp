#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "torfix/classify.hpp"
#include "torfix/fixpoints.hpp"
#include "torfix/gauss.hpp"
#include "torfix/int_poly.hpp"
#include "torfix/spectral.hpp"

namespace torfix {

// Coefficients as decimal strings, ascending, so values of any size survive
// a JSON round-trip bit-exactly: ["1","4","4","0","4","4","1"].
nlohmann::json poly_to_json(const IntPoly& p);
// Accepts decimal strings or plain JSON integers per entry.
IntPoly poly_from_json(const nlohmann::json& j);

nlohmann::json split_to_json(const SpectralSplit& s);

// The classification report object:
// {"kind", "period", "forbidden_residues", "entropy": {"log_value",
//  "error_bound"}, "formal_input", "non_simple_implied"}.
nlohmann::json classification_to_json(const GrowthClassification& g, bool formal_input);

nlohmann::json ergodicity_to_json(const ErgodicityReport& r);

nlohmann::json fix_sequence_to_json(const FixSequence& seq);
// Header line n,F,periodic_factor,wild_factor.
std::string fix_sequence_to_csv(const FixSequence& seq);

// One endomorphism input: a 2g x 2g integer matrix ("rational"), a g x g
// matrix over Z[i] ("gaussian"), or the characteristic polynomial directly
// ("polynomial"; a bare coefficient array is accepted as shorthand).
struct EndoInput {
    enum class Kind { Polynomial, RationalMatrix, GaussianMatrix };
    Kind kind = Kind::Polynomial;
    IntPoly chi_r;
    std::optional<GaussIntPoly> chi_a; // Gaussian path only
    // Only the Gaussian path certifies chi_r = chi_a * conj(chi_a); every
    // other input is processed formally.
    bool conjugate_closed() const { return kind == Kind::GaussianMatrix; }
};

const char* to_string(EndoInput::Kind k);

// Parses the documented input JSON, runs the characteristic-polynomial
// pipeline for matrix inputs, and (when require_monic) rejects non-monic
// polynomials with a DomainError. ParseError on malformed documents.
EndoInput parse_endo_input(const std::string& json_text, bool require_monic = true);
EndoInput parse_endo_input(const nlohmann::json& j, bool require_monic = true);

} // namespace torfix
