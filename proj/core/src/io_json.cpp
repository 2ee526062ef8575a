#include "torfix/io_json.hpp"

#include "torfix/matrix.hpp"

namespace torfix {

namespace {

using nlohmann::json;

std::string normalize_minus(std::string s) {
    // Tolerate the typographic minus U+2212 that creeps in via copy-paste.
    static const std::string uminus = "\xe2\x88\x92";
    for (std::size_t pos = s.find(uminus); pos != std::string::npos; pos = s.find(uminus))
        s.replace(pos, uminus.size(), "-");
    return s;
}

Int int_from_json(const json& j, const char* what) {
    if (j.is_string()) {
        const std::string s = normalize_minus(j.get<std::string>());
        try {
            return Int(s, 10);
        } catch (const std::invalid_argument&) {
            throw ParseError(std::string(what) + ": not a decimal integer: \"" + s + "\"");
        }
    }
    if (j.is_number_integer() || j.is_number_unsigned())
        return Int(j.dump(), 10);
    throw ParseError(std::string(what) + ": expected a decimal string or integer");
}

json period_to_json(const Int& period) {
    if (period.fits_slong_p()) return json(period.get_si());
    return json(period.get_str());
}

} // namespace

const char* to_string(EndoInput::Kind k) {
    switch (k) {
        case EndoInput::Kind::Polynomial: return "polynomial";
        case EndoInput::Kind::RationalMatrix: return "rational";
        case EndoInput::Kind::GaussianMatrix: return "gaussian";
    }
    throw InternalError("unknown input kind");
}

nlohmann::json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("polynomial: expected a non-empty coefficient array");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(int_from_json(e, "coefficient"));
    return IntPoly(std::move(c));
}

nlohmann::json split_to_json(const SpectralSplit& s) {
    json cyc = json::object();
    for (const auto& [k, mult] : s.cyclotomic_factors)
        cyc[std::to_string(k)] = mult;
    return json{{"zero_multiplicity", s.zero_multiplicity},
                {"cyclotomic", cyc},
                {"wild", poly_to_json(s.wild)},
                {"unit_circle_distinct", s.unit_circle_distinct}};
}

nlohmann::json classification_to_json(const GrowthClassification& g, bool formal_input) {
    return json{{"kind", to_string(g.kind)},
                {"period", period_to_json(g.period)},
                {"forbidden_residues", g.forbidden_residues},
                {"entropy", json{{"log_value", g.entropy.log_value},
                                 {"error_bound", g.entropy.error_bound}}},
                {"formal_input", formal_input},
                {"non_simple_implied", g.non_simple_implied}};
}

nlohmann::json ergodicity_to_json(const ErgodicityReport& r) {
    return json{{"no_root_of_unity_eigenvalues", r.no_root_of_unity_eigenvalues},
                {"is_automorphism", r.is_automorphism},
                {"ergodic_automorphism", r.ergodic_automorphism},
                {"unit_circle_distinct", r.unit_circle_distinct},
                {"self_reciprocal_factor", poly_to_json(r.self_reciprocal_factor)},
                {"factor_constant_term_one", r.factor_constant_term_one},
                {"factor_palindromic_even_degree", r.factor_palindromic_even_degree}};
}

nlohmann::json fix_sequence_to_json(const FixSequence& seq) {
    json rows = json::array();
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        rows.push_back(json{{"n", i + 1},
                            {"F", seq.values[i].get_str()},
                            {"periodic_factor", seq.periodic_factor[i].get_str()},
                            {"wild_factor", seq.wild_factor[i].get_str()}});
    }
    return json{{"chi_r", poly_to_json(seq.chi_r)},
                {"formal", seq.formal},
                {"period", period_to_json(seq.period)},
                {"rows", rows}};
}

std::string fix_sequence_to_csv(const FixSequence& seq) {
    std::string out = "n,F,periodic_factor,wild_factor\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += seq.values[i].get_str();
        out += ',';
        out += seq.periodic_factor[i].get_str();
        out += ',';
        out += seq.wild_factor[i].get_str();
        out += '\n';
    }
    return out;
}

namespace {

IntMatrix rational_matrix_from_json(const json& entries) {
    if (!entries.is_array() || entries.empty())
        throw ParseError("rational matrix: expected a non-empty array of rows");
    const std::size_t n = entries.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("rational matrix: row " + std::to_string(i) + " is not length " +
                             std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = int_from_json(row[j], "matrix entry");
    }
    return m;
}

GaussianMatrix gaussian_matrix_from_json(const json& entries) {
    if (!entries.is_array() || entries.empty())
        throw ParseError("gaussian matrix: expected a non-empty array of rows");
    const std::size_t n = entries.size();
    GaussianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("gaussian matrix: row " + std::to_string(i) + " is not length " +
                             std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = row[j];
            if (!e.is_array() || e.size() != 2)
                throw ParseError("gaussian matrix: entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not an [re, im] pair");
            m.at(i, j) = GaussInt(int_from_json(e[0], "entry real part"),
                                  int_from_json(e[1], "entry imaginary part"));
        }
    }
    return m;
}

} // namespace

EndoInput parse_endo_input(const nlohmann::json& j, bool require_monic) {
    EndoInput in;
    if (j.is_array()) {
        in.kind = EndoInput::Kind::Polynomial;
        in.chi_r = poly_from_json(j);
    } else if (j.is_object()) {
        const auto kind_it = j.find("kind");
        if (kind_it == j.end() || !kind_it->is_string())
            throw ParseError("input: missing string field \"kind\"");
        const std::string kind = kind_it->get<std::string>();
        if (kind == "polynomial") {
            if (!j.contains("coeffs")) throw ParseError("polynomial input: missing \"coeffs\"");
            in.kind = EndoInput::Kind::Polynomial;
            in.chi_r = poly_from_json(j.at("coeffs"));
        } else if (kind == "rational") {
            if (!j.contains("entries")) throw ParseError("rational input: missing \"entries\"");
            in.kind = EndoInput::Kind::RationalMatrix;
            in.chi_r = charpoly(rational_matrix_from_json(j.at("entries")));
        } else if (kind == "gaussian") {
            if (!j.contains("entries")) throw ParseError("gaussian input: missing \"entries\"");
            in.kind = EndoInput::Kind::GaussianMatrix;
            const GaussianMatrix m = gaussian_matrix_from_json(j.at("entries"));
            in.chi_a = charpoly(m);
            in.chi_r = norm_poly(*in.chi_a);
            if (m.dim() <= 16) {
                // Independent route through the doubled real matrix; cheap
                // at these sizes and a strong pipeline self-check.
                if (!(charpoly(realify(m)) == in.chi_r))
                    throw InternalError("doubled-matrix characteristic polynomial disagrees");
            }
        } else {
            throw ParseError("input: unknown kind \"" + kind + "\"");
        }
    } else {
        throw ParseError("input: expected a JSON object or coefficient array");
    }
    if (in.chi_r.is_zero()) throw DomainError("input has zero characteristic polynomial");
    if (require_monic && !in.chi_r.is_monic())
        throw DomainError("input polynomial must be monic (pass --no-monic-check to skip this gate)");
    return in;
}

EndoInput parse_endo_input(const std::string& json_text, bool require_monic) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
    return parse_endo_input(j, require_monic);
}

} // namespace torfix
