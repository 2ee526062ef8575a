#include "torfix/classify.hpp"

#include "torfix/fixpoints.hpp"

namespace torfix {

const char* to_string(GrowthKind k) {
    switch (k) {
        case GrowthKind::Exponential: return "Exponential";
        case GrowthKind::Periodic: return "Periodic";
        case GrowthKind::Mixed: return "Mixed";
    }
    throw InternalError("unknown growth kind");
}

GrowthClassification classify(const IntPoly& chi_r, unsigned precision_bits) {
    if (chi_r.degree() < 1)
        throw DomainError("classification needs a nonconstant polynomial");
    GrowthClassification g;
    g.split = cyclotomic_split(chi_r);

    const bool wild_nontrivial = g.split.wild.degree() > 0;
    const bool has_cyclotomic = !g.split.cyclotomic_factors.empty();
    if (!wild_nontrivial)
        g.kind = GrowthKind::Periodic;
    else if (has_cyclotomic)
        g.kind = GrowthKind::Mixed;
    else
        g.kind = GrowthKind::Exponential;

    for (const auto& [k, mult] : g.split.cyclotomic_factors) {
        (void)mult;
        Int kk(k);
        mpz_lcm(g.period.get_mpz_t(), g.period.get_mpz_t(), kk.get_mpz_t());
        if (g.kind == GrowthKind::Mixed) g.forbidden_residues.push_back(k);
    }

    g.entropy = mahler_measure(g.split.wild, precision_bits);
    if (!wild_nontrivial && g.entropy.log_value != 0.0)
        throw InternalError("constant wild part must have entropy exactly 0");
    g.non_simple_implied = (g.kind == GrowthKind::Mixed);
    return g;
}

PeriodicProfile periodic_profile(const std::map<unsigned long, unsigned>& orders) {
    PeriodicProfile prof;
    for (const auto& [k, mult] : orders) {
        if (k == 0 || mult == 0) throw DomainError("orders must map k >= 1 to multiplicity >= 1");
        Int kk(k);
        mpz_lcm(prof.period.get_mpz_t(), prof.period.get_mpz_t(), kk.get_mpz_t());
    }
    if (prof.period > (1L << 20))
        throw DomainError("periodic factor has period " + prof.period.get_str() +
                          ", beyond the 2^20 tabulation guard");
    const unsigned long period = prof.period.get_ui();
    prof.table.reserve(period);
    for (unsigned long n = 1; n <= period; ++n) {
        Int v(1);
        for (const auto& [k, mult] : orders) {
            Int d = abs(delta_n_cyclotomic(k, n));
            for (unsigned i = 0; i < mult; ++i) v *= d;
        }
        prof.table.push_back(std::move(v));
    }
    return prof;
}

Int h_function(const SpectralSplit& split, unsigned long n) {
    if (n == 0) throw DomainError("h(n) needs n >= 1");
    if (split.cyclotomic_factors.empty() || split.wild.degree() == 0)
        throw DomainError("h(n) is defined for mixed growth only");
    Int pf(1);
    for (const auto& [k, mult] : split.cyclotomic_factors) {
        Int d = abs(delta_n_cyclotomic(k, n));
        for (unsigned i = 0; i < mult; ++i) pf *= d;
    }
    Int wf = abs(delta_n(split.wild, n));
    return pf == 0 ? wf : pf * wf;
}

ErgodicityReport ergodicity_report(const IntPoly& chi_r) {
    if (chi_r.degree() < 1)
        throw DomainError("ergodicity report needs a nonconstant polynomial");
    SpectralSplit split = cyclotomic_split(chi_r);
    ErgodicityReport rep;
    rep.no_root_of_unity_eigenvalues = split.cyclotomic_factors.empty();
    rep.is_automorphism = (abs(chi_r.coeff(0)) == 1);
    rep.ergodic_automorphism = rep.is_automorphism && rep.no_root_of_unity_eigenvalues;
    rep.unit_circle_distinct = split.unit_circle_distinct;
    rep.self_reciprocal_factor = split.self_reciprocal_factor;
    const IntPoly& s = rep.self_reciprocal_factor;
    rep.factor_constant_term_one = (s.coeff(0) == 1);
    rep.factor_palindromic_even_degree =
        !s.is_zero() && s.degree() % 2 == 0 && s == s.reciprocal();
    return rep;
}

std::optional<unsigned long> exponential_onset(const IntPoly& chi_r, double eps,
                                               unsigned long n_hi, unsigned precision_bits) {
    if (eps <= 0.0) throw DomainError("onset needs eps > 0");
    if (n_hi == 0) throw DomainError("onset needs n_hi >= 1");
    GrowthClassification g = classify(chi_r, precision_bits);
    if (g.kind != GrowthKind::Exponential)
        throw DomainError("onset is defined for Exponential growth only");
    const double m = g.entropy.log_value;
    // Scan downward; the onset is one past the last violation.
    unsigned long onset = 1;
    for (unsigned long n = n_hi; n >= 1; --n) {
        const Int f = fix_count(chi_r, n, /*conjugate_closed=*/false).value;
        if (f == 0) throw InternalError("F(n) = 0 without cyclotomic factors");
        const double lf = log_abs(f);
        const double nn = static_cast<double>(n);
        if (lf < nn * (m - eps) || lf > nn * (m + eps)) {
            if (n == n_hi) return std::nullopt;
            onset = n + 1;
            break;
        }
        if (n == 1) return 1;
    }
    return onset;
}

} // namespace torfix
