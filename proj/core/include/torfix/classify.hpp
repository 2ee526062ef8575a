#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torfix/mahler.hpp"
#include "torfix/spectral.hpp"

namespace torfix {

enum class GrowthKind { Exponential, Periodic, Mixed };

const char* to_string(GrowthKind k);

// Growth trichotomy of the fixed-point sequence of a monic degree-2g
// characteristic polynomial, decided purely by which parts of the
// cyclotomic/wild split are nontrivial:
//   Periodic     wild part constant (roots-of-unity spectrum only),
//   Exponential  no cyclotomic factor and a nonconstant wild part,
//   Mixed        both parts nontrivial; F(n) then vanishes exactly on the
//                residue classes n = 0 mod k for the orders k present, and
//                the torus cannot be simple.
struct GrowthClassification {
    GrowthKind kind = GrowthKind::Periodic;
    SpectralSplit split;
    Int period{1}; // lcm of cyclotomic orders; 1 for Exponential
    std::vector<unsigned long> forbidden_residues; // Mixed only, sorted
    MahlerEstimate entropy; // of the wild part == of the whole polynomial
    bool non_simple_implied = false;
};

GrowthClassification classify(const IntPoly& chi_r, unsigned precision_bits = 128);

struct PeriodicProfile {
    Int period{1};
    std::vector<Int> table; // |Delta_n| of the cyclotomic part, n = 1..period
};

// Tabulates one full period of the periodic factor. The period is the lcm
// of the orders and can be astronomically large at modest degree (distinct
// prime orders up to 47 already push it past 10^17), so tabulation is
// guarded at period <= 2^20; beyond that a DomainError reports the period.
PeriodicProfile periodic_profile(const std::map<unsigned long, unsigned>& orders);

// The h(n) normalization for Mixed growth: F(n) where it is nonzero, and
// the wild factor alone on the vanishing residues, so the sandwich bounds
// apply to every n. Requires a genuinely mixed split.
Int h_function(const SpectralSplit& split, unsigned long n);

struct ErgodicityReport {
    // True when no eigenvalue is a root of unity: together with
    // invertibility this is exactly ergodicity of the induced automorphism.
    bool no_root_of_unity_eigenvalues = false;
    bool is_automorphism = false; // |chi(0)| = 1
    bool ergodic_automorphism = false;
    // Unimodular non-root-of-unity eigenvalues and their carrier: the
    // self-reciprocal factor of the wild part (palindromic, of even degree,
    // with constant term 1 whenever it is nontrivial).
    unsigned long unit_circle_distinct = 0;
    IntPoly self_reciprocal_factor;
    bool factor_constant_term_one = false;
    bool factor_palindromic_even_degree = false;
};

ErgodicityReport ergodicity_report(const IntPoly& chi_r);

// Smallest N <= n_hi such that n*(m - eps) <= log F(n) <= n*(m + eps) for
// every n in [N, n_hi], where m is the logarithmic Mahler measure of chi_r;
// nullopt when even n_hi itself violates the bounds. Requires an
// Exponential polynomial (no cyclotomic factor), so F(n) > 0 throughout.
std::optional<unsigned long> exponential_onset(const IntPoly& chi_r, double eps,
                                               unsigned long n_hi,
                                               unsigned precision_bits = 128);

} // namespace torfix
