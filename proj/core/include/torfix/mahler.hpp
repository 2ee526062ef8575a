#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torfix/fixpoints.hpp"
#include "torfix/int_poly.hpp"

namespace torfix {

struct MahlerEstimate {
    double log_value = 0.0;   // log M(q) = sum of log max(1, |root|) + log|lc|
    double error_bound = 0.0; // rigorous bound on |log_value - true value|
    std::string method;       // "exact-cyclotomic" or "aberth-<bits>bit"
};

// Logarithmic Mahler measure of a nonzero integer polynomial, exact 0 for
// products of cyclotomics (and t-powers and units), otherwise via
// simultaneous root refinement on the squarefree layers at the requested
// precision. error_bound comes from a-posteriori Newton residuals with
// pairwise-disjoint inclusion discs, so it is a certified enclosure.
MahlerEstimate mahler_measure(const IntPoly& q, unsigned precision_bits = 128);

// log|Delta_n(q)| / n at the given sample points; converges to the
// logarithmic Mahler measure when no root of q sits on a root of unity.
// Requires monic q with no cyclotomic factor (checked; DomainError names
// the offending Phi_k).
std::vector<std::pair<unsigned long, double>>
mahler_convergence_table(const IntPoly& q, const std::vector<unsigned long>& sample_points,
                         DeltaEngine engine = DeltaEngine::Auto);

// 1, 2, 4, ... up to n_max, plus n_max itself.
std::vector<unsigned long> log_spaced_points(unsigned long n_max);

// Natural log of |v| for v != 0, accurate to double rounding regardless of
// the size of v.
double log_abs(const Int& v);

struct EntropyReport {
    MahlerEstimate full;    // log M(chi_r): sum over all 2g eigenvalues
    double analytic = 0.0;  // half of it: sum over the g analytic eigenvalues
};

// Growth rate of the fixed-point counts, reported in both normalizations.
EntropyReport entropy(const IntPoly& chi_r, unsigned precision_bits = 128);

} // namespace torfix
