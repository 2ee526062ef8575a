#pragma once

#include <optional>
#include <vector>

#include "torfix/int_poly.hpp"

namespace torfix {

// The degree-2g family member: all coefficients 1, except that 3 is
// subtracted at t^1 and at t^(2g-1). Reciprocal-symmetric by construction.
IntPoly family_poly(unsigned g);

struct FamilyRow {
    unsigned g = 0;
    bool cyclotomic_free = false;
    unsigned long unit_circle_distinct = 0;
    std::optional<unsigned long> witness_prime; // nullopt = inconclusive
    double mahler_log = 0.0;
    double mahler_error = 0.0;
};

FamilyRow scan_family_row(unsigned g, unsigned prime_budget, unsigned precision_bits);

// Rows for g_min..g_max computed on `jobs` worker threads; results are
// aggregated by ascending g, so the output is identical for any job count.
std::vector<FamilyRow> scan_family(unsigned g_min, unsigned g_max, unsigned prime_budget,
                                   unsigned precision_bits, unsigned jobs);

} // namespace torfix
