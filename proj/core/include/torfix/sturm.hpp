#pragma once

#include <vector>

#include "torfix/int_poly.hpp"

namespace torfix {

// Sturm chain of a squarefree p: p, p', then sign-corrected primitive
// pseudo-remainders down to a nonzero constant. Exposed for tests.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Sign variations of the chain evaluated at x, zeros skipped.
unsigned long sturm_variations(const std::vector<IntPoly>& chain, const Rat& x);

// Number of distinct real roots of squarefree p in the interval from lo to
// hi (open or closed at both ends). Roots sitting exactly on an endpoint are
// deflated out first, so the count is exact in every case. Throws
// DomainError if p is zero, not squarefree, or lo >= hi.
unsigned long sturm_real_root_count(const IntPoly& p, const Rat& lo, const Rat& hi,
                                    bool open_interval);

} // namespace torfix
