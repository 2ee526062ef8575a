#pragma once

#include <map>
#include <optional>

#include "torfix/int_poly.hpp"

namespace torfix {

// Result of splitting a monic p as t^m * (product of cyclotomics) * wild,
// where the wild part is monic with no cyclotomic factor and nonzero
// constant term.
struct SpectralSplit {
    IntPoly input;
    std::size_t zero_multiplicity = 0;
    // order k -> multiplicity of Phi_k
    std::map<unsigned long, unsigned> cyclotomic_factors;
    IntPoly wild;
    // Distinct roots of the wild part on |z| = 1 (necessarily even) and the
    // self-reciprocal factor gcd(wild, reciprocal(wild)) that carries them.
    unsigned long unit_circle_distinct = 0;
    IntPoly self_reciprocal_factor;
};

SpectralSplit cyclotomic_split(const IntPoly& p);

// Recomposes the split and compares against the input; used as a test
// invariant and cheap enough to run anywhere.
bool split_recomposes(const SpectralSplit& s);

struct UnitCircleCount {
    unsigned long distinct = 0;
    IntPoly self_reciprocal_factor;
};

// Exact count of distinct roots on the unit circle for monic q with
// q(0) != 0, q(1) != 0, q(-1) != 0 (no Phi_1/Phi_2 factor; intended to run
// on the wild part of a split). Roots come in pairs alpha, 1/alpha, so the
// count is even.
UnitCircleCount unit_circle_count(const IntPoly& q);

// For palindromic s of even degree 2e with s(0) != 0: the unique T with
// s(t) = t^e * T(t + 1/t), deg T = e. Roots of s on the unit circle
// correspond to roots of T in the real interval (-2, 2).
IntPoly chebyshev_transform(const IntPoly& s);

// Tries the first `prime_budget` primes p (skipping those dividing lc or
// disc-degenerate cases) looking for one where p mod p stays squarefree and
// irreducible; such a prime certifies irreducibility over Q. Returns the
// witness prime, or nullopt if the budget is exhausted (inconclusive: the
// polynomial may still be irreducible).
std::optional<unsigned long> irreducible_mod_p_witness(const IntPoly& p,
                                                       unsigned prime_budget);

} // namespace torfix
