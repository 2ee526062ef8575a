#pragma once

#include <map>
#include <vector>

#include "torfix/int_poly.hpp"

namespace torfix {

enum class DeltaEngine { Auto, Resultant, Companion };

// Delta_n(q) = prod over roots alpha of q (with multiplicity) of
// (alpha^n - 1), exact, for monic q. The two engines are algorithmically
// independent and cross-checked in the tests:
//  - Resultant: Res(q, t^n - 1) by subresultant PRS; for large n the second
//    argument is first reduced to (t^n - 1) mod q by binary exponentiation,
//    which changes nothing because q is monic.
//  - Companion: det(C_q^n - I) with a fraction-free Bareiss determinant.
// Auto picks Resultant for small n and Companion beyond.
Int delta_n(const IntPoly& q, unsigned long n, DeltaEngine engine = DeltaEngine::Auto);
Int delta_n_resultant(const IntPoly& q, unsigned long n);
Int delta_n_companion(const IntPoly& q, unsigned long n);

// Delta_n of the k-th cyclotomic polynomial in closed form: with
// k' = k / gcd(n, k), the n-th powers of the primitive k-th roots of unity
// run phi(k)/phi(k') times over the primitive k'-th roots, so the product
// of (root^n - 1) is Phi_{k'}(1)^(phi(k)/phi(k')) up to the sign (-1)^phi(k),
// and Phi_m(1) is 0 for m = 1, p for m = p^e, 1 otherwise.
Int delta_n_cyclotomic(unsigned long k, unsigned long n);

// t^n mod q for monic q, n >= 0 (exact integer coefficients).
IntPoly power_mod(unsigned long n, const IntPoly& q);

struct FixCount {
    Int value;   // |Delta_n|
    bool formal; // input not certified conjugate-closed, count is formal
};

// Fixed-point count of the n-th iterate for a degree-2g monic chi. When the
// caller certifies chi as conjugate-closed (a genuine chi * conj-chi), a
// negative Delta_n is impossible and raises DomainError; otherwise the
// absolute value is returned and flagged formal.
FixCount fix_count(const IntPoly& chi_r, unsigned long n, bool conjugate_closed,
                   DeltaEngine engine = DeltaEngine::Auto);

struct FixSequence {
    IntPoly chi_r;
    bool formal = false;
    Int period{1}; // lcm of the cyclotomic orders present
    // Row n (1-based): F(n) together with its split into the periodic factor
    // |Delta_n(cyclotomic part)| and the wild factor |Delta_n(wild part)|,
    // so values[i] = periodic_factor[i] * wild_factor[i] holds rowwise.
    std::vector<Int> values;
    std::vector<Int> periodic_factor;
    std::vector<Int> wild_factor;
};

// F(n) for n = 1..n_max with the factorization columns; every row is
// recomputed through the full polynomial AND through the two factors, and
// the product identity is verified (InternalError on mismatch).
FixSequence fix_sequence(const IntPoly& chi_r, unsigned long n_max, bool conjugate_closed);

} // namespace torfix
