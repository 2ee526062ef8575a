#pragma once

#include <vector>

#include "torfix/int_poly.hpp"

namespace torfix {

// Prime factorization of k >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long k);

unsigned long euler_phi(unsigned long k);

// All k with euler_phi(k) <= d, ascending. Complete: phi(k) >= sqrt(k/2)
// for every k, so nothing beyond 2*d^2 can qualify.
std::vector<unsigned long> inverse_totient_bound(unsigned long d);

// k-th cyclotomic polynomial via the Moebius product
// Phi_k = prod_{d | k} (t^(k/d) - 1)^mu(d); every division is exact in Z[t].
// Computed fresh on each call; callers cache per split, which keeps the
// function pure and the library state-free under threads.
IntPoly cyclotomic(unsigned long k);

} // namespace torfix
