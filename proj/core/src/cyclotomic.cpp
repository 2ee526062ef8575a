#include "torfix/cyclotomic.hpp"

#include "torfix/poly_gcd.hpp"

namespace torfix {

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long k) {
    if (k == 0) throw DomainError("factorize(0)");
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
        if (k % p) continue;
        unsigned e = 0;
        while (k % p == 0) { k /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (k > 1) out.emplace_back(k, 1);
    return out;
}

unsigned long euler_phi(unsigned long k) {
    if (k == 0) throw DomainError("euler_phi(0)");
    unsigned long phi = 1;
    for (const auto& [p, e] : factorize(k)) {
        unsigned long pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

std::vector<unsigned long> inverse_totient_bound(unsigned long d) {
    if (d == 0) throw DomainError("inverse totient of 0");
    std::vector<unsigned long> out;
    for (unsigned long k = 1; k <= 2 * d * d; ++k)
        if (euler_phi(k) <= d) out.push_back(k);
    return out;
}

IntPoly cyclotomic(unsigned long k) {
    if (k == 0) throw DomainError("cyclotomic index must be >= 1");
    // Squarefree divisors d of k, split by the sign of mu(d). Build d by
    // including or excluding each distinct prime.
    std::vector<std::pair<unsigned long, unsigned>> fac = factorize(k);
    std::vector<unsigned long> plus, minus; // exponents k/d by mu sign
    const std::size_t np = fac.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << np); ++mask) {
        unsigned long d = 1;
        unsigned bits = 0;
        for (std::size_t i = 0; i < np; ++i)
            if (mask & (std::size_t{1} << i)) { d *= fac[i].first; ++bits; }
        (bits % 2 == 0 ? plus : minus).push_back(k / d);
    }
    IntPoly num{1};
    for (unsigned long m : plus) num = num * IntPoly::power_minus_one(m);
    for (unsigned long m : minus) {
        auto q = exact_divide(num, IntPoly::power_minus_one(m));
        if (!q) throw InternalError("inexact division in cyclotomic product");
        num = std::move(*q);
    }
    return num;
}

} // namespace torfix
