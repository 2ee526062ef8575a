#include "torfix/fixpoints.hpp"

#include <numeric>

#include "torfix/cyclotomic.hpp"
#include "torfix/matrix.hpp"
#include "torfix/poly_gcd.hpp"
#include "torfix/spectral.hpp"

namespace torfix {

namespace {

void require_monic(const IntPoly& q, const char* who) {
    if (q.is_zero() || !q.is_monic())
        throw DomainError(std::string(who) + " requires a monic polynomial");
}

// (a * b) mod q, q monic.
IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& q) {
    auto full = a * b;
    if (full.degree() < q.degree()) return full;
    // Monic reduction: repeatedly cancel the leading term.
    std::vector<Int> r = full.coeffs();
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    for (std::size_t k = r.size(); k-- > dq;) {
        Int top = std::move(r[k]);
        if (top == 0) continue;
        for (std::size_t j = 0; j < dq; ++j)
            r[k - dq + j] -= top * q.coeff(j);
        r[k] = 0;
    }
    r.resize(dq);
    return IntPoly(std::move(r));
}

} // namespace

IntPoly power_mod(unsigned long n, const IntPoly& q) {
    require_monic(q, "power_mod");
    if (q.degree() == 0) return IntPoly();
    IntPoly result{1};
    IntPoly base{0, 1}; // t
    if (base.degree() >= q.degree()) base = mulmod(base, IntPoly{1}, q);
    while (n) {
        if (n & 1) result = mulmod(result, base, q);
        n >>= 1;
        if (n) base = mulmod(base, base, q);
    }
    return result;
}

Int delta_n_resultant(const IntPoly& q, unsigned long n) {
    require_monic(q, "delta_n");
    if (n == 0) throw DomainError("delta_n requires n >= 1");
    if (q.degree() == 0) return Int(1); // empty root product
    const unsigned long d = static_cast<unsigned long>(q.degree());
    if (n <= 4 * d || n <= 64) {
        return resultant(q, IntPoly::power_minus_one(n));
    }
    // Res(q, t^n - 1) = prod (alpha^n - 1) for monic q, and the second
    // argument only enters through its values at the roots of q, so it can
    // be reduced mod q first.
    IntPoly reduced = power_mod(n, q) - IntPoly{1};
    if (reduced.is_zero()) return Int(0);
    return resultant(q, reduced);
}

Int delta_n_companion(const IntPoly& q, unsigned long n) {
    require_monic(q, "delta_n");
    if (n == 0) throw DomainError("delta_n requires n >= 1");
    if (q.degree() == 0) return Int(1);
    const IntMatrix c = companion(q);
    return (c.pow(n) - IntMatrix::identity(c.dim())).det();
}

Int delta_n(const IntPoly& q, unsigned long n, DeltaEngine engine) {
    switch (engine) {
        case DeltaEngine::Resultant: return delta_n_resultant(q, n);
        case DeltaEngine::Companion: return delta_n_companion(q, n);
        case DeltaEngine::Auto: break;
    }
    // The resultant route wins while t^n - 1 stays small; the companion
    // route's entry growth is gentler once n is far beyond the degree.
    if (q.degree() >= 1 && n > 512 &&
        n > 64 * static_cast<unsigned long>(q.degree()))
        return delta_n_companion(q, n);
    return delta_n_resultant(q, n);
}

Int delta_n_cyclotomic(unsigned long k, unsigned long n) {
    if (k == 0 || n == 0) throw DomainError("delta_n_cyclotomic needs k, n >= 1");
    if (k == 1) return Int(0);
    if (k == 2) return (n % 2 == 0) ? Int(0) : Int(-2);
    const unsigned long g = std::gcd(n, k);
    const unsigned long kp = k / g;
    if (kp == 1) return Int(0);
    // Phi_{kp}(1): p for a prime power p^e, 1 otherwise.
    const auto fac = factorize(kp);
    Int base = (fac.size() == 1) ? Int(static_cast<long>(fac[0].first)) : Int(1);
    const unsigned long e = euler_phi(k) / euler_phi(kp);
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r; // sign (+1): phi(k) is even for k >= 3
}

FixCount fix_count(const IntPoly& chi_r, unsigned long n, bool conjugate_closed,
                   DeltaEngine engine) {
    require_monic(chi_r, "fix_count");
    Int d = delta_n(chi_r, n, engine);
    if (conjugate_closed && d < 0)
        throw DomainError("negative Delta_n contradicts a conjugate-closed spectrum");
    return {abs(d), !conjugate_closed};
}

FixSequence fix_sequence(const IntPoly& chi_r, unsigned long n_max, bool conjugate_closed) {
    require_monic(chi_r, "fix_sequence");
    if (n_max == 0) throw DomainError("fix_sequence requires n_max >= 1");
    SpectralSplit split = cyclotomic_split(chi_r);

    FixSequence seq;
    seq.chi_r = chi_r;
    seq.formal = !conjugate_closed;

    for (const auto& [k, mult] : split.cyclotomic_factors) {
        (void)mult;
        Int kk(k);
        mpz_lcm(seq.period.get_mpz_t(), seq.period.get_mpz_t(), kk.get_mpz_t());
    }

    seq.values.reserve(n_max);
    seq.periodic_factor.reserve(n_max);
    seq.wild_factor.reserve(n_max);
    for (unsigned long n = 1; n <= n_max; ++n) {
        Int full = fix_count(chi_r, n, conjugate_closed).value;
        Int pf(1);
        for (const auto& [k, mult] : split.cyclotomic_factors) {
            Int d = abs(delta_n_cyclotomic(k, n));
            for (unsigned i = 0; i < mult; ++i) pf *= d;
        }
        Int wf = split.wild.degree() > 0 ? abs(delta_n(split.wild, n)) : Int(1);
        if (pf * wf != full)
            throw InternalError("factorized fixed-point count disagrees with the direct one");
        seq.values.push_back(std::move(full));
        seq.periodic_factor.push_back(std::move(pf));
        seq.wild_factor.push_back(std::move(wf));
    }
    return seq;
}

} // namespace torfix
