#include "torfix/spectral.hpp"

#include <cstdint>

#include "torfix/cyclotomic.hpp"
#include "torfix/poly_gcd.hpp"
#include "torfix/sturm.hpp"

namespace torfix {

namespace {

// ---- dense polynomials over F_p, p < 2^31, used only by the mod-p
// irreducibility witness. Coefficients reduced to [0, p).

using FpPoly = std::vector<std::uint64_t>;

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_from_int_poly(const IntPoly& q, std::uint64_t p) {
    FpPoly a(q.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int r = q.coeff(i) % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        a[i] = r.get_ui();
    }
    fp_normalize(a);
    return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_normalize(r);
    return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    // Fermat: a^(p-2), p prime.
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// a mod b, b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const std::uint64_t inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t f = a.back() * inv % p;
        const std::size_t off = a.size() - b.size();
        if (f) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = f * b[j] % p;
                a[off + j] = (a[off + j] + p - sub) % p;
            }
        }
        a.pop_back();
        fp_normalize(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
    FpPoly d;
    if (a.size() <= 1) return d;
    d.resize(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = a[k] * (k % p) % p;
    fp_normalize(d);
    return d;
}

// base^e mod f.
FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
    FpPoly r{1};
    base = fp_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = fp_rem(fp_mul(r, base, p), f, p);
        e >>= 1;
        if (e) base = fp_rem(fp_mul(base, base, p), f, p);
    }
    return r;
}

// Distinct-degree sieve: monic squarefree f of degree d >= 2 is irreducible
// over F_p iff gcd(x^(p^i) - x, f) = 1 for i = 1..d/2 (any proper factor
// would have degree at most d/2 and show up at its degree).
bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    FpPoly dv = fp_derivative(f, p);
    if (dv.empty()) return false; // f is a p-th power
    if (fp_gcd(f, dv, p).size() != 1) return false; // repeated factor
    FpPoly h{0, 1}; // x
    for (std::size_t i = 1; i <= d / 2; ++i) {
        h = fp_powmod(std::move(h), p, f, p);
        FpPoly diff = h;
        if (diff.empty()) diff.resize(1, 0);
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p; // h - x
        fp_normalize(diff);
        if (diff.empty()) return false; // x^(p^i) = x splits f completely
        if (fp_gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

unsigned long next_prime(unsigned long p) {
    auto is_prime = [](unsigned long n) {
        if (n < 2) return false;
        for (unsigned long q = 2; q * q <= n; ++q)
            if (n % q == 0) return false;
        return true;
    };
    do { ++p; } while (!is_prime(p));
    return p;
}

} // namespace

SpectralSplit cyclotomic_split(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("cannot split the zero polynomial");
    if (!p.is_monic()) throw DomainError("cyclotomic split requires a monic polynomial");
    SpectralSplit s;
    s.input = p;
    auto [stripped, zmult] = p.strip_zero_roots();
    s.zero_multiplicity = zmult;
    s.wild = std::move(stripped);
    if (s.wild.degree() > 0) {
        const unsigned long d0 = static_cast<unsigned long>(s.wild.degree());
        for (unsigned long k : inverse_totient_bound(d0)) {
            if (static_cast<long>(euler_phi(k)) > s.wild.degree()) continue;
            const IntPoly phi = cyclotomic(k);
            while (true) {
                auto q = exact_divide(s.wild, phi);
                if (!q) break;
                s.wild = std::move(*q);
                ++s.cyclotomic_factors[k];
            }
        }
    }
    if (s.wild.degree() > 0) {
        UnitCircleCount ucc = unit_circle_count(s.wild);
        s.unit_circle_distinct = ucc.distinct;
        s.self_reciprocal_factor = std::move(ucc.self_reciprocal_factor);
    } else {
        s.self_reciprocal_factor = IntPoly{1};
    }
    return s;
}

bool split_recomposes(const SpectralSplit& s) {
    IntPoly prod = s.wild.mul_power(s.zero_multiplicity);
    for (const auto& [k, mult] : s.cyclotomic_factors) {
        const IntPoly phi = cyclotomic(k);
        for (unsigned i = 0; i < mult; ++i) prod = prod * phi;
    }
    return prod == s.input;
}

IntPoly chebyshev_transform(const IntPoly& s) {
    if (s.is_zero() || s.coeff(0) == 0)
        throw DomainError("transform requires a nonzero constant term");
    if (s.degree() % 2 != 0) throw DomainError("transform requires even degree");
    if (!(s == s.reciprocal())) throw DomainError("transform requires a palindromic polynomial");
    const std::size_t e = static_cast<std::size_t>(s.degree()) / 2;
    // t^-e s(t) = c_e + sum_{j>=1} c_{e+j} (t^j + t^-j) and t^j + t^-j is
    // the j-th "doubled Chebyshev" V_j in x = t + 1/t:
    //   V_0 = 2, V_1 = x, V_{j+1} = x V_j - V_{j-1}.
    IntPoly out = IntPoly::constant(s.coeff(e));
    IntPoly vprev{2};
    IntPoly v{0, 1};
    const IntPoly x{0, 1};
    for (std::size_t j = 1; j <= e; ++j) {
        out = out + IntPoly::constant(s.coeff(e + j)) * v;
        IntPoly vnext = x * v - vprev;
        vprev = std::move(v);
        v = std::move(vnext);
    }
    return out;
}

UnitCircleCount unit_circle_count(const IntPoly& q) {
    if (q.is_zero() || !q.is_monic())
        throw DomainError("unit circle count requires a monic polynomial");
    if (q.coeff(0) == 0) throw DomainError("unit circle count requires q(0) != 0");
    if (q.eval(Int(1)) == 0 || q.eval(Int(-1)) == 0)
        throw DomainError("unit circle count requires q(1), q(-1) != 0 (strip cyclotomic factors first)");
    UnitCircleCount out;
    if (q.degree() == 0) {
        out.self_reciprocal_factor = IntPoly{1};
        return out;
    }
    IntPoly s = gcd_primitive(q, q.reciprocal());
    if (s.is_constant()) {
        out.self_reciprocal_factor = IntPoly{1};
        return out;
    }
    // s inherits the inversion-closed root multiset of q, so it is monic
    // (Gauss: it divides monic q) and +- palindromic; with +-1 excluded the
    // anti-palindromic branch is impossible.
    if (!s.is_monic()) throw InternalError("self-reciprocal gcd came out non-monic");
    if (s == -s.reciprocal()) throw InternalError("anti-palindromic self-reciprocal factor");
    if (!(s == s.reciprocal())) throw InternalError("self-reciprocal gcd is not palindromic");
    IntPoly w = squarefree_part(s);
    IntPoly transformed = chebyshev_transform(w).primitive_part();
    // Roots of w on the circle pair up (alpha, conj alpha = 1/alpha) and land
    // on distinct points x = 2*Re(alpha) strictly inside (-2, 2).
    const unsigned long pairs =
        sturm_real_root_count(transformed, Rat(-2), Rat(2), /*open=*/true);
    out.distinct = 2 * pairs;
    out.self_reciprocal_factor = std::move(s);
    return out;
}

std::optional<unsigned long> irreducible_mod_p_witness(const IntPoly& p, unsigned prime_budget) {
    if (p.degree() < 1) throw DomainError("irreducibility is asked of degree >= 1");
    unsigned long q = 1;
    for (unsigned tried = 0; tried < prime_budget; ++tried) {
        q = next_prime(q);
        if (p.lc() % static_cast<long>(q) == 0) continue; // degree would drop mod q
        FpPoly f = fp_from_int_poly(p, q);
        const std::uint64_t inv = fp_inv(f.back(), q);
        if (inv != 1)
            for (auto& c : f) c = c * inv % q;
        if (fp_irreducible(f, q)) return q;
    }
    return std::nullopt;
}

} // namespace torfix
