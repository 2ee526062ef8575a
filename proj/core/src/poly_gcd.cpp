#include "torfix/poly_gcd.hpp"

namespace torfix {

namespace {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Scalar division of every coefficient by d, which must be exact.
IntPoly divide_coeffs_exact(const IntPoly& p, const Int& d) {
    if (d == 0) throw InternalError("scalar division by zero in PRS");
    std::vector<Int> c = p.coeffs();
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            throw InternalError("inexact scalar division in PRS");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

IntPoly positive_lc(const IntPoly& p) {
    return (!p.is_zero() && p.lc() < 0) ? -p : p;
}

} // namespace

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    if (b.is_monic()) {
        // Monic divisor: plain integer long division, then a zero-remainder
        // check. This is the hot path (cyclotomic trial division).
        std::vector<Int> rem = a.coeffs();
        const long db = b.degree();
        const long dq = a.degree() - db;
        std::vector<Int> q(static_cast<std::size_t>(dq) + 1);
        for (long k = dq; k >= 0; --k) {
            Int top = rem[static_cast<std::size_t>(k + db)];
            if (top != 0)
                for (long j = 0; j <= db; ++j)
                    rem[static_cast<std::size_t>(k + j)] -= top * b.coeff(static_cast<std::size_t>(j));
            q[static_cast<std::size_t>(k)] = std::move(top);
        }
        for (long j = 0; j < db; ++j)
            if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
        return IntPoly(std::move(q));
    }
    // Long division over Q; the quotient must come out integral with zero
    // remainder. Divisions by lc(b) are tested for exactness coefficient by
    // coefficient, so non-monic divisors work too.
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const long dq = a.degree() - db;
    std::vector<Int> q(static_cast<std::size_t>(dq) + 1);
    const Int& blc = b.lc();
    for (long k = dq; k >= 0; --k) {
        Rat qk = rem[static_cast<std::size_t>(k + db)] / Rat(blc);
        if (qk.get_den() != 1) return std::nullopt;
        q[static_cast<std::size_t>(k)] = qk.get_num();
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= qk * Rat(b.coeff(static_cast<std::size_t>(j)));
    }
    for (long j = 0; j < db; ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) throw DomainError("pseudo-remainder needs deg a >= deg b");
    const long db = b.degree();
    const unsigned long delta = static_cast<unsigned long>(a.degree() - db);
    std::vector<Int> r = a.coeffs();
    const Int& blc = b.lc();
    // Scale once per elimination step; after delta+1 steps the total factor
    // applied to a is lc(b)^(delta+1) as required.
    for (long k = static_cast<long>(delta); k >= 0; --k) {
        Int top = r[static_cast<std::size_t>(k + db)];
        for (auto& x : r) x *= blc;
        for (long j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k + j)] -= top * b.coeff(static_cast<std::size_t>(j));
        if (r[static_cast<std::size_t>(k + db)] != 0)
            throw InternalError("pseudo-remainder failed to cancel leading term");
    }
    r.resize(static_cast<std::size_t>(db));
    return IntPoly(std::move(r));
}

IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    if (a.is_zero()) return positive_lc(b.primitive_part());
    if (b.is_zero()) return positive_lc(a.primitive_part());
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        if (B.is_constant()) return IntPoly{1};
        IntPoly R = pseudo_rem(A, B);
        A = std::move(B);
        B = R.primitive_part();
    }
    return positive_lc(A);
}

// Subresultant PRS after Cohen, "A Course in Computational Algebraic Number
// Theory", Algorithm 3.3.7. The running pair (g, h) divides each
// pseudo-remainder exactly, keeping growth polynomial instead of the
// exponential blowup of the naive Euclidean PRS.
Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant of the zero polynomial");
    IntPoly A = a, B = b;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    const Int ca = abs(A.content());
    const Int cb = abs(B.content());
    // Signs stay with the primitive parts so only |content| is factored out.
    A = divide_coeffs_exact(A, ca);
    B = divide_coeffs_exact(B, cb);
    Int t = pow_int(ca, static_cast<unsigned long>(B.degree())) *
            pow_int(cb, static_cast<unsigned long>(A.degree()));
    Int g(1), h(1);
    while (B.degree() > 0) {
        const unsigned long delta = static_cast<unsigned long>(A.degree() - B.degree());
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = std::move(B);
        if (R.is_zero()) {
            B = IntPoly();
            break;
        }
        B = divide_coeffs_exact(R, g * pow_int(h, delta));
        g = A.lc();
        if (delta >= 1) {
            Int num = pow_int(g, delta);
            if (!mpz_divisible_p(num.get_mpz_t(), pow_int(h, delta - 1).get_mpz_t()))
                throw InternalError("subresultant h-update not exact");
            Int den = pow_int(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    if (B.is_zero()) return Int(0); // common factor
    if (A.degree() == 0) return Int(s) * t; // both inputs were constants
    const unsigned long dA = static_cast<unsigned long>(A.degree());
    Int num = pow_int(B.lc(), dA);
    Int den = pow_int(h, dA - 1);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalError("subresultant final division not exact");
    Int res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Int(s) * t * res;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (p.is_constant()) return IntPoly{1};
    IntPoly g = gcd_primitive(p, p.derivative());
    IntPoly pp = positive_lc(p.primitive_part());
    if (g.is_constant()) return pp;
    auto q = exact_divide(pp, g);
    if (!q) throw InternalError("gcd(p, p') does not divide p");
    return positive_lc(*q);
}

} // namespace torfix
