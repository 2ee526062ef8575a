#include "torfix/sturm.hpp"

#include "torfix/poly_gcd.hpp"

namespace torfix {

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_part());
    IntPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (!chain.back().is_constant()) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        const unsigned long e = static_cast<unsigned long>(a.degree() - b.degree()) + 1;
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        // prem scaled a by lc(b)^e; an odd power of a negative lc flips the
        // sign of the true remainder, undo that before negating. Stripping
        // the (positive) content afterwards is sign-safe.
        const bool factor_positive = (b.lc() > 0) || (e % 2 == 0);
        chain.push_back((factor_positive ? -r : r).primitive_part());
    }
    return chain;
}

unsigned long sturm_variations(const std::vector<IntPoly>& chain, const Rat& x) {
    unsigned long v = 0;
    int prev = 0;
    for (const auto& s : chain) {
        const int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++v;
        prev = sg;
    }
    return v;
}

unsigned long sturm_real_root_count(const IntPoly& p, const Rat& lo, const Rat& hi,
                                    bool open_interval) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial");
    if (!(lo < hi)) throw DomainError("root count needs lo < hi");
    IntPoly q = p.primitive_part();
    unsigned long endpoint_roots = 0;
    // Deflate endpoint roots exactly: q(u/v) = 0 forces (v t - u) | q in Z[t]
    // by Gauss's lemma. Afterwards neither endpoint is a root and the
    // classical variation difference counts the open interval unambiguously.
    for (const Rat& e : {lo, hi}) {
        if (q.sign_at(e) != 0) continue;
        IntPoly lin({-e.get_num(), e.get_den()});
        auto quo = exact_divide(q, lin);
        if (!quo) throw InternalError("endpoint root failed to deflate");
        q = std::move(*quo);
        if (q.is_zero() || q.sign_at(e) == 0)
            throw DomainError("root count requires a squarefree polynomial");
        if (!open_interval) ++endpoint_roots;
    }
    if (q.is_constant()) return endpoint_roots;
    std::vector<IntPoly> chain = sturm_chain(q);
    if (!chain.back().is_constant())
        throw DomainError("root count requires a squarefree polynomial");
    const unsigned long vlo = sturm_variations(chain, lo);
    const unsigned long vhi = sturm_variations(chain, hi);
    if (vlo < vhi) throw InternalError("negative Sturm variation difference");
    return (vlo - vhi) + endpoint_roots;
}

} // namespace torfix
