#include "torfix/mahler.hpp"

#include <cmath>
#include <complex>

#include "torfix/poly_gcd.hpp"
#include "torfix/spectral.hpp"

namespace torfix {

double log_abs(const Int& v) {
    if (v == 0) throw DomainError("log of zero");
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * M_LN2;
}

namespace {

// ---- complex arithmetic backends for the root iteration. The double
// backend covers precision_bits <= 53; beyond that, hand-rolled complex
// numbers over mpf_class (per-object precision, so the library stays
// thread-safe and needs no global GMP state).

struct DoubleBackend {
    using C = std::complex<double>;
    explicit DoubleBackend(unsigned) {}
    C from_int(const Int& v) const { return {v.get_d(), 0.0}; }
    C make(double re, double im) const { return {re, im}; }
    static bool is_zero(const C& z) { return z.real() == 0.0 && z.imag() == 0.0; }
    static double abs_dbl(const C& z) { return std::abs(z); }
    // log |z| robust against overflow of |z|^2
    static double log_abs_dbl(const C& z) { return std::log(std::hypot(z.real(), z.imag())); }
};

struct MpfBackend {
    struct C {
        mpf_class re, im;
    };
    unsigned prec;
    explicit MpfBackend(unsigned wbits) : prec(wbits) {}

    C zero() const { return {mpf_class(0, prec), mpf_class(0, prec)}; }
    C from_int(const Int& v) const { return {mpf_class(v, prec), mpf_class(0, prec)}; }
    C make(double re, double im) const { return {mpf_class(re, prec), mpf_class(im, prec)}; }

    static bool is_zero(const C& z) { return z.re == 0 && z.im == 0; }

    friend C operator+(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
    friend C operator-(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
    friend C operator*(const C& a, const C& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend C operator/(const C& a, const C& b) {
        mpf_class d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend C& operator+=(C& a, const C& b) { a.re += b.re; a.im += b.im; return a; }
    friend C& operator-=(C& a, const C& b) { a.re -= b.re; a.im -= b.im; return a; }

    static double abs_dbl(const C& z) {
        mpf_class n2 = z.re * z.re + z.im * z.im;
        if (n2 == 0) return 0.0;
        signed long e = 0;
        const double d = mpf_get_d_2exp(&e, n2.get_mpf_t());
        return std::exp(0.5 * (std::log(d) + static_cast<double>(e) * M_LN2));
    }
    static double log_abs_dbl(const C& z) {
        mpf_class n2 = z.re * z.re + z.im * z.im;
        if (n2 == 0) throw InternalError("log of zero modulus");
        signed long e = 0;
        const double d = mpf_get_d_2exp(&e, n2.get_mpf_t());
        return 0.5 * (std::log(d) + static_cast<double>(e) * M_LN2);
    }
};

struct AberthOutcome {
    double sum_log_max = 0.0; // sum over roots of log max(1, |z_i|)
    double error_log = 0.0;   // certified bound for that sum
    unsigned bits_used = 0;   // working mantissa bits of the backend
};

// Ehrlich-Aberth simultaneous refinement of all roots of a squarefree s,
// followed by an a-posteriori certification step: each approximation z_i
// carries the inclusion radius e_i = deg * |s(z_i)| / |s'(z_i)| (every disc
// of that radius contains a true root; pairwise disjoint discs therefore
// biject onto the full root set), and the contribution of root i to
// sum log max(1,|.|) is enclosed in the interval induced by e_i.
template <class B>
AberthOutcome aberth_sum_log(const B& backend, const IntPoly& s, unsigned precision_bits,
                             unsigned working_bits, unsigned max_sweeps) {
    using C = typename B::C;
    const long m = s.degree();
    const std::size_t um = static_cast<std::size_t>(m);

    std::vector<C> coef, dcoef;
    coef.reserve(um + 1);
    for (std::size_t k = 0; k <= um; ++k) coef.push_back(backend.from_int(s.coeff(k)));
    dcoef.reserve(um);
    for (std::size_t k = 1; k <= um; ++k)
        dcoef.push_back(backend.from_int(Int(static_cast<unsigned long>(k)) * s.coeff(k)));

    // Fujiwara-style outer radius in log2 space (safe for huge coefficients).
    const double lc_log2 = log_abs(s.lc()) / M_LN2;
    double r_log2 = -1024.0;
    for (std::size_t k = 0; k < um; ++k) {
        if (s.coeff(k) == 0) continue;
        const double ck_log2 = log_abs(s.coeff(k)) / M_LN2;
        r_log2 = std::max(r_log2, (ck_log2 - lc_log2) / static_cast<double>(um - k));
    }
    const double radius = 2.0 * std::exp2(std::min(r_log2, 500.0)) + 1.0;

    std::vector<C> z(um);
    for (std::size_t j = 0; j < um; ++j) {
        // deterministic spread over an annulus; the 0.31 phase and the
        // golden-ratio radial jitter break conjugation and dihedral symmetry
        const double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(um) + 0.31;
        const double rj = radius * (0.65 + 0.3 * std::fmod(0.6180339887 * static_cast<double>(j + 1), 1.0));
        z[j] = backend.make(rj * std::cos(ang), rj * std::sin(ang));
    }

    auto horner = [&](const std::vector<C>& cs, const C& at) {
        C acc = backend.from_int(Int(0));
        for (std::size_t k = cs.size(); k-- > 0;) acc = acc * at + cs[k];
        return acc;
    };

    const double stop = std::exp2(-static_cast<double>(precision_bits) / 2.0);
    bool converged = false;
    for (unsigned sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double worst = 0.0;
        for (std::size_t i = 0; i < um; ++i) {
            const C p = horner(coef, z[i]);
            const C dp = horner(dcoef, z[i]);
            if (B::is_zero(dp)) {
                // stationary point hit head on; nudge deterministically
                z[i] = z[i] + backend.make(std::exp2(-11) * radius, std::exp2(-12) * radius);
                worst = 1.0;
                continue;
            }
            const C newton = p / dp;
            C repel = backend.from_int(Int(0));
            for (std::size_t j = 0; j < um; ++j) {
                if (j == i) continue;
                C diff = z[i] - z[j];
                if (B::is_zero(diff)) diff = backend.make(std::exp2(-40) * radius, 0.0);
                repel += backend.from_int(Int(1)) / diff;
            }
            const C denom = backend.from_int(Int(1)) - newton * repel;
            const C corr = B::is_zero(denom) ? newton : newton / denom;
            z[i] -= corr;
            const double rel = B::abs_dbl(corr) / std::max(1.0, B::abs_dbl(z[i]));
            worst = std::max(worst, rel);
        }
        converged = worst <= stop;
    }
    if (!converged)
        throw DomainError("root refinement did not converge within the sweep budget (degree " +
                          std::to_string(m) + ")");

    // Certification. |s| and |s'| evaluated once more; term-by-term the
    // evaluation rounding error is below (deg+1) * max|c_k| * max(1,|z|)^deg
    // times the working epsilon, the derivative's an extra factor deg.
    std::vector<double> mod(um), rad(um);
    AberthOutcome out;
    out.bits_used = working_bits;
    const double eval_eps = std::exp2(3.0 - static_cast<double>(working_bits));
    double cap_log = -1e300;
    for (std::size_t k = 0; k <= um; ++k)
        if (s.coeff(k) != 0) cap_log = std::max(cap_log, log_abs(s.coeff(k)));
    for (std::size_t i = 0; i < um; ++i) {
        const double pz = B::abs_dbl(horner(coef, z[i]));
        const double dpz = B::abs_dbl(horner(dcoef, z[i]));
        mod[i] = B::abs_dbl(z[i]);
        const double big_log = cap_log + static_cast<double>(um) * std::log(std::max(1.0, mod[i]));
        const double big = (big_log > 690.0) ? 1e300 : std::exp(big_log);
        const double slack_p = big * static_cast<double>(um + 1) * eval_eps;
        const double slack_dp = slack_p * static_cast<double>(um);
        const double denom = dpz - slack_dp;
        if (denom <= 0.0)
            throw DomainError("root certification failed: derivative modulus below noise floor");
        rad[i] = static_cast<double>(m) * (pz + slack_p) / denom * 1.0000001;
    }
    for (std::size_t i = 0; i < um; ++i)
        for (std::size_t j = i + 1; j < um; ++j) {
            const double dist = B::abs_dbl(z[i] - z[j]);
            if (dist <= rad[i] + rad[j])
                throw DomainError("root certification failed: inclusion discs overlap");
        }
    for (std::size_t i = 0; i < um; ++i) {
        const double hi = std::max(0.0, std::log(std::max(1.0, mod[i] + rad[i])));
        const double lo = std::log(std::max(1.0, std::max(0.0, mod[i] - rad[i])));
        out.sum_log_max += std::log(std::max(1.0, mod[i]));
        out.error_log += hi - lo;
    }
    out.error_log += 4e-16 * static_cast<double>(um) * (1.0 + std::fabs(out.sum_log_max));
    return out;
}

AberthOutcome aberth_dispatch(const IntPoly& s, unsigned precision_bits, unsigned max_sweeps) {
    long maxbits = 0;
    for (const auto& c : s.coeffs())
        maxbits = std::max(maxbits, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
    if (precision_bits <= 53 && maxbits <= 40) {
        DoubleBackend b(53);
        return aberth_sum_log(b, s, precision_bits, 53, max_sweeps);
    }
    const unsigned wbits = std::max<unsigned>(precision_bits + 64, static_cast<unsigned>(maxbits) + 32);
    MpfBackend b(wbits);
    return aberth_sum_log(b, s, precision_bits, wbits, max_sweeps);
}

} // namespace

MahlerEstimate mahler_measure(const IntPoly& q, unsigned precision_bits) {
    if (q.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
    if (precision_bits < 16) throw DomainError("precision_bits must be at least 16");
    MahlerEstimate est;

    const Int c = abs(q.content());
    IntPoly p = q.primitive_part();
    if (!p.is_zero() && p.lc() < 0) p = -p;
    double base_log = (c == 1) ? 0.0 : log_abs(c);
    double base_err = (c == 1) ? 0.0 : 4e-16 * std::fabs(base_log);

    auto [stripped, zeros] = p.strip_zero_roots();
    (void)zeros; // roots at 0 contribute log max(1,0) = 0
    p = std::move(stripped);

    if (p.is_monic()) {
        // Exact short-circuit: products of cyclotomics have measure exactly
        // 1, and stripping them off keeps the numeric part honest (a wild
        // root *on* the circle still costs nothing but its error interval).
        SpectralSplit split = cyclotomic_split(p);
        p = split.wild;
        if (p.degree() == 0) {
            est.log_value = base_log;
            est.error_bound = base_err;
            est.method = "exact-cyclotomic";
            return est;
        }
    }
    if (p.degree() == 0) {
        est.log_value = base_log + log_abs(p.lc());
        est.error_bound = base_err + 4e-16 * std::fabs(est.log_value);
        est.method = "exact-cyclotomic";
        return est;
    }

    // Multiplicity layers: repeatedly split off the squarefree part, so a
    // factor of multiplicity r is measured r times without ever handing a
    // repeated root to the iteration.
    double total = base_log, err = base_err;
    unsigned used_bits = 0;
    IntPoly rest = p;
    while (rest.degree() > 0) {
        IntPoly layer = squarefree_part(rest);
        auto quo = exact_divide(rest, layer);
        if (!quo) throw InternalError("squarefree layer does not divide its polynomial");
        rest = std::move(*quo);
        total += log_abs(layer.lc());
        AberthOutcome o = aberth_dispatch(layer, precision_bits, 200);
        total += o.sum_log_max;
        err += o.error_log;
        used_bits = std::max(used_bits, o.bits_used);
    }
    if (!(rest.degree() == 0 && abs(rest.lc()) == 1))
        throw InternalError("multiplicity layering left a non-unit");

    est.log_value = total;
    est.error_bound = err;
    est.method = "aberth-" + std::to_string(used_bits) + "bit";
    return est;
}

std::vector<std::pair<unsigned long, double>>
mahler_convergence_table(const IntPoly& q, const std::vector<unsigned long>& sample_points,
                         DeltaEngine engine) {
    if (q.is_zero() || !q.is_monic())
        throw DomainError("convergence table requires a monic polynomial");
    SpectralSplit split = cyclotomic_split(q);
    if (!split.cyclotomic_factors.empty()) {
        std::string ks;
        for (const auto& [k, mult] : split.cyclotomic_factors) {
            (void)mult;
            if (!ks.empty()) ks += ", ";
            ks += std::to_string(k);
        }
        throw DomainError("log|Delta_n|/n does not converge in the presence of cyclotomic factors (orders " +
                          ks + ")");
    }
    std::vector<std::pair<unsigned long, double>> rows;
    rows.reserve(sample_points.size());
    for (unsigned long n : sample_points) {
        if (n == 0) throw DomainError("sample points must be >= 1");
        const Int d = delta_n(q, n, engine);
        if (d == 0)
            throw InternalError("Delta_n vanished although no root is a root of unity");
        rows.emplace_back(n, log_abs(d) / static_cast<double>(n));
    }
    return rows;
}

std::vector<unsigned long> log_spaced_points(unsigned long n_max) {
    if (n_max == 0) throw DomainError("n_max must be >= 1");
    std::vector<unsigned long> pts;
    for (unsigned long n = 1; n < n_max && n != 0; n *= 2) pts.push_back(n);
    pts.push_back(n_max);
    return pts;
}

EntropyReport entropy(const IntPoly& chi_r, unsigned precision_bits) {
    if (chi_r.is_zero() || !chi_r.is_monic())
        throw DomainError("entropy requires a monic characteristic polynomial");
    EntropyReport rep;
    rep.full = mahler_measure(chi_r, precision_bits);
    rep.analytic = rep.full.log_value / 2.0;
    return rep;
}

} // namespace torfix
