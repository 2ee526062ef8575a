#include "torfix/matrix.hpp"

namespace torfix {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw DomainError("matrix dimension mismatch");
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw DomainError("matrix dimension mismatch");
    IntMatrix r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= rhs.e_[i];
    return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    IntMatrix base(*this), r = identity(n_);
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Int IntMatrix::det() const {
    if (n_ == 0) return Int(1);
    IntMatrix m(*this);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n_ && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n_) return Int(0);
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Bareiss: the previous pivot divides every 2x2 update exactly.
                if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
                    throw InternalError("Bareiss update not divisible by previous pivot");
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n_ - 1, n_ - 1) : -m.at(n_ - 1, n_ - 1);
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& rhs) const {
    if (n_ != rhs.n_) throw DomainError("matrix dimension mismatch");
    GaussianMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const GaussInt& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                r.at(i, j) = r.at(i, j) + aik * rhs.at(k, j);
        }
    return r;
}

IntPoly charpoly(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix m = IntMatrix::identity(n); // M_1
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A*M_{k-1} + c_{n-k+1} I
            m = a * m;
            for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        }
        IntMatrix am = a * m;
        Int tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
        if (!mpz_divisible_p(tr.get_mpz_t(), Int(k).get_mpz_t()))
            throw InternalError("Faddeev-LeVerrier trace not divisible by step");
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -ck;
    }
    return IntPoly(std::move(c));
}

GaussIntPoly charpoly(const GaussianMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<GaussInt> c(n + 1);
    c[n] = GaussInt(1, 0);
    GaussianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussInt(1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            m = a * m;
            for (std::size_t i = 0; i < n; ++i)
                m.at(i, i) = m.at(i, i) + c[n - k + 1];
        }
        GaussianMatrix am = a * m;
        GaussInt tr;
        for (std::size_t i = 0; i < n; ++i) tr = tr + am.at(i, i);
        const Int kk(static_cast<unsigned long>(k));
        if (!mpz_divisible_p(tr.re.get_mpz_t(), kk.get_mpz_t()) ||
            !mpz_divisible_p(tr.im.get_mpz_t(), kk.get_mpz_t()))
            throw InternalError("Faddeev-LeVerrier trace not divisible by step");
        GaussInt ck;
        mpz_divexact(ck.re.get_mpz_t(), tr.re.get_mpz_t(), kk.get_mpz_t());
        mpz_divexact(ck.im.get_mpz_t(), tr.im.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = -ck;
    }
    return GaussIntPoly(std::move(c));
}

IntMatrix realify(const GaussianMatrix& a) {
    const std::size_t n = a.dim();
    IntMatrix r(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GaussInt& z = a.at(i, j);
            r.at(2 * i, 2 * j) = z.re;
            r.at(2 * i, 2 * j + 1) = -z.im;
            r.at(2 * i + 1, 2 * j) = z.im;
            r.at(2 * i + 1, 2 * j + 1) = z.re;
        }
    return r;
}

IntMatrix companion(const IntPoly& p) {
    if (p.degree() < 1) throw DomainError("companion matrix needs degree >= 1");
    if (!p.is_monic()) throw DomainError("companion matrix needs a monic polynomial");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    IntMatrix c(n);
    for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
    return c;
}

} // namespace torfix
