#pragma once

#include <string>
#include <vector>

#include "torfix/int_poly.hpp"

namespace torfix {

// Element of Z[i].
struct GaussInt {
    Int re{0};
    Int im{0};

    GaussInt() = default;
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; } // re^2 + im^2

    friend bool operator==(const GaussInt&, const GaussInt&) = default;
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    std::string to_string() const;
};

// Dense polynomial over Z[i], ascending coefficients, trailing zeros
// stripped (same conventions as IntPoly).
class GaussIntPoly {
public:
    GaussIntPoly() = default;
    explicit GaussIntPoly(std::vector<GaussInt> ascending_coeffs);

    static GaussIntPoly constant(GaussInt c);
    static GaussIntPoly from_int_poly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const GaussInt& coeff(std::size_t k) const;
    const GaussInt& lc() const;
    bool is_monic() const { return !c_.empty() && c_.back() == GaussInt(1, 0); }
    const std::vector<GaussInt>& coeffs() const { return c_; }

    friend bool operator==(const GaussIntPoly&, const GaussIntPoly&) = default;

    GaussIntPoly operator+(const GaussIntPoly& rhs) const;
    GaussIntPoly operator-(const GaussIntPoly& rhs) const;
    GaussIntPoly operator*(const GaussIntPoly& rhs) const;

    // Coefficient-wise complex conjugate; its roots are the conjugates of
    // the original roots.
    GaussIntPoly conj_coeffs() const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<GaussInt> c_;
};

// Casts a Z[i] polynomial with all-real coefficients down to Z; throws
// InternalError if any imaginary part is nonzero (callers use this exactly
// where vanishing is a theorem, e.g. for q * conj(q)).
IntPoly to_int_poly(const GaussIntPoly& p);

// q(t) * conj(q)(t): real coefficients by construction, returned over Z.
IntPoly norm_poly(const GaussIntPoly& q);

} // namespace torfix
