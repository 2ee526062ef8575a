#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torfix/errors.hpp"

namespace torfix {

using Int = mpz_class;
using Rat = mpq_class;

// num/den with canonicalization (gcd stripped, denominator positive).
Rat make_rat(const Int& num, const Int& den);

// Dense univariate polynomial over Z, coefficients in ascending order
// (c[k] multiplies t^k). Invariant: the zero polynomial stores an empty
// vector; otherwise the last stored coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending_coeffs);
    IntPoly(std::initializer_list<long> ascending_coeffs);

    static IntPoly constant(Int c);
    static IntPoly monomial(Int coeff, std::size_t k);
    // t^n - 1
    static IntPoly power_minus_one(unsigned long n);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    const Int& coeff(std::size_t k) const;
    const Int& lc() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const Int& s) const;

    IntPoly derivative() const;

    Int eval(const Int& x) const;
    // Exact sign of p(x) at a rational point, via homogeneous evaluation
    // (no rational arithmetic in the inner loop).
    int sign_at(const Rat& x) const;

    // gcd of |coefficients|; 0 for the zero polynomial, otherwise > 0.
    Int content() const;
    // p / content(p); keeps the sign of the leading coefficient.
    IntPoly primitive_part() const;

    IntPoly mul_power(std::size_t k) const; // p * t^k
    // Splits off the t^m factor: returns (p / t^m, m) with the quotient
    // having a nonzero constant term. m = 0 when p(0) != 0.
    std::pair<IntPoly, std::size_t> strip_zero_roots() const;

    // t^deg * p(1/t), i.e. the coefficient vector reversed. Requires a
    // nonzero constant term so degree is preserved and the map is an
    // involution on roots (alpha <-> 1/alpha).
    IntPoly reciprocal() const;

    std::string to_string() const; // human form, e.g. "t^2 - 3*t + 1"

private:
    void normalize();
    std::vector<Int> c_;
};

inline IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

} // namespace torfix
