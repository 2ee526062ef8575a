#pragma once

#include <vector>

#include "torfix/gauss.hpp"
#include "torfix/int_poly.hpp"

namespace torfix {

// Square matrix over Z, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n, Int(0)) {}
    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix pow(unsigned long e) const;

    // Exact determinant by Bareiss fraction-free elimination.
    Int det() const;

private:
    std::size_t n_;
    std::vector<Int> e_;
};

// Square matrix over Z[i], row-major.
class GaussianMatrix {
public:
    explicit GaussianMatrix(std::size_t n) : n_(n), e_(n * n) {}

    std::size_t dim() const { return n_; }
    GaussInt& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const GaussInt& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

    GaussianMatrix operator*(const GaussianMatrix& rhs) const;

private:
    std::size_t n_;
    std::vector<GaussInt> e_;
};

// Monic characteristic polynomial det(tI - A), exact, by the
// Faddeev-LeVerrier recurrence (all divisions by the step index are exact
// over Z respectively Z[i]).
IntPoly charpoly(const IntMatrix& a);
GaussIntPoly charpoly(const GaussianMatrix& a);

// Replaces each entry a+bi by the 2x2 real block [[a,-b],[b,a]]. The
// characteristic polynomial of the result is chi * conj-coeff(chi) of the
// original matrix.
IntMatrix realify(const GaussianMatrix& a);

// Companion matrix of a monic p = t^n + c_{n-1} t^{n-1} + ... + c_0, n >= 1:
// ones on the subdiagonal, last column -c_0..-c_{n-1}.
IntMatrix companion(const IntPoly& p);

} // namespace torfix
