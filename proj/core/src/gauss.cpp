#include "torfix/gauss.hpp"

#include <sstream>

namespace torfix {

std::string GaussInt::to_string() const {
    std::ostringstream os;
    if (im == 0) {
        os << re.get_str();
    } else if (re == 0) {
        if (im == 1) os << "i";
        else if (im == -1) os << "-i";
        else os << im.get_str() << "i";
    } else {
        os << re.get_str() << (im > 0 ? "+" : "-");
        Int m = abs(im);
        if (m != 1) os << m.get_str();
        os << "i";
    }
    return os.str();
}

GaussIntPoly::GaussIntPoly(std::vector<GaussInt> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
    normalize();
}

void GaussIntPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussIntPoly GaussIntPoly::constant(GaussInt c) {
    GaussIntPoly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

GaussIntPoly GaussIntPoly::from_int_poly(const IntPoly& p) {
    std::vector<GaussInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x, Int(0));
    return GaussIntPoly(std::move(c));
}

const GaussInt& GaussIntPoly::coeff(std::size_t k) const {
    static const GaussInt zero;
    return k < c_.size() ? c_[k] : zero;
}

const GaussInt& GaussIntPoly::lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

GaussIntPoly GaussIntPoly::operator+(const GaussIntPoly& rhs) const {
    std::vector<GaussInt> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] = c[i] + rhs.c_[i];
    return GaussIntPoly(std::move(c));
}

GaussIntPoly GaussIntPoly::operator-(const GaussIntPoly& rhs) const {
    std::vector<GaussInt> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] = c[i] - rhs.c_[i];
    return GaussIntPoly(std::move(c));
}

GaussIntPoly GaussIntPoly::operator*(const GaussIntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return GaussIntPoly();
    std::vector<GaussInt> c(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            c[i + j] = c[i + j] + c_[i] * rhs.c_[j];
    }
    return GaussIntPoly(std::move(c));
}

GaussIntPoly GaussIntPoly::conj_coeffs() const {
    std::vector<GaussInt> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.conj());
    return GaussIntPoly(std::move(c));
}

std::string GaussIntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        const GaussInt& a = c_[i];
        const bool needs_parens = i > 0 && a.re != 0 && a.im != 0;
        if (i == 0 || needs_parens || !(a == GaussInt(1, 0))) {
            if (needs_parens) os << "(";
            os << a.to_string();
            if (needs_parens) os << ")";
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly to_int_poly(const GaussIntPoly& p) {
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (x.im != 0)
            throw InternalError("expected real coefficients, found " + x.to_string());
        c.push_back(x.re);
    }
    return IntPoly(std::move(c));
}

IntPoly norm_poly(const GaussIntPoly& q) {
    return to_int_poly(q * q.conj_coeffs());
}

} // namespace torfix
