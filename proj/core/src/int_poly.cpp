#include "torfix/int_poly.hpp"

#include <sstream>

namespace torfix {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

IntPoly::IntPoly(std::vector<Int> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> ascending_coeffs) {
    c_.reserve(ascending_coeffs.size());
    for (long v : ascending_coeffs) c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int coeff, std::size_t k) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = std::move(coeff);
    }
    return p;
}

IntPoly IntPoly::power_minus_one(unsigned long n) {
    if (n == 0) throw DomainError("t^0 - 1 is the zero polynomial");
    IntPoly p;
    p.c_.assign(n + 1, Int(0));
    p.c_[0] = -1;
    p.c_[n] = 1;
    return p;
}

const Int& IntPoly::coeff(std::size_t k) const {
    static const Int zero(0);
    return k < c_.size() ? c_[k] : zero;
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) r.c_[i] += rhs.c_[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) r.c_[i] -= rhs.c_[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            r.c_[i + j] += c_[i] * rhs.c_[j];
    }
    // Leading product lc*lc is nonzero over Z, no normalization needed,
    // but run it anyway to keep the invariant obviously true.
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = Int(k) * c_[k];
    r.normalize();
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // sum c_k u^k v^(d-k) with x = u/v, v > 0; same sign as p(x).
    const Int u = x.get_num();
    const Int v = x.get_den();
    Int acc(0), upow(1);
    std::vector<Int> vpow(c_.size());
    vpow[c_.size() - 1] = 1;
    for (std::size_t i = c_.size() - 1; i-- > 0;) vpow[i] = vpow[i + 1] * v;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        acc += c_[k] * upow * vpow[k];
        upow *= u;
    }
    return sgn(acc);
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    IntPoly r(*this);
    if (g == 1) return r;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::mul_power(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(c_.size() + k, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::pair<IntPoly, std::size_t> IntPoly::strip_zero_roots() const {
    if (is_zero()) throw DomainError("cannot strip t-powers off the zero polynomial");
    std::size_t m = 0;
    while (c_[m] == 0) ++m;
    IntPoly q;
    q.c_.assign(c_.begin() + static_cast<long>(m), c_.end());
    return {q, m};
}

IntPoly IntPoly::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of the zero polynomial");
    if (c_[0] == 0) throw DomainError("reciprocal requires a nonzero constant term");
    IntPoly r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace torfix
