#include <doctest.h>

#include <algorithm>
#include <vector>

#include "torfix/cyclotomic.hpp"

using namespace torfix;

TEST_CASE("small cyclotomic polynomials are pinned") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(8) == IntPoly{1, 0, 0, 0, 1});
    CHECK(cyclotomic(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic(10) == IntPoly{1, -1, 1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("order 105 is the first with a coefficient outside {-1,0,1}") {
    const IntPoly p = cyclotomic(105);
    CHECK(p.degree() == 48);
    CHECK(p.coeff(7) == -2);
    CHECK(p.coeff(41) == -2);
    CHECK(p == p.reciprocal());
}

TEST_CASE("product over divisors rebuilds t^n - 1") {
    for (unsigned long n = 1; n <= 100; ++n) {
        IntPoly prod{1};
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == IntPoly::power_minus_one(n));
    }
}

TEST_CASE("cyclotomic values at 1 detect prime powers") {
    for (unsigned long k = 2; k <= 50; ++k) {
        const auto fac = factorize(k);
        const Int expected = fac.size() == 1 ? Int(static_cast<long>(fac[0].first)) : Int(1);
        CHECK(cyclotomic(k).eval(Int(1)) == expected);
    }
    CHECK(cyclotomic(1).eval(Int(1)) == 0);
}

TEST_CASE("factorize and euler_phi") {
    using F = std::vector<std::pair<unsigned long, unsigned>>;
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(1) == F{});
    CHECK(factorize(97) == F{{97, 1}});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(105) == 48);
    CHECK(euler_phi(97) == 96);
    // Multiplicativity on coprime pairs.
    CHECK(euler_phi(35) == euler_phi(5) * euler_phi(7));
}

TEST_CASE("inverse totient enumeration is complete") {
    CHECK(inverse_totient_bound(1) == std::vector<unsigned long>{1, 2});
    CHECK(inverse_totient_bound(6) ==
          std::vector<unsigned long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18});
    // Spot-check completeness well past the advertised 2d^2 horizon.
    const auto within = inverse_totient_bound(10);
    for (unsigned long k = 1; k <= 500; ++k) {
        const bool listed = std::find(within.begin(), within.end(), k) != within.end();
        CHECK(listed == (euler_phi(k) <= 10));
    }
}
