#include <doctest.h>

#include <random>

#include "torfix/cyclotomic.hpp"
#include "torfix/spectral.hpp"

using namespace torfix;

TEST_CASE("split of a mixed product") {
    const IntPoly p = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-2, 1} * IntPoly{-2, 1};
    const SpectralSplit s = cyclotomic_split(p);
    CHECK(s.zero_multiplicity == 0);
    REQUIRE(s.cyclotomic_factors.size() == 1);
    CHECK(s.cyclotomic_factors.at(2) == 2);
    CHECK(s.wild == IntPoly{4, -4, 1});
    CHECK(s.unit_circle_distinct == 0);
    CHECK(split_recomposes(s));
}

TEST_CASE("split strips zero roots and order-1 factors") {
    const IntPoly p = IntPoly{0, 0, 1} * IntPoly{-1, 1} * IntPoly{-2, 1};
    const SpectralSplit s = cyclotomic_split(p);
    CHECK(s.zero_multiplicity == 2);
    REQUIRE(s.cyclotomic_factors.size() == 1);
    CHECK(s.cyclotomic_factors.at(1) == 1);
    CHECK(s.wild == IntPoly{-2, 1});
    CHECK(split_recomposes(s));
}

TEST_CASE("split of a cyclotomic-free palindromic polynomial") {
    const IntPoly chi{1, 4, 4, 0, 4, 4, 1};
    const SpectralSplit s = cyclotomic_split(chi);
    CHECK(s.cyclotomic_factors.empty());
    CHECK(s.zero_multiplicity == 0);
    CHECK(s.wild == chi);
    CHECK(s.unit_circle_distinct == 2);
    CHECK(s.self_reciprocal_factor == chi);
    CHECK(s.self_reciprocal_factor.coeff(0) == 1);
}

TEST_CASE("high-order cyclotomic factors are found") {
    const IntPoly p = cyclotomic(12) * cyclotomic(12) * cyclotomic(7) * IntPoly{-2, 1};
    const SpectralSplit s = cyclotomic_split(p);
    REQUIRE(s.cyclotomic_factors.size() == 2);
    CHECK(s.cyclotomic_factors.at(12) == 2);
    CHECK(s.cyclotomic_factors.at(7) == 1);
    CHECK(s.wild == IntPoly{-2, 1});
    CHECK(split_recomposes(s));
}

TEST_CASE("split validation and random recomposition") {
    CHECK_THROWS_AS((void)cyclotomic_split(IntPoly{1, 2}), DomainError);
    CHECK_THROWS_AS((void)cyclotomic_split(IntPoly()), DomainError);

    std::mt19937_64 rng(0x41);
    std::uniform_int_distribution<int> order(1, 15), mult(0, 2), coef(-4, 4), wdeg(0, 4),
        zeros(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        IntPoly p{1};
        for (int parts = mult(rng) + 1; parts-- > 0;)
            p = p * cyclotomic(static_cast<unsigned long>(order(rng)));
        std::vector<Int> wc(static_cast<std::size_t>(wdeg(rng)) + 1);
        for (auto& x : wc) x = coef(rng);
        wc.back() = 1;
        p = p * IntPoly(std::move(wc));
        p = p.mul_power(static_cast<std::size_t>(zeros(rng)));
        CHECK(split_recomposes(cyclotomic_split(p)));
    }
}

TEST_CASE("variable substitution t + 1/t") {
    CHECK(chebyshev_transform(IntPoly{1, 1, 1, 1, 1}) == IntPoly{-1, 1, 1});
    CHECK(chebyshev_transform(IntPoly{1, 0, 1}) == IntPoly{0, 1});
    CHECK(chebyshev_transform(IntPoly{1, 4, 4, 0, 4, 4, 1}) == IntPoly{-8, 1, 4, 1});
    CHECK_THROWS_AS((void)chebyshev_transform(IntPoly{1, 1}), DomainError);        // odd degree
    CHECK_THROWS_AS((void)chebyshev_transform(IntPoly{1, 2, 3}), DomainError);     // not palindromic
    CHECK_THROWS_AS((void)chebyshev_transform(IntPoly{0, 1, 0, 0, 1}), DomainError);
}

TEST_CASE("unit circle counts") {
    // Lehmer's polynomial: Salem number, 8 distinct roots on the circle.
    const IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    CHECK(unit_circle_count(lehmer).distinct == 8);
    // Golden-ratio quadratic: both roots real, off the circle.
    CHECK(unit_circle_count(IntPoly{-1, -1, 1}).distinct == 0);
    CHECK(unit_circle_count(IntPoly{1, -3, 1}).distinct == 0);
    // All four roots of Phi_5 are on the circle.
    CHECK(unit_circle_count(IntPoly{1, 1, 1, 1, 1}).distinct == 4);
    const auto r = unit_circle_count(IntPoly{1, 4, 4, 0, 4, 4, 1});
    CHECK(r.distinct == 2);
    CHECK(r.self_reciprocal_factor == IntPoly{1, 4, 4, 0, 4, 4, 1});
}

TEST_CASE("unit circle preconditions") {
    CHECK_THROWS_AS((void)unit_circle_count(IntPoly{-1, 1}), DomainError);  // q(1) = 0
    CHECK_THROWS_AS((void)unit_circle_count(IntPoly{0, 1, 1}), DomainError); // q(0) = 0
    CHECK_THROWS_AS((void)unit_circle_count(IntPoly{-3, 2}), DomainError);  // not monic
}

TEST_CASE("irreducibility witness") {
    CHECK(irreducible_mod_p_witness(IntPoly{1, 0, 1}, 25) == 3);
    CHECK(irreducible_mod_p_witness(IntPoly{-1, -1, 1}, 25) == 2);
    CHECK(irreducible_mod_p_witness(IntPoly{1, 4, 4, 0, 4, 4, 1}, 25) == 7);
    // Soundness: a witness is never produced for a genuine product.
    std::mt19937_64 rng(0x42);
    std::uniform_int_distribution<int> coef(-6, 6), deg(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> ac(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : ac) x = coef(rng);
        ac.back() = 1;
        std::vector<Int> bc(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : bc) x = coef(rng);
        bc.back() = 1;
        CHECK(!irreducible_mod_p_witness(IntPoly(std::move(ac)) * IntPoly(std::move(bc)), 25)
                   .has_value());
    }
}
