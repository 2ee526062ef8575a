#include <doctest.h>

#include <random>

#include "torfix/cyclotomic.hpp"
#include "torfix/fixpoints.hpp"

using namespace torfix;

TEST_CASE("pinned Delta values") {
    CHECK(delta_n(IntPoly{-1, -1, 1}, 1) == Int(-1));
    CHECK(delta_n(IntPoly{-1, -1, 1}, 3) == Int(-4));
    CHECK(delta_n(IntPoly{-1, -1, 1}, 5) == Int(-11));
    CHECK(delta_n(IntPoly{1, -3, 1}, 2) == Int(-5));
    CHECK(delta_n(IntPoly{-2, 1}, 10) == Int(1023));
    CHECK(delta_n(IntPoly{1}, 7) == Int(1)); // empty root product
}

TEST_CASE("engines agree, including across the large-n crossover") {
    std::mt19937_64 rng(0x51);
    std::uniform_int_distribution<int> coef(-9, 9), deg(1, 8);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        c.back() = 1;
        const IntPoly q(std::move(c));
        for (unsigned long n = 1; n <= 12; ++n)
            CHECK(delta_n_resultant(q, n) == delta_n_companion(q, n));
    }
    // Far beyond the Auto crossover the reduced-resultant path must still
    // match the matrix-power path.
    const IntPoly gold{-1, -1, 1};
    CHECK(delta_n_resultant(gold, 1200) == delta_n_companion(gold, 1200));
    CHECK(delta_n_resultant(gold, 1201) == delta_n_companion(gold, 1201));
}

TEST_CASE("Delta is multiplicative over factorizations") {
    std::mt19937_64 rng(0x52);
    std::uniform_int_distribution<int> coef(-5, 5), deg(1, 4);
    const auto rand_monic = [&] {
        std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        c.back() = 1;
        return IntPoly(std::move(c));
    };
    for (int trial = 0; trial < 25; ++trial) {
        const IntPoly a = rand_monic(), b = rand_monic();
        for (unsigned long n = 1; n <= 10; ++n)
            CHECK(delta_n(a * b, n) == delta_n(a, n) * delta_n(b, n));
    }
}

TEST_CASE("closed form for cyclotomic factors matches both engines") {
    for (unsigned long k = 1; k <= 30; ++k) {
        const IntPoly phi = cyclotomic(k);
        for (unsigned long n = 1; n <= 40; ++n) {
            CHECK(delta_n_cyclotomic(k, n) == delta_n_resultant(phi, n));
            CHECK(delta_n_cyclotomic(k, n) == delta_n_companion(phi, n));
        }
    }
}

TEST_CASE("power_mod against naive reduction") {
    std::mt19937_64 rng(0x53);
    std::uniform_int_distribution<int> coef(-6, 6), deg(1, 6);
    const auto naive_mod = [](unsigned long n, const IntPoly& q) {
        IntPoly r{1};
        for (unsigned long i = 0; i < n; ++i) {
            r = r.mul_power(1);
            while (r.degree() >= q.degree()) {
                const Int top = r.lc();
                r = r - q.mul_power(static_cast<std::size_t>(r.degree() - q.degree())) * top;
            }
        }
        return r;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        c.back() = 1;
        const IntPoly q(std::move(c));
        for (unsigned long n : {0UL, 1UL, 2UL, 7UL, 31UL, 64UL})
            CHECK(power_mod(n, q) == naive_mod(n, q));
    }
}

TEST_CASE("iterate counts and the conjugate-closed gate") {
    const IntPoly chi{1, 4, 4, 0, 4, 4, 1};
    const Int expected[] = {Int(18), Int(36), Int(648), Int(2304), Int(6498), Int(5184)};
    for (unsigned long n = 1; n <= 6; ++n) {
        const FixCount f = fix_count(chi, n, true);
        CHECK(f.value == expected[n - 1]);
        CHECK_FALSE(f.formal);
    }
    // A spectrum that is not closed under conjugation can push Delta
    // negative; claiming closure then has to fail loudly.
    CHECK_THROWS_AS((void)fix_count(IntPoly{1, -3, 1}, 1, true), DomainError);
    CHECK(fix_count(IntPoly{1, -3, 1}, 1, false).value == 1);
    CHECK(fix_count(IntPoly{1, -3, 1}, 1, false).formal);
}

TEST_CASE("fixed-point table of the mixed example") {
    const IntPoly p = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-2, 1} * IntPoly{-2, 1};
    const FixSequence seq = fix_sequence(p, 8, false);
    CHECK(seq.period == 2);
    const std::vector<Int> expect_f = {Int(4),    Int(0), Int(196),   Int(0),
                                       Int(3844), Int(0), Int(64516), Int(0)};
    CHECK(seq.values == expect_f);
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        CHECK(seq.values[i] == seq.periodic_factor[i] * seq.wild_factor[i]);
        // Wild factor (2^n - 1)^2 never vanishes.
        CHECK(seq.wild_factor[i] > 0);
    }
}

TEST_CASE("all-zero table when 1 is an eigenvalue") {
    const FixSequence seq = fix_sequence(IntPoly{1, -2, 1}, 5, false);
    CHECK(seq.period == 1);
    for (const auto& v : seq.values) CHECK(v == 0);
}

TEST_CASE("pure torsion spectrum alternates") {
    for (unsigned g = 1; g <= 3; ++g) {
        IntPoly p{1};
        for (unsigned i = 0; i < 2 * g; ++i) p = p * IntPoly{1, 1};
        const FixSequence seq = fix_sequence(p, 6, false);
        CHECK(seq.period == 2);
        Int odd_value;
        mpz_ui_pow_ui(odd_value.get_mpz_t(), 4, g);
        for (std::size_t i = 0; i < seq.values.size(); ++i)
            CHECK(seq.values[i] == (i % 2 == 0 ? odd_value : Int(0)));
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS((void)delta_n(IntPoly{1, 2}, 3), DomainError);
    CHECK_THROWS_AS((void)delta_n(IntPoly{-1, -1, 1}, 0), DomainError);
    CHECK_THROWS_AS((void)fix_sequence(IntPoly{-1, -1, 1}, 0, false), DomainError);
}
