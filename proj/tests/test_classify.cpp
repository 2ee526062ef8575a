#include <doctest.h>

#include <cmath>

#include "torfix/classify.hpp"
#include "torfix/cyclotomic.hpp"
#include "torfix/fixpoints.hpp"

using namespace torfix;

namespace {
IntPoly pow_poly(const IntPoly& p, unsigned e) {
    IntPoly r{1};
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}
} // namespace

TEST_CASE("the three growth behaviors") {
    const GrowthClassification exp2 = classify(pow_poly(IntPoly{-2, 1}, 2));
    CHECK(exp2.kind == GrowthKind::Exponential);
    CHECK(exp2.period == 1);
    CHECK(exp2.forbidden_residues.empty());
    CHECK_FALSE(exp2.non_simple_implied);
    CHECK(std::abs(exp2.entropy.log_value - 2 * std::log(2.0)) < 1e-12);

    const GrowthClassification per = classify(pow_poly(IntPoly{1, 1}, 4));
    CHECK(per.kind == GrowthKind::Periodic);
    CHECK(per.period == 2);
    CHECK(per.entropy.log_value == 0.0);
    CHECK(per.forbidden_residues.empty());

    const GrowthClassification tri = classify(IntPoly{1, 1, 1}); // Phi_3
    CHECK(tri.kind == GrowthKind::Periodic);
    CHECK(tri.period == 3);

    const IntPoly mixed = pow_poly(IntPoly{1, 1}, 2) * pow_poly(IntPoly{-2, 1}, 2);
    const GrowthClassification mix = classify(mixed);
    CHECK(mix.kind == GrowthKind::Mixed);
    CHECK(mix.period == 2);
    CHECK(mix.forbidden_residues == std::vector<unsigned long>{2});
    CHECK(mix.non_simple_implied);
    CHECK(std::abs(mix.entropy.log_value - 2 * std::log(2.0)) < 1e-12);

    CHECK_THROWS_AS((void)classify(IntPoly{1, 2}), DomainError);
    CHECK_THROWS_AS((void)classify(IntPoly{5}), DomainError);
}

TEST_CASE("mixed growth with several orders") {
    const IntPoly p = cyclotomic(3) * cyclotomic(4) * IntPoly{-3, 1};
    const GrowthClassification c = classify(p);
    CHECK(c.kind == GrowthKind::Mixed);
    CHECK(c.period == 12);
    CHECK(c.forbidden_residues == std::vector<unsigned long>{3, 4});
    // F vanishes exactly on multiples of 3 and 4.
    const FixSequence seq = fix_sequence(p, 24, false);
    for (unsigned long n = 1; n <= 24; ++n) {
        const bool vanish = (n % 3 == 0) || (n % 4 == 0);
        CHECK((seq.values[n - 1] == 0) == vanish);
    }
}

TEST_CASE("one full period of the torsion factor") {
    const PeriodicProfile two = periodic_profile({{2, 2}});
    CHECK(two.period == 2);
    CHECK(two.table == std::vector<Int>{Int(4), Int(0)});

    const PeriodicProfile one = periodic_profile({{1, 1}});
    CHECK(one.period == 1);
    CHECK(one.table == std::vector<Int>{Int(0)});

    const PeriodicProfile both = periodic_profile({{3, 1}, {4, 1}});
    CHECK(both.period == 12);
    const IntPoly p = cyclotomic(3) * cyclotomic(4);
    for (unsigned long n = 1; n <= 12; ++n)
        CHECK(both.table[n - 1] == abs(delta_n(p, n)));
}

TEST_CASE("astronomical periods are reported, not tabulated") {
    // lcm of the first eight odd primes is far beyond the tabulation guard.
    std::map<unsigned long, unsigned> orders;
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL}) orders[p] = 1;
    try {
        (void)periodic_profile(orders);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("111546435") != std::string::npos);
    }
}

TEST_CASE("h normalization covers the vanishing residues") {
    const IntPoly mixed = pow_poly(IntPoly{1, 1}, 2) * pow_poly(IntPoly{-2, 1}, 2);
    const SpectralSplit split = cyclotomic_split(mixed);
    for (unsigned long n = 1; n <= 10; ++n) {
        const Int expected = n % 2 == 0 ? abs(delta_n(IntPoly{4, -4, 1}, n))
                                        : fix_count(mixed, n, false).value;
        CHECK(h_function(split, n) == expected);
    }
    CHECK_THROWS_AS((void)h_function(cyclotomic_split(IntPoly{-2, 1}), 1), DomainError);
    CHECK_THROWS_AS((void)h_function(split, 0), DomainError);
}

TEST_CASE("ergodicity report") {
    const ErgodicityReport demo = ergodicity_report(IntPoly{1, 4, 4, 0, 4, 4, 1});
    CHECK(demo.no_root_of_unity_eigenvalues);
    CHECK(demo.is_automorphism);
    CHECK(demo.ergodic_automorphism);
    CHECK(demo.unit_circle_distinct == 2);
    CHECK(demo.factor_constant_term_one);
    CHECK(demo.factor_palindromic_even_degree);

    const ErgodicityReport doubling = ergodicity_report(pow_poly(IntPoly{-2, 1}, 2));
    CHECK(doubling.no_root_of_unity_eigenvalues);
    CHECK_FALSE(doubling.is_automorphism); // |chi(0)| = 4
    CHECK_FALSE(doubling.ergodic_automorphism);
    CHECK(doubling.unit_circle_distinct == 0);

    const ErgodicityReport torsion = ergodicity_report(cyclotomic(12));
    CHECK_FALSE(torsion.no_root_of_unity_eigenvalues);
    CHECK(torsion.is_automorphism);
    CHECK_FALSE(torsion.ergodic_automorphism);
}

TEST_CASE("sandwich onset for clean exponential growth") {
    const IntPoly p = pow_poly(IntPoly{-2, 1}, 2); // F(n) = (2^n - 1)^2
    const auto onset = exponential_onset(p, 0.1, 200);
    REQUIRE(onset.has_value());
    const double m = 2 * std::log(2.0);
    for (unsigned long n = *onset; n <= 200; ++n) {
        const double logf = log_abs(fix_count(p, n, false).value);
        CHECK(logf >= static_cast<double>(n) * (m - 0.1) - 1e-9);
        CHECK(logf <= static_cast<double>(n) * (m + 0.1) + 1e-9);
    }
    // Below the onset the lower bound must genuinely fail.
    if (*onset > 1) {
        const double logf = log_abs(fix_count(p, *onset - 1, false).value);
        CHECK(logf < static_cast<double>(*onset - 1) * (m - 0.1));
    }
}

TEST_CASE("onset rejects hopeless tolerances and wrong kinds") {
    CHECK_FALSE(exponential_onset(IntPoly{1, 4, 4, 0, 4, 4, 1}, 1e-12, 200).has_value());
    CHECK_THROWS_AS((void)exponential_onset(IntPoly{1, 1} * IntPoly{-2, 1}, 0.1, 100),
                    DomainError); // mixed, not exponential
    CHECK_THROWS_AS((void)exponential_onset(pow_poly(IntPoly{-2, 1}, 2), 0.0, 100), DomainError);
    CHECK_THROWS_AS((void)exponential_onset(pow_poly(IntPoly{-2, 1}, 2), 0.1, 0), DomainError);
}
