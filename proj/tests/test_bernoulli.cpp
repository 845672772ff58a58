#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fltcert/bernoulli.hpp"

using namespace fltcert;

TEST_CASE("exact values") {
    CHECK(bernoulli_exact(0) == Rat(1));
    CHECK(bernoulli_exact(1) == Rat(-1, 2));
    CHECK(bernoulli_exact(2) == Rat(1, 6));
    CHECK(bernoulli_exact(12) == Rat(-691, 2730));
    for (unsigned k = 3; k <= 61; k += 2) CHECK(bernoulli_exact(k) == 0);
}

TEST_CASE("recurrence identity up to 60") {
    for (unsigned k = 1; k <= 60; ++k) {
        Rat acc = 0;
        Int binom = 1;
        for (unsigned j = 0; j <= k; ++j) {
            acc += Rat(binom) * bernoulli_exact(j);
            binom = binom * (k + 1 - j) / (j + 1);
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("von Staudt-Clausen denominators") {
    for (unsigned k = 2; k <= 60; k += 2) {
        Int expected = 1;
        for (Int q = 2; q <= k + 1; ++q)
            if (is_prime(q) && Int(k) % (q - 1) == 0) expected *= q;
        CHECK(denominator(bernoulli_exact(k)) == expected);
    }
}

TEST_CASE("Kummer congruence") {
    for (Int t : {Int(5), Int(7), Int(11), Int(13)}) {
        for (unsigned k1 = 2; k1 <= 60; k1 += 2) {
            if (Int(k1) % (t - 1) == 0) continue;
            for (unsigned k2 = k1; k2 <= 60; k2 += 2) {
                if (Int(k2) % (t - 1) == 0) continue;
                if (Int(k2 - k1) % (t - 1) != 0) continue;
                // B_{k1}/k1 == B_{k2}/k2 mod t
                Rat d = bernoulli_exact(k1) / k1 - bernoulli_exact(k2) / k2;
                CHECK(numerator(d) % t == 0);
                CHECK(denominator(d) % t != 0);
            }
        }
    }
}

TEST_CASE("bernoulli_mod examples") {
    CHECK(bernoulli_mod(32, 37) == 0);
    CHECK(bernoulli_mod(2, 5) == 1);
    CHECK_THROWS_AS(bernoulli_mod(4, 3), DenominatorNotInvertible);
}

TEST_CASE("modular power-sum path agrees with the exact path") {
    for (Int t : {Int(5), Int(7), Int(11), Int(13)}) {
        Int t3 = t * t * t;
        for (unsigned k = 2; k <= 60; k += 2) {
            if (Int(k) % (t - 1) == 0) continue;
            CHECK(bernoulli_mod_prime_cube(k, t) == bernoulli_mod(k, t3));
        }
    }
}

TEST_CASE("bernoulli_mod_prime_cube examples") {
    CHECK(bernoulli_mod_prime_cube(2, 5) == 21);
    Int r = bernoulli_mod_prime_cube(32, 37);
    CHECK(r % 37 == 0);
    CHECK(r != 0);  // the (37, 32) pair is simple: not divisible by 37^3
    // k = 22, t = 11: B_22 = 854513/138 reduced mod 1331
    Rat b22 = bernoulli_exact(22);
    CHECK(numerator(b22) == 854513);
    CHECK(denominator(b22) == 138);
    CHECK(bernoulli_mod_prime_cube(22, 11) == bernoulli_mod(22, Int(1331)));
    CHECK_THROWS_AS(bernoulli_mod_prime_cube(8, 5), std::domain_error);  // (t-1) | k
    CHECK_THROWS_AS(bernoulli_mod_prime_cube(3, 5), std::domain_error);  // odd k
}

TEST_CASE("batched scan matches the single-index path") {
    for (Int t : {Int(5), Int(7), Int(11)}) {
        auto scan = bernoulli_scan_mod_cube(t, false);
        REQUIRE(scan.size() == static_cast<std::size_t>((t - 3) / 2));
        for (const auto& [n, res] : scan)
            CHECK(res == bernoulli_mod_prime_cube(static_cast<unsigned>(2 * n * t), t));
    }
}

TEST_CASE("irregular pairs ground truth") {
    auto r7 = irregular_pairs(7);
    CHECK(r7.irregular_pairs.empty());
    CHECK(r7.iota == 0);

    auto r37 = irregular_pairs(37);
    CHECK(r37.irregular_pairs == std::vector<unsigned>{32});
    CHECK(r37.iota == 1);

    auto r59 = irregular_pairs(59);
    CHECK(r59.irregular_pairs == std::vector<unsigned>{44});

    CHECK_THROWS_AS(irregular_pairs(4), std::domain_error);
    CHECK_THROWS_AS(irregular_pairs(3), std::domain_error);
}

TEST_CASE("iota vanishes below 37") {
    for (long t = 5; t < 37; ++t) {
        if (!is_prime(Int(t))) continue;
        CHECK(irregular_pairs(Int(t)).iota == 0);
    }
}

TEST_CASE("good_prime_check branches") {
    auto g5 = good_prime_check(5);
    CHECK(g5.is_good);
    CHECK(g5.branch == GoodPrimeBranch::IotaZero);
    CHECK(g5.report.iota == 0);

    auto g37 = good_prime_check(37);
    CHECK(g37.is_good);
    CHECK(g37.branch == GoodPrimeBranch::BernoulliScanWithVandiver);
    CHECK(g37.report.vandiver_assumed);
    REQUIRE(g37.report.scan_mod_t_cubed.size() == 17);
    for (const auto& [n, res] : g37.report.scan_mod_t_cubed) CHECK(res != 0);
    REQUIRE(g37.assumptions.size() == 1);

    CHECK_THROWS_AS(good_prime_check(3), std::domain_error);
    CHECK_THROWS_AS(good_prime_check(4), std::domain_error);
}

TEST_CASE("full_scan flag populates the scan in the iota-zero branch") {
    auto g = good_prime_check(7, true);
    CHECK(g.branch == GoodPrimeBranch::IotaZero);
    CHECK(g.report.scan_mod_t_cubed.size() == 2);
}
