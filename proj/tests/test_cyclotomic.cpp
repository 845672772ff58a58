#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fltcert/cyclotomic.hpp"

#include <random>

using namespace fltcert;

static CycElem random_elem(long t, std::mt19937_64& rng, bool integral = true) {
    CycElem acc(t);
    for (long i = 0; i < t - 1; ++i) {
        Int num = Int(rng() % 21) - 10;
        Rat c = integral ? Rat(num) : Rat(num, Int(rng() % 5) + 1);
        acc = acc + CycElem::zeta_pow(t, i) * c;
    }
    return acc;
}

TEST_CASE("reduction rule and identities") {
    for (long t : {5L, 7L}) {
        auto z = CycElem::zeta(t);
        auto ztm2 = CycElem::zeta_pow(t, t - 2);
        CHECK(z * ztm2 == CycElem::zeta_pow(t, t - 1));
        // zeta^{t-1} = -(1 + zeta + ... + zeta^{t-2})
        CycElem s(t);
        for (long i = 0; i <= t - 2; ++i) s = s + CycElem::zeta_pow(t, i);
        CHECK(CycElem::zeta_pow(t, t - 1) == -s);
        // full product of (1 - zeta^a) collapses to t
        CycElem p = CycElem::from_int(t, 1);
        for (long a = 1; a <= t - 1; ++a)
            p = p * (CycElem::from_int(t, 1) - CycElem::zeta_pow(t, a));
        CHECK(p == CycElem::from_int(t, t));
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(2024);
    for (long t : {5L, 7L, 11L}) {
        for (int i = 0; i < 30; ++i) {
            auto a = random_elem(t, rng), b = random_elem(t, rng), c = random_elem(t, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * CycElem::from_int(t, 1) == a);
        }
    }
}

TEST_CASE("galois action") {
    std::mt19937_64 rng(55);
    for (long t : {5L, 7L}) {
        auto x = random_elem(t, rng);
        CHECK(x.galois(1) == x);
        CHECK(x.conjugate().conjugate() == x);
        CHECK(CycElem::zeta(t).galois(2) == CycElem::zeta_pow(t, 2));
        for (int i = 0; i < 20; ++i) {
            long a = 1 + static_cast<long>(rng() % (t - 1));
            long b = 1 + static_cast<long>(rng() % (t - 1));
            CHECK(x.galois(b).galois(a) == x.galois(a * b % t));
        }
        CHECK_THROWS_AS(x.galois(t), std::domain_error);
    }
}

TEST_CASE("norm") {
    for (long t : {5L, 7L, 11L}) {
        CHECK(one_minus_zeta(t).norm() == Rat(t));
        CHECK(lambda_elem(t).norm() == Rat(Int(t) * t));
        CHECK(CycElem::zeta(t).norm() == 1);
    }
    std::mt19937_64 rng(66);
    for (long t : {5L, 7L}) {
        for (int i = 0; i < 20; ++i) {
            auto a = random_elem(t, rng), b = random_elem(t, rng);
            CHECK(a.norm() * b.norm() == (a * b).norm());
            CHECK(denominator(a.norm()) == 1);  // integral element, integer norm
        }
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(77);
    for (long t : {5L, 7L, 11L}) {
        for (int i = 0; i < 20; ++i) {
            auto a = random_elem(t, rng, false);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CycElem::from_int(t, 1));
        }
        CHECK_THROWS_AS(CycElem(t).inverse(), std::domain_error);
    }
}

TEST_CASE("units and reality") {
    for (long t : {5L, 7L}) {
        CHECK(CycElem::zeta(t).is_unit());
        CHECK(!CycElem::zeta(t).is_real());
        CHECK(!one_minus_zeta(t).is_unit());
        CHECK(lambda_elem(t).is_real());
    }
}

TEST_CASE("one_minus_zeta_valuation") {
    for (long t : {5L, 7L}) {
        unsigned cap = default_valuation_cap(t);
        CHECK(one_minus_zeta_valuation(CycElem::from_int(t, t), cap) ==
              static_cast<unsigned>(t - 1));
        CHECK(one_minus_zeta_valuation(lambda_elem(t), cap) == 2);
        CHECK(one_minus_zeta_valuation(CycElem::from_int(t, 1), cap) == 0);
        CHECK_THROWS_AS(one_minus_zeta_valuation(CycElem(t), cap), std::domain_error);
    }
}

TEST_CASE("t over lambda power is a real unit") {
    for (long t : {5L, 7L, 11L, 13L}) CHECK(verify_t_over_lambda_unit(t));
}

TEST_CASE("delta' is a real unit for all valid pairs") {
    for (long t : {5L, 7L, 11L, 13L}) {
        for (long a = 1; a < t; ++a)
            for (long b = 1; b < t; ++b) {
                if ((a - b) % t == 0 || (a + b) % t == 0) continue;
                CHECK(verify_delta_unit(t, a, b));
            }
    }
    CHECK(verify_delta_unit(5, 1, 2));
    CHECK_THROWS_AS(verify_delta_unit(5, 1, 4), std::domain_error);  // 4 == -1 mod 5
    CHECK_THROWS_AS(verify_delta_unit(5, 2, 2), std::domain_error);
}

TEST_CASE("splitting data") {
    auto d1 = splitting_data(2, 5);
    CHECK(d1.residue_degree_f == 4);
    CHECK(d1.num_primes_g == 1);
    CHECK(d1.conjugation_in_decomposition);

    auto d2 = splitting_data(11, 5);
    CHECK(d2.residue_degree_f == 1);
    CHECK(d2.num_primes_g == 4);
    CHECK(!d2.conjugation_in_decomposition);

    auto d3 = splitting_data(2, 7);
    CHECK(d3.residue_degree_f == 3);
    CHECK(d3.num_primes_g == 2);
    CHECK(!d3.conjugation_in_decomposition);

    CHECK_THROWS_AS(splitting_data(5, 5), std::domain_error);
}

TEST_CASE("cofactor coprimality") {
    CHECK(odd_power_cofactor(5, 1, 2) == 11);
    CHECK(cofactor_coprime_check(5, 2, 1, 2));
    CHECK(cofactor_coprime_check(5, 3, 1, 1));
    // necessity of the subgroup hypothesis: t=5, l=11, (2^5+3^5)/5 = 55 = 5*11
    CHECK(odd_power_cofactor(5, 2, 3) == 55);
    CHECK(odd_power_cofactor(5, 2, 3) % 11 == 0);
    CHECK(!contains_minus_one(11, 5));
    CHECK_THROWS_AS(cofactor_coprime_check(5, 11, 2, 3), std::domain_error);

    std::mt19937_64 rng(31415);
    for (auto [t, l] : std::vector<std::pair<long, long>>{{5, 2}, {5, 3}, {7, 3}, {7, 5}, {11, 2}}) {
        int done = 0;
        while (done < 500) {
            Int x = Int(rng() % 201) - 100, y = Int(rng() % 201) - 100;
            if (x == 0 || y == 0 || x + y == 0 || gcd(x, y) != 1) continue;
            CHECK(cofactor_coprime_check(t, l, x, y));
            ++done;
        }
    }
}

TEST_CASE("alpha congruence") {
    CHECK(alpha_congruence_check(5, 1, 4));
    CHECK(alpha_congruence_check(5, 2, 3));
    CHECK_THROWS_AS(alpha_congruence_check(5, 1, -1), std::domain_error);
    CHECK_THROWS_AS(alpha_congruence_check(5, 1, 2), std::domain_error);  // 5 does not divide 3

    std::mt19937_64 rng(27182);
    for (long t : {5L, 7L}) {
        int done = 0;
        while (done < 200) {
            Int x = Int(rng() % 201) - 100;
            Int y = Int(rng() % 201) - 100;
            if (x == 0 || y == 0 || x + y == 0) continue;
            if ((x + y) % t != 0 || gcd(x, y) != 1) continue;
            CHECK(alpha_congruence_check(t, x, y));
            ++done;
        }
    }
}
