#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fltcert/arith.hpp"

#include <random>

using namespace fltcert;

// trial-division oracle, independent of factorize()
static std::vector<std::pair<Int, unsigned>> trial_division(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

TEST_CASE("factorize examples") {
    auto f = factorize(33);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 3);
    CHECK(f.factors[0].exponent == 1);
    CHECK(f.factors[1].prime == 11);
    CHECK(f.sign == 1);

    auto g = factorize(-2);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].prime == 2);

    auto h = factorize(2310);
    auto oracle = trial_division(2310);
    REQUIRE(h.factors.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(h.factors[i].prime == oracle[i].first);
        CHECK(h.factors[i].exponent == oracle[i].second);
    }

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize recomposes and matches trial division") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        long n = static_cast<long>(rng() % 1000000) + 2;
        if (rng() % 2) n = -n;
        auto f = factorize(n);
        CHECK(f.recompose() == n);
        for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
        for (std::size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].prime < f.factors[j].prime);
    }
    // a semiprime past the trial-division bound exercises rho
    Int a = 1000003, b = 1000033;
    auto f = factorize(a * b);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == a);
    CHECK(f.factors[1].prime == b);
}

TEST_CASE("euler_phi examples and multiplicativity") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(37) == 36);
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);

    // direct unit count for 33
    int count = 0;
    for (int a = 1; a <= 33; ++a)
        if (gcd(Int(a), Int(33)) == 1) ++count;
    CHECK(euler_phi(33) == count);

    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        Int m = rng() % 1000 + 1, n = rng() % 1000 + 1;
        if (gcd(m, n) != 1) continue;
        CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
}

TEST_CASE("integer_root") {
    CHECK(integer_root(32, 5) == Int(2));
    CHECK(integer_root(-32, 5) == Int(-2));
    CHECK(!integer_root(33, 5));
    CHECK_THROWS_AS(integer_root(8, 2), std::domain_error);

    std::mt19937_64 rng(31337);
    for (unsigned t : {5u, 7u, 11u}) {
        for (int i = 0; i < 100; ++i) {
            Int r = Int(rng() % 2001) - 1000;
            CHECK(integer_root(boost::multiprecision::pow(r, t), t) == r);
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(37));
    CHECK(!is_prime(1));
    CHECK(!is_prime(2310));
    CHECK(is_prime(2));
    CHECK(!is_prime(-7));
    // sieve oracle below 10000
    std::vector<bool> sieve(10000, true);
    sieve[0] = sieve[1] = false;
    for (int p = 2; p < 10000; ++p)
        if (sieve[p])
            for (int q = 2 * p; q < 10000; q += p) sieve[q] = false;
    for (int n = 0; n < 10000; ++n) CHECK(is_prime(n) == sieve[n]);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(999);
    auto rnd = [&]() {
        Int num = Int(rng() % 2001) - 1000;
        Int den = Int(rng() % 1000) + 1;
        return Rat(num, den);
    };
    for (int i = 0; i < 200; ++i) {
        Rat a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (Rat(1) / a) == 1);
        // stored in lowest terms with positive denominator
        CHECK(denominator(a) > 0);
        CHECK(gcd(numerator(a), denominator(a)) == 1);
    }
}
