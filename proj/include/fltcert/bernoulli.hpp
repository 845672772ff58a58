#pragma once

// Bernoulli numbers, exact and modular; irregular pairs; the two-branch
// good-prime predicate. Two independent computation paths (exact recurrence
// and modular power sums) back each other in the test suite.

#include "fltcert/arith.hpp"

#include <mutex>
#include <string>

namespace fltcert {

inline constexpr unsigned kDefaultExactBernoulliCap = 2000;

// Bound below which the literature settles t | h_t^+ in the negative.
inline const Int& vandiver_verified_bound() {
    static const Int b = 7000000;
    return b;
}

// Bound below which the literature rules out t^3 | B_{2nt}.
inline const Int& bernoulli_cube_verified_bound() {
    static const Int b = 12000000;
    return b;
}

inline const std::string kVandiverCitation =
    "assumed: t does not divide h_t^+ (class number of the maximal real "
    "subfield), verified in the literature for all t < 7e6 (Buhler et al., "
    "Irregular primes and cyclotomic invariants to 12 million)";

inline const std::string kBennettCitation =
    "relies on: Bennett et al., Theorem 4.1, for the insolvability "
    "conclusion once the Fermat-quotient conditions hold";

// Exact B_k with B_1 = -1/2, from sum_{j<=k} C(k+1,j) B_j = 0. Memoized;
// safe for concurrent callers.
inline Rat bernoulli_exact(unsigned k, unsigned cap = kDefaultExactBernoulliCap) {
    if (k > cap)
        throw std::domain_error("bernoulli_exact: index exceeds the exact-path cap; "
                                "use the modular path");
    static std::mutex mu;
    static std::vector<Rat> cache{Rat(1)};  // B_0 = 1
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        unsigned m = static_cast<unsigned>(cache.size());
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        Rat acc = 0;
        Int binom = 1;  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += Rat(binom) * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[k];
}

// Raised when den(B_k) shares a factor with the modulus, i.e. some prime
// q | m has (q-1) | k (von Staudt-Clausen).
struct DenominatorNotInvertible : std::runtime_error {
    DenominatorNotInvertible(unsigned k, const Int& m)
        : std::runtime_error("bernoulli_mod: denominator of B_" + std::to_string(k) +
                             " is not invertible mod " + m.str()) {}
};

inline Int bernoulli_mod(unsigned k, const Int& m,
                         unsigned cap = kDefaultExactBernoulliCap) {
    if (m < 2) throw std::domain_error("bernoulli_mod: modulus must be >= 2");
    Rat b = bernoulli_exact(k, cap);
    auto inv = modinv(denominator(b), m);
    if (!inv) throw DenominatorNotInvertible(k, m);
    Int num = numerator(b) % m;
    if (num < 0) num += m;
    return num * *inv % m;
}

namespace detail {

// 64-bit mulmod fast path for the power-sum scan.
inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

inline void require_prime_cube_preconditions(unsigned k, const Int& t) {
    if (t < 5 || !is_prime(t))
        throw std::domain_error("bernoulli_mod_prime_cube: t must be a prime >= 5");
    if (k == 0 || k % 2 != 0)
        throw std::domain_error("bernoulli_mod_prime_cube: k must be even and positive");
    if (Int(k) % (t - 1) == 0)
        throw std::domain_error("bernoulli_mod_prime_cube: (t-1) | k, B_k has t in its denominator");
}

}  // namespace detail

// B_k mod t^3 without materializing the exact rational. With M = t^4, the
// Faulhaber expansion of S_k(M) = sum_{x<M} x^k gives S_k(M)/M == B_k mod t^3:
// every lower term carries t-valuation >= 3 once (t-1) does not divide k.
inline Int bernoulli_mod_prime_cube(unsigned k, const Int& t) {
    detail::require_prime_cube_preconditions(k, t);
    Int t3 = t * t * t;
    Int t4 = t3 * t;
    Int t7 = t4 * t3;
    bool skip_t_multiples = k >= 7;  // x = t*u contributes t^k == 0 mod t^7
    Int S;
    if (t7 < (Int(1) << 62)) {
        std::uint64_t m = static_cast<std::uint64_t>(t7);
        std::uint64_t M = static_cast<std::uint64_t>(t4);
        std::uint64_t tt = static_cast<std::uint64_t>(t);
        std::uint64_t s = 0;
        for (std::uint64_t x = 1; x < M; ++x) {
            if (skip_t_multiples && x % tt == 0) continue;
            s += detail::powmod64(x, k, m);
            if (s >= m) s -= m;
        }
        S = s;
    } else {
        Int s = 0;
        for (Int x = 1; x < t4; ++x) {
            if (skip_t_multiples && x % t == 0) continue;
            s = (s + powmod(x, k, t7)) % t7;
        }
        S = s;
    }
    if (S % t4 != 0)
        throw std::logic_error("bernoulli_mod_prime_cube: power sum not divisible by t^4");
    return (S / t4) % t3;
}

// Full scan of B_{2nt} mod t^3 for n = 1..(t-3)/2 in one pass: x^{2nt} is
// accumulated as successive powers of x^{2t}.
inline std::vector<std::pair<unsigned, Int>> bernoulli_scan_mod_cube(const Int& t,
                                                                     bool stop_at_zero) {
    if (t < 5 || !is_prime(t))
        throw std::domain_error("bernoulli_scan_mod_cube: t must be a prime >= 5");
    unsigned half = static_cast<unsigned>((t - 3) / 2);
    std::vector<std::pair<unsigned, Int>> out;
    if (half == 0) return out;
    Int t3 = t * t * t, t4 = t3 * t, t7 = t4 * t3;
    if (t7 < (Int(1) << 62)) {
        std::uint64_t m = static_cast<std::uint64_t>(t7);
        std::uint64_t M = static_cast<std::uint64_t>(t4);
        std::uint64_t tt = static_cast<std::uint64_t>(t);
        std::vector<std::uint64_t> sums(half, 0);
        std::uint64_t base_exp = 2 * tt;  // k = 2nt >= 2t > 7, multiples of t vanish
        for (std::uint64_t x = 1; x < M; ++x) {
            if (x % tt == 0) continue;
            std::uint64_t p = detail::powmod64(x, base_exp, m);
            std::uint64_t acc = 1;
            for (unsigned n = 0; n < half; ++n) {
                acc = detail::mulmod64(acc, p, m);
                sums[n] += acc;
                if (sums[n] >= m) sums[n] -= m;
            }
        }
        for (unsigned n = 1; n <= half; ++n) {
            Int S = sums[n - 1];
            if (S % t4 != 0)
                throw std::logic_error("bernoulli_scan_mod_cube: power sum not divisible by t^4");
            out.emplace_back(n, (S / t4) % t3);
            if (stop_at_zero && out.back().second == 0) return out;
        }
    } else {
        for (unsigned n = 1; n <= half; ++n) {
            out.emplace_back(n, bernoulli_mod_prime_cube(static_cast<unsigned>(2 * n * t), t));
            if (stop_at_zero && out.back().second == 0) return out;
        }
    }
    return out;
}

struct IrregularityReport {
    Int t;
    std::vector<unsigned> irregular_pairs;  // even k in [2, t-3] with t | B_k
    unsigned iota = 0;
    std::vector<std::pair<unsigned, Int>> scan_mod_t_cubed;  // (n, B_{2nt} mod t^3); empty = absent
    bool vandiver_assumed = false;

    bool operator==(const IrregularityReport&) const = default;
};

inline IrregularityReport irregular_pairs(const Int& t,
                                          unsigned cap = kDefaultExactBernoulliCap) {
    if (t < 5 || !is_prime(t))
        throw std::domain_error("irregular_pairs: t must be a prime >= 5");
    IrregularityReport r;
    r.t = t;
    for (unsigned k = 2; Int(k) <= t - 3; k += 2)
        if (bernoulli_mod(k, t, cap) == 0) r.irregular_pairs.push_back(k);
    r.iota = static_cast<unsigned>(r.irregular_pairs.size());
    return r;
}

enum class GoodPrimeBranch { IotaZero, BernoulliScanWithVandiver, NotGood };

inline const char* to_string(GoodPrimeBranch b) {
    switch (b) {
        case GoodPrimeBranch::IotaZero: return "IotaZero";
        case GoodPrimeBranch::BernoulliScanWithVandiver: return "BernoulliScanWithVandiver";
        case GoodPrimeBranch::NotGood: return "NotGood";
    }
    return "?";
}

struct GoodPrimeVerdict {
    Int t;
    bool is_good = false;
    GoodPrimeBranch branch = GoodPrimeBranch::NotGood;
    IrregularityReport report;
    std::vector<std::string> assumptions;
};

// Branch 1: iota(t) = 0. Branch 2: every B_{2nt} nonzero mod t^3 AND t is
// inside the literature range for t | h_t^+; the class-number condition is
// asserted, not computed. full_scan forces the complete mod-t^3 scan even
// when not needed for the verdict.
inline GoodPrimeVerdict good_prime_check(const Int& t, bool full_scan = false,
                                         unsigned cap = kDefaultExactBernoulliCap) {
    if (t <= 3 || !is_prime(t))
        throw std::domain_error("good_prime_check: t must be a prime > 3");
    GoodPrimeVerdict v;
    v.t = t;
    v.report = irregular_pairs(t, cap);
    if (v.report.iota == 0) {
        v.is_good = true;
        v.branch = GoodPrimeBranch::IotaZero;
        if (full_scan)
            v.report.scan_mod_t_cubed = bernoulli_scan_mod_cube(t, false);
        return v;
    }
    auto scan = bernoulli_scan_mod_cube(t, !full_scan);
    bool all_nonzero = true;
    for (const auto& [n, res] : scan)
        if (res == 0) all_nonzero = false;
    bool complete = scan.size() == static_cast<std::size_t>((t - 3) / 2);
    if (complete || full_scan) v.report.scan_mod_t_cubed = scan;
    if (all_nonzero && complete && t < vandiver_verified_bound()) {
        v.is_good = true;
        v.branch = GoodPrimeBranch::BernoulliScanWithVandiver;
        v.report.vandiver_assumed = true;
        v.assumptions.push_back(kVandiverCitation);
    } else {
        v.is_good = false;
        v.branch = GoodPrimeBranch::NotGood;
    }
    return v;
}

}  // namespace fltcert
