#pragma once

// Exact integer/rational arithmetic utilities shared by all modules.
// Everything here is exact: no floating point anywhere in this project.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fltcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// base^exp mod m, with base reduced into [0, m) first (handles negatives).
inline Int powmod(Int base, const Int& exp, const Int& m) {
    if (m <= 0) throw std::domain_error("powmod: modulus must be positive");
    base %= m;
    if (base < 0) base += m;
    return boost::multiprecision::powm(base, exp, m);
}

// Modular inverse via extended Euclid; nullopt when gcd(a, m) != 1.
inline std::optional<Int> modinv(Int a, const Int& m) {
    if (m <= 0) throw std::domain_error("modinv: modulus must be positive");
    a %= m;
    if (a < 0) a += m;
    Int r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) return std::nullopt;
    if (s0 < 0) s0 += m;
    return s0;
}

namespace detail {

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

// Deterministic witness-set bound for the bases {2,...,41}.
inline const Int& miller_rabin_deterministic_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

}  // namespace detail

// Deterministic primality test. The witness set {2,...,41} is proven
// complete below 3.3e24; larger inputs are outside this artifact's range.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= detail::miller_rabin_deterministic_bound())
        throw std::domain_error("is_prime: input exceeds the deterministic witness bound");
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : small_primes)
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Complete signed prime factorization: sign * prod(prime^exponent) == value,
// primes strictly increasing.
struct Factorization {
    Int value;
    int sign = 1;
    std::vector<PrimePower> factors;

    Int recompose() const {
        Int r = sign;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) r *= p;
        return r;
    }
};

namespace detail {

// Brent's variant of Pollard rho; n must be odd composite, not a prime power
// issue is handled by the caller recursing. Deterministically seeded from n.
inline Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    std::uint64_t seed = static_cast<std::uint64_t>(n % Int("18446744073709551557")) | 1;
    auto next_seed = [&seed]() {
        seed ^= seed << 13; seed ^= seed >> 7; seed ^= seed << 17;
        return seed;
    };
    while (true) {
        Int y = Int(next_seed()) % n;
        Int c = Int(next_seed()) % n;
        if (c == 0) c = 1;
        Int g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(Int(128), Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        // rare cycle degeneracy: retry with a fresh constant
    }
}

inline void factor_into(Int n, std::vector<PrimePower>& out);

inline void factor_composite(const Int& n, std::vector<PrimePower>& out) {
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

inline void factor_into(Int n, std::vector<PrimePower>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    factor_composite(n, out);
}

}  // namespace detail

inline Factorization factorize(const Int& n) {
    if (n == 0) throw std::domain_error("factorize: zero has no factorization");
    Factorization f;
    f.value = n;
    f.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    std::vector<PrimePower> raw;
    // trial division first; rho only sees hard cofactors
    for (Int p = 2; p <= 100000 && p * p <= m; p == 2 ? p = 3 : p += 2) {
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            raw.push_back({p, e});
        }
    }
    if (m > 1) detail::factor_into(m, raw);
    std::sort(raw.begin(), raw.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    for (const auto& pp : raw) {
        if (!f.factors.empty() && f.factors.back().prime == pp.prime)
            f.factors.back().exponent += pp.exponent;
        else
            f.factors.push_back(pp);
    }
    return f;
}

inline Int euler_phi(const Int& n) {
    if (n < 1) throw std::domain_error("euler_phi: argument must be positive");
    if (n == 1) return 1;
    Int phi = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        Int pk = p - 1;
        for (unsigned i = 1; i < e; ++i) pk *= p;
        phi *= pk;
    }
    return phi;
}

// Exact t-th root for odd t: returns r with r^t == n if it exists.
inline std::optional<Int> integer_root(const Int& n, unsigned t) {
    if (t % 2 == 0 || t == 0) throw std::domain_error("integer_root: t must be odd and positive");
    if (t == 1) return n;
    if (n == 0) return Int(0);
    if (n < 0) {
        auto r = integer_root(-n, t);
        if (r) return -*r;
        return std::nullopt;
    }
    // binary search on [1, 2^(ceil(bits/t)+1)]
    unsigned bits = boost::multiprecision::msb(n) + 1;
    Int lo = 1, hi = Int(1) << (bits / t + 2);
    while (lo <= hi) {
        Int mid = (lo + hi) / 2;
        Int p = boost::multiprecision::pow(mid, t);
        if (p == n) return mid;
        if (p < n) lo = mid + 1;
        else hi = mid - 1;
    }
    return std::nullopt;
}

}  // namespace fltcert
