#pragma once

// Multiplicative-group computations in (Z/t)^x and (Z/t^2)^x: the subgroup
// condition on prime divisors of B and the Fermat-quotient conditions.

#include "fltcert/arith.hpp"

namespace fltcert {

namespace detail {

inline void require_prime_exponent(const Int& t) {
    if (!is_prime(t)) throw std::domain_error("modgroup: t must be prime");
}

inline void require_coprime_to(const Int& a, const Int& t, const char* what) {
    if (a % t == 0) throw std::domain_error(std::string("modgroup: ") + what + " divisible by t");
}

}  // namespace detail

// Least d >= 1 with l^d == 1 mod t. Divides t-1; computed by stripping
// primes of t-1 from the exponent.
inline Int mult_order(const Int& l, const Int& t) {
    detail::require_prime_exponent(t);
    detail::require_coprime_to(l, t, "l");
    Int d = t - 1;
    for (const auto& [p, e] : factorize(t - 1).factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(l, d / p, t) == 1) d /= p;
            else break;
        }
    }
    return d;
}

// -1 mod t lies in <l mod t> iff ord(l) is even: (Z/t)^x is cyclic and -1 is
// its unique element of order 2.
inline bool contains_minus_one(const Int& l, const Int& t) {
    if (t == 2) return true;  // -1 == 1
    return mult_order(l, t) % 2 == 0;
}

// Euler criterion: l is a quadratic nonresidue mod t iff l^((t-1)/2) == -1.
inline bool is_nonresidue(const Int& l, const Int& t) {
    detail::require_prime_exponent(t);
    if (t == 2) throw std::domain_error("is_nonresidue: t must be odd");
    detail::require_coprime_to(l, t, "l");
    return powmod(l, (t - 1) / 2, t) == t - 1;
}

// True iff r^(t-1) == 1 mod t^2 (the Wieferich-style congruence for base r).
inline bool fermat_quotient_is_trivial(const Int& r, const Int& t) {
    detail::require_prime_exponent(t);
    detail::require_coprime_to(r, t, "r");
    return powmod(r, t - 1, t * t) == 1;
}

// True iff B^(t-1) != 2^(t-1) mod t^2.
inline bool b_vs_two_condition(const Int& B, const Int& t) {
    detail::require_prime_exponent(t);
    detail::require_coprime_to(B, t, "B");
    Int t2 = t * t;
    return powmod(B, t - 1, t2) != powmod(2, t - 1, t2);
}

struct SubgroupCondition {
    Int l;
    Int t;
    Int order;
    bool contains_minus_one = false;
    bool is_nonresidue = false;
};

inline SubgroupCondition subgroup_condition(const Int& l, const Int& t) {
    SubgroupCondition c;
    c.l = l;
    c.t = t;
    c.order = mult_order(l, t);
    c.contains_minus_one = c.order % 2 == 0;
    c.is_nonresidue = t > 2 && is_nonresidue(l, t);
    return c;
}

}  // namespace fltcert
