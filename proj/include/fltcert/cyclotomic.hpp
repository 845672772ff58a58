#pragma once

// Exact arithmetic in Q(zeta_t) in the power basis 1, zeta, ..., zeta^{t-2},
// and machine checks of the algebraic identities the descent argument uses:
// (1-zeta)-valuations, the real units t/lambda^{(t-1)/2} and delta', the
// decomposition-group criterion, the cofactor coprimality lemma, and the
// alpha == -y congruence.

#include "fltcert/arith.hpp"
#include "fltcert/modgroup.hpp"

#include <algorithm>

namespace fltcert {

class CycElem {
public:
    // zero element of Q(zeta_t)
    explicit CycElem(long t) : t_(t), c_(static_cast<std::size_t>(t - 1)) {
        if (t < 3) throw std::domain_error("CycElem: t must be >= 3");
    }

    static CycElem from_rat(long t, const Rat& v) {
        CycElem e(t);
        e.c_[0] = v;
        return e;
    }

    static CycElem from_int(long t, const Int& v) { return from_rat(t, Rat(v)); }

    // zeta^e for any integer exponent (reduced mod t)
    static CycElem zeta_pow(long t, long e) {
        e %= t;
        if (e < 0) e += t;
        CycElem r(t);
        if (e < t - 1) {
            r.c_[static_cast<std::size_t>(e)] = 1;
        } else {
            // zeta^{t-1} = -(1 + zeta + ... + zeta^{t-2})
            for (auto& c : r.c_) c = -1;
        }
        return r;
    }

    static CycElem zeta(long t) { return zeta_pow(t, 1); }

    long t() const { return t_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
    }

    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](const Rat& x) { return denominator(x) == 1; });
    }

    // scalar iff all basis coefficients beyond 1 vanish
    bool is_scalar() const {
        return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
    }

    Rat scalar_value() const {
        if (!is_scalar()) throw std::logic_error("CycElem: not a scalar");
        return c_[0];
    }

    bool operator==(const CycElem& o) const { return t_ == o.t_ && c_ == o.c_; }

    CycElem operator-() const {
        CycElem r(t_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    CycElem operator+(const CycElem& o) const {
        check_same(o);
        CycElem r(t_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    CycElem operator-(const CycElem& o) const { return *this + (-o); }

    CycElem operator*(const CycElem& o) const {
        check_same(o);
        std::size_t n = c_.size();  // t-1
        // fold exponents mod t into buckets 0..t-1, then eliminate zeta^{t-1}
        std::vector<Rat> buckets(static_cast<std::size_t>(t_));
        for (std::size_t i = 0; i < n; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.c_[j] == 0) continue;
                buckets[(i + j) % static_cast<std::size_t>(t_)] += c_[i] * o.c_[j];
            }
        }
        return from_buckets(t_, buckets);
    }

    CycElem operator*(const Rat& s) const {
        CycElem r(t_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    // zeta -> zeta^a for a coprime to t; galois(t-1, .) is complex conjugation
    CycElem galois(long a) const {
        a %= t_;
        if (a < 0) a += t_;
        if (a == 0) throw std::domain_error("galois: exponent must be nonzero mod t");
        std::vector<Rat> buckets(static_cast<std::size_t>(t_));
        for (std::size_t i = 0; i < c_.size(); ++i)
            buckets[static_cast<std::size_t>((static_cast<long>(i) * a) % t_)] += c_[i];
        return from_buckets(t_, buckets);
    }

    CycElem conjugate() const { return galois(t_ - 1); }

    bool is_real() const { return conjugate() == *this; }

    // product of all conjugates; must collapse to a scalar
    Rat norm() const {
        CycElem p = *this;
        for (long a = 2; a < t_; ++a) p = p * galois(a);
        if (!p.is_scalar())
            throw std::logic_error("norm: product of conjugates is not scalar");
        return p.scalar_value();
    }

    bool is_unit() const {
        if (!is_integral()) throw std::domain_error("is_unit: element not integral");
        Rat n = norm();
        return n == 1 || n == -1;
    }

    // field inverse via extended Euclid against Phi_t over Q
    CycElem inverse() const {
        if (is_zero()) throw std::domain_error("inverse: zero element");
        std::vector<Rat> phi(static_cast<std::size_t>(t_), Rat(1));  // 1+x+...+x^{t-1}
        std::vector<Rat> a(c_.begin(), c_.end());
        trim(a);
        // maintain u with u*this == r (mod Phi)
        std::vector<Rat> r0 = phi, r1 = a;
        std::vector<Rat> u0 = {}, u1 = {Rat(1)};
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto u2 = poly_sub(u0, poly_mul(q, u1));
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        // r0 is a nonzero constant (Phi_t irreducible over Q)
        if (r0.size() != 1)
            throw std::logic_error("inverse: gcd with Phi_t is not constant");
        Rat g = r0[0];
        CycElem inv(t_);
        for (std::size_t i = 0; i < u0.size() && i < inv.c_.size(); ++i)
            inv.c_[i] = u0[i] / g;
        if (u0.size() > inv.c_.size())
            throw std::logic_error("inverse: cofactor degree out of range");
        return inv;
    }

private:
    long t_;
    std::vector<Rat> c_;

    void check_same(const CycElem& o) const {
        if (t_ != o.t_) throw std::domain_error("CycElem: mismatched t");
    }

    static CycElem from_buckets(long t, std::vector<Rat> buckets) {
        CycElem r(t);
        Rat top = buckets[static_cast<std::size_t>(t - 1)];
        for (std::size_t i = 0; i + 1 < buckets.size(); ++i)
            r.c_[i] = buckets[i] - top;
        return r;
    }

    static void trim(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    static std::vector<Rat> poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
        if (a.size() < b.size()) a.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        trim(a);
        return a;
    }

    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(
        std::vector<Rat> num, const std::vector<Rat>& den) {
        std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
        while (num.size() >= den.size() && !num.empty()) {
            Rat c = num.back() / den.back();
            std::size_t shift = num.size() - den.size();
            q[shift] = c;
            for (std::size_t i = 0; i < den.size(); ++i)
                num[shift + i] -= c * den[i];
            trim(num);
        }
        trim(q);
        return {q, num};
    }
};

inline CycElem cyc_add(const CycElem& a, const CycElem& b) { return a + b; }
inline CycElem cyc_mul(const CycElem& a, const CycElem& b) { return a * b; }
inline CycElem cyc_neg(const CycElem& a) { return -a; }
inline CycElem galois(long a, const CycElem& x) { return x.galois(a); }
inline Rat norm(const CycElem& x) { return x.norm(); }
inline bool is_unit(const CycElem& x) { return x.is_unit(); }
inline bool is_real(const CycElem& x) { return x.is_real(); }

inline CycElem one_minus_zeta(long t) {
    return CycElem::from_int(t, 1) - CycElem::zeta(t);
}

// lambda_c = (1 - zeta^c)(1 - zeta^{-c}), real by construction
inline CycElem lambda_elem(long t, long c = 1) {
    auto u = CycElem::from_int(t, 1) - CycElem::zeta_pow(t, c);
    auto v = CycElem::from_int(t, 1) - CycElem::zeta_pow(t, -c);
    return u * v;
}

// Largest k <= cap with (1-zeta)^k | x in Z[zeta], by repeated exact division.
inline unsigned one_minus_zeta_valuation(const CycElem& x, unsigned cap) {
    if (x.is_zero())
        throw std::domain_error("one_minus_zeta_valuation: zero has infinite valuation");
    if (!x.is_integral())
        throw std::domain_error("one_minus_zeta_valuation: element not integral");
    CycElem inv = one_minus_zeta(x.t()).inverse();
    CycElem y = x;
    unsigned k = 0;
    while (k < cap) {
        CycElem y2 = y * inv;
        if (!y2.is_integral()) break;
        y = std::move(y2);
        ++k;
    }
    return k;
}

inline unsigned default_valuation_cap(long t) { return 4 * static_cast<unsigned>(t - 1); }

// t / lambda^{(t-1)/2} must be an integral real unit (lambda = (1-zeta)(1-conj)).
inline bool verify_t_over_lambda_unit(long t) {
    if (t < 5 || !is_prime(Int(t)))
        throw std::domain_error("verify_t_over_lambda_unit: t must be a prime >= 5");
    CycElem lam = lambda_elem(t);
    CycElem pow = CycElem::from_int(t, 1);
    for (long i = 0; i < (t - 1) / 2; ++i) pow = pow * lam;
    CycElem eta = CycElem::from_int(t, t) * pow.inverse();
    return eta.is_integral() && eta.is_real() && eta.is_unit();
}

// delta' = lambda * (lambda_a^{-1} - lambda_b^{-1}); checks the closed form
// (zeta^{-b} - zeta^{-a})(zeta^{a+b} - 1) * lambda / (lambda_a lambda_b)
// and that delta' is an integral real unit.
inline bool verify_delta_unit(long t, long a, long b) {
    if (t < 5 || !is_prime(Int(t)))
        throw std::domain_error("verify_delta_unit: t must be a prime >= 5");
    if (a < 1 || a > t - 1 || b < 1 || b > t - 1)
        throw std::domain_error("verify_delta_unit: a, b must lie in 1..t-1");
    if ((a - b) % t == 0 || (a + b) % t == 0)
        throw std::domain_error("verify_delta_unit: b == +-a mod t");
    CycElem lam = lambda_elem(t);
    CycElem la = lambda_elem(t, a);
    CycElem lb = lambda_elem(t, b);
    CycElem delta = lam * (la.inverse() - lb.inverse());
    CycElem closed = (CycElem::zeta_pow(t, -b) - CycElem::zeta_pow(t, -a)) *
                     (CycElem::zeta_pow(t, a + b) - CycElem::from_int(t, 1)) * lam *
                     (la * lb).inverse();
    return delta == closed && delta.is_integral() && delta.is_real() && delta.is_unit();
}

struct SplittingData {
    Int l;
    Int t;
    Int residue_degree_f;
    Int num_primes_g;
    bool conjugation_in_decomposition = false;
};

// Unramified splitting of l in Q(zeta_t): f = ord(l mod t), g = (t-1)/f.
// The decomposition group contains complex conjugation iff -1 in <l mod t>.
inline SplittingData splitting_data(const Int& l, const Int& t) {
    if (l == t) throw std::domain_error("splitting_data: ramified case l == t");
    if (!is_prime(l) || !is_prime(t))
        throw std::domain_error("splitting_data: l and t must be prime");
    SplittingData d;
    d.l = l;
    d.t = t;
    d.residue_degree_f = mult_order(l, t);
    d.num_primes_g = (t - 1) / d.residue_degree_f;
    d.conjugation_in_decomposition = d.residue_degree_f % 2 == 0;
    return d;
}

// (x^t + y^t) / (x + y), exact for odd t and x + y != 0.
inline Int odd_power_cofactor(const Int& t, const Int& x, const Int& y) {
    if (x + y == 0) throw std::domain_error("odd_power_cofactor: x + y == 0");
    unsigned tt = static_cast<unsigned>(t);
    Int num = boost::multiprecision::pow(x, tt) + boost::multiprecision::pow(y, tt);
    Int q = num / (x + y);
    if (q * (x + y) != num) throw std::logic_error("odd_power_cofactor: inexact division");
    return q;
}

// Checks l does not divide (x^t + y^t)/(x + y); under the stated hypotheses
// (gcd(x,y)=1, -1 in <l mod t>) this is a theorem the suite property-tests.
inline bool cofactor_coprime_check(const Int& t, const Int& l, const Int& x, const Int& y) {
    if (!is_prime(t) || t < 5) throw std::domain_error("cofactor_coprime_check: bad t");
    if (!is_prime(l) || l == t) throw std::domain_error("cofactor_coprime_check: bad l");
    if (gcd(x, y) != 1) throw std::domain_error("cofactor_coprime_check: x, y not coprime");
    if (x + y == 0) throw std::domain_error("cofactor_coprime_check: x + y == 0");
    if (!contains_minus_one(l, t))
        throw std::domain_error("cofactor_coprime_check: -1 not in <l mod t>");
    return odd_power_cofactor(t, x, y) % l != 0;
}

// alpha = (x + zeta y)/(1 - zeta); checks alpha integral, (1-zeta)^2 | alpha + y
// and (1-zeta)^2 | conj(alpha) - alpha.
inline bool alpha_congruence_check(long t, const Int& x, const Int& y) {
    if (t < 5 || !is_prime(Int(t)))
        throw std::domain_error("alpha_congruence_check: t must be a prime >= 5");
    if (gcd(x, y) != 1) throw std::domain_error("alpha_congruence_check: x, y not coprime");
    if (x + y == 0) throw std::domain_error("alpha_congruence_check: x + y == 0");
    if ((x + y) % t != 0) throw std::domain_error("alpha_congruence_check: t must divide x + y");
    CycElem num = CycElem::from_int(t, x) + CycElem::zeta(t) * CycElem::from_int(t, y);
    CycElem alpha = num * one_minus_zeta(t).inverse();
    if (!alpha.is_integral()) return false;
    unsigned cap = default_valuation_cap(t);
    CycElem shifted = alpha + CycElem::from_int(t, y);
    if (!shifted.is_zero() && one_minus_zeta_valuation(shifted, cap) < 2) return false;
    CycElem diff = alpha.conjugate() - alpha;
    if (!diff.is_zero() && one_minus_zeta_valuation(diff, cap) < 2) return false;
    return true;
}

}  // namespace fltcert
