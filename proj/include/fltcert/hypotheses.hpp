#pragma once

// The verdict engine: evaluates every checkable hypothesis of the main
// theorem and its corollary for a given (t, B) and emits a structured
// certificate. Total functions: bad inputs become failed conditions.

#include "fltcert/arith.hpp"
#include "fltcert/bernoulli.hpp"
#include "fltcert/modgroup.hpp"

#include <sstream>

namespace fltcert {

struct Condition {
    std::string name;
    bool holds = false;
    std::string evidence;

    bool operator==(const Condition&) const = default;
};

enum class Conclusion { CorollaryHolds, TheoremHolds, NotApplicable };

inline const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::CorollaryHolds: return "CorollaryHolds";
        case Conclusion::TheoremHolds: return "TheoremHolds";
        case Conclusion::NotApplicable: return "NotApplicable";
    }
    return "?";
}

inline std::optional<Conclusion> conclusion_from_string(const std::string& s) {
    if (s == "CorollaryHolds") return Conclusion::CorollaryHolds;
    if (s == "TheoremHolds") return Conclusion::TheoremHolds;
    if (s == "NotApplicable") return Conclusion::NotApplicable;
    return std::nullopt;
}

struct HypothesisVerdict {
    Int t;
    Int B;
    std::vector<Condition> conditions;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::vector<std::string> assumptions;

    bool operator==(const HypothesisVerdict&) const = default;

    bool all_hold() const {
        for (const auto& c : conditions)
            if (!c.holds) return false;
        return true;
    }

    std::string first_failing() const {
        for (const auto& c : conditions)
            if (!c.holds) return c.name;
        return {};
    }
};

namespace detail {

// Structural conditions shared by theorem and corollary. Returns true when
// the expensive checks (good prime, subgroup) are worth running.
inline bool theorem_conditions(const Int& t, const Int& B, HypothesisVerdict& v,
                               unsigned cap) {
    bool t_ok = t > 3 && t < detail::miller_rabin_deterministic_bound() && is_prime(t);
    v.conditions.push_back({"t is a prime greater than 3", t_ok,
                            "t = " + t.str()});
    bool b_nonzero = B != 0;
    v.conditions.push_back({"B is nonzero", b_nonzero, "B = " + B.str()});
    bool coprime = t_ok && b_nonzero && gcd(B, t) == 1;
    v.conditions.push_back({"B is coprime to t", coprime,
                            b_nonzero && t_ok ? "gcd(|B|, t) = " + Int(gcd(B, t)).str()
                                              : "skipped: invalid t or B"});
    if (!(t_ok && b_nonzero && coprime)) {
        v.conditions.push_back({"t is a good prime", false, "skipped: invalid t or B"});
        v.conditions.push_back({"-1 mod t lies in <l mod t> for every prime l | B", false,
                                "skipped: invalid t or B"});
        return false;
    }
    auto good = good_prime_check(t, false, cap);
    {
        std::ostringstream ev;
        ev << "branch " << to_string(good.branch) << ", iota(t) = " << good.report.iota;
        if (!good.report.irregular_pairs.empty()) {
            ev << ", irregular pairs:";
            for (unsigned k : good.report.irregular_pairs) ev << ' ' << k;
        }
        v.conditions.push_back({"t is a good prime", good.is_good, ev.str()});
    }
    for (const auto& a : good.assumptions) v.assumptions.push_back(a);
    bool all_contain = true;
    std::ostringstream ev;
    auto fac = factorize(B);
    if (fac.factors.empty()) {
        ev << "B has no prime divisors";
    } else {
        bool first = true;
        for (const auto& [l, e] : fac.factors) {
            bool ok = contains_minus_one(l, t);
            all_contain = all_contain && ok;
            if (!first) ev << "; ";
            first = false;
            ev << "l = " << l.str() << ": ord(l mod t) = " << mult_order(l, t).str()
               << (ok ? " (even, contains -1)" : " (odd, omits -1)");
        }
    }
    v.conditions.push_back({"-1 mod t lies in <l mod t> for every prime l | B",
                            all_contain, ev.str()});
    return good.is_good;
}

}  // namespace detail

// Theorem-level check: TheoremHolds means the equation X^t + Y^t = B Z^t has
// no pairwise-coprime nonzero integer solution with t | Z.
inline HypothesisVerdict evaluate_theorem(const Int& t, const Int& B,
                                          unsigned cap = kDefaultExactBernoulliCap) {
    HypothesisVerdict v;
    v.t = t;
    v.B = B;
    detail::theorem_conditions(t, B, v, cap);
    v.conclusion = v.all_hold() ? Conclusion::TheoremHolds : Conclusion::NotApplicable;
    return v;
}

// Full check: CorollaryHolds means no pairwise-coprime nonzero solution at
// all. The divisor condition is reduced to prime divisors: residues r mod t^2
// with r^{t-1} == 1 form a subgroup, so a violating divisor exists iff a
// violating prime divisor does.
inline HypothesisVerdict evaluate_corollary(const Int& t, const Int& B,
                                            unsigned cap = kDefaultExactBernoulliCap) {
    HypothesisVerdict v;
    v.t = t;
    v.B = B;
    bool theorem_ok_prefix = detail::theorem_conditions(t, B, v, cap);
    std::size_t n_theorem = v.conditions.size();
    bool structurally_ok = t > 3 && B != 0 && is_prime(t) && gcd(B, t) == 1;
    if (structurally_ok) {
        Int phi = euler_phi(abs(B));
        v.conditions.push_back({"phi(|B|) is coprime to t", gcd(phi, t) == 1,
                                "phi(|B|) = " + phi.str()});
        bool b2 = b_vs_two_condition(B, t);
        Int t2 = t * t;
        v.conditions.push_back({"B^(t-1) differs from 2^(t-1) mod t^2", b2,
                                "B^(t-1) mod t^2 = " + powmod(B, t - 1, t2).str() +
                                    ", 2^(t-1) mod t^2 = " + powmod(2, t - 1, t2).str()});
        bool found = false;
        std::ostringstream ev;
        for (const auto& [r, e] : factorize(B).factors) {
            if (!fermat_quotient_is_trivial(r, t)) {
                found = true;
                ev << "witness r = " << r.str() << ": r^(t-1) mod t^2 = "
                   << powmod(r, t - 1, t2).str();
                break;
            }
        }
        if (!found) ev << "every prime divisor r of B has r^(t-1) == 1 mod t^2";
        v.conditions.push_back({"B has a divisor r with r^(t-1) != 1 mod t^2", found, ev.str()});
    } else {
        v.conditions.push_back({"phi(|B|) is coprime to t", false, "skipped: invalid t or B"});
        v.conditions.push_back({"B^(t-1) differs from 2^(t-1) mod t^2", false,
                                "skipped: invalid t or B"});
        v.conditions.push_back({"B has a divisor r with r^(t-1) != 1 mod t^2", false,
                                "skipped: invalid t or B"});
    }
    (void)theorem_ok_prefix;
    bool theorem_all = true;
    for (std::size_t i = 0; i < n_theorem; ++i) theorem_all = theorem_all && v.conditions[i].holds;
    if (v.all_hold()) {
        v.conclusion = Conclusion::CorollaryHolds;
        v.assumptions.push_back(kBennettCitation);
    } else if (theorem_all) {
        v.conclusion = Conclusion::TheoremHolds;
    } else {
        v.conclusion = Conclusion::NotApplicable;
    }
    return v;
}

}  // namespace fltcert
