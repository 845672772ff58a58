#pragma once

// Bounded exhaustive search for X^t + Y^t = B Z^t: the empirical cross-check
// of every verdict. Evidence, not proof — claims never extend beyond the box.

#include "fltcert/arith.hpp"
#include "fltcert/hypotheses.hpp"

#include <algorithm>

namespace fltcert {

struct SolutionTriple {
    Int x;
    Int y;
    Int z;
    bool t_divides_z = false;

    bool operator==(const SolutionTriple&) const = default;
};

// All pairwise-coprime nonzero triples with max(|X|,|Y|) <= H, canonical
// representative Z > 0 (t odd, so each sign class has exactly one). Ordered
// by (|X|, |Y|, X, Y).
inline std::vector<SolutionTriple> find_solutions(long t, const Int& B, long H,
                                                  bool only_t_divides_z) {
    if (t < 5 || !is_prime(Int(t)))
        throw std::domain_error("find_solutions: t must be a prime >= 5");
    if (B == 0) throw std::domain_error("find_solutions: B must be nonzero");
    if (H < 1) throw std::domain_error("find_solutions: H must be >= 1");
    unsigned tu = static_cast<unsigned>(t);
    // t-th powers of 1..H, reused across the grid
    std::vector<Int> pow_abs(static_cast<std::size_t>(H) + 1);
    for (long i = 1; i <= H; ++i)
        pow_abs[static_cast<std::size_t>(i)] = boost::multiprecision::pow(Int(i), tu);
    std::vector<SolutionTriple> out;
    for (long x = -H; x <= H; ++x) {
        if (x == 0) continue;
        for (long y = -H; y <= H; ++y) {
            if (y == 0) continue;
            if (gcd(Int(x), Int(y)) != 1) continue;
            Int xp = x > 0 ? pow_abs[static_cast<std::size_t>(x)]
                           : -pow_abs[static_cast<std::size_t>(-x)];
            Int yp = y > 0 ? pow_abs[static_cast<std::size_t>(y)]
                           : -pow_abs[static_cast<std::size_t>(-y)];
            Int s = xp + yp;
            if (s == 0 || s % B != 0) continue;
            auto z = integer_root(s / B, tu);
            if (!z || *z <= 0) continue;  // Z > 0 is the canonical sign class
            if (gcd(Int(x), *z) != 1 || gcd(Int(y), *z) != 1) continue;
            bool tz = *z % t == 0;
            if (only_t_divides_z && !tz) continue;
            out.push_back({Int(x), Int(y), *z, tz});
        }
    }
    std::sort(out.begin(), out.end(), [](const SolutionTriple& a, const SolutionTriple& b) {
        return std::tuple(Int(abs(a.x)), Int(abs(a.y)), a.x, a.y) <
               std::tuple(Int(abs(b.x)), Int(abs(b.y)), b.x, b.y);
    });
    return out;
}

struct ConsistencyReport {
    HypothesisVerdict verdict;
    long bound = 0;
    std::vector<SolutionTriple> solutions;  // unfiltered, within the bound
    bool pass = true;
    std::string detail;
};

// Runs the verdict engine and then falsification: TheoremHolds must see no
// solution with t | Z, CorollaryHolds no solution at all. A contradiction is
// a bug or a disproof and is reported with full evidence.
inline ConsistencyReport consistency_check(long t, const Int& B, long H) {
    ConsistencyReport r;
    r.bound = H;
    r.verdict = evaluate_corollary(Int(t), B);
    r.solutions = find_solutions(t, B, H, false);
    switch (r.verdict.conclusion) {
        case Conclusion::CorollaryHolds: {
            r.pass = r.solutions.empty();
            r.detail = r.pass ? "no solutions within the bound, consistent with CorollaryHolds"
                              : "CONTRADICTION: solution found despite CorollaryHolds";
            break;
        }
        case Conclusion::TheoremHolds: {
            bool bad = std::any_of(r.solutions.begin(), r.solutions.end(),
                                   [](const SolutionTriple& s) { return s.t_divides_z; });
            r.pass = !bad;
            r.detail = r.pass ? "no solution with t | Z within the bound, consistent with TheoremHolds"
                              : "CONTRADICTION: solution with t | Z despite TheoremHolds";
            break;
        }
        case Conclusion::NotApplicable: {
            r.pass = true;
            r.detail = "hypotheses not satisfied; solutions within the bound reported only";
            break;
        }
    }
    return r;
}

}  // namespace fltcert
