// fltcert: certifies insolvability hypotheses for X^t + Y^t = B*Z^t.
//
// Subcommands: certify, scan, search, bernoulli, selftest.
// Exit codes: 0 CorollaryHolds, 10 TheoremHolds, 20 NotApplicable,
//             2 usage error, 3 I/O error, 4 identity-check failure.

#include "fltcert/certificate.hpp"
#include "fltcert/cyclotomic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace fltcert;

// cpp_int's string ctor throws runtime_error on junk; map that to usage errors
Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::domain_error("not an integer: " + s);
    }
}

int exit_code_for(Conclusion c) {
    switch (c) {
        case Conclusion::CorollaryHolds: return 0;
        case Conclusion::TheoremHolds: return 10;
        case Conclusion::NotApplicable: return 20;
    }
    return 20;
}

const char* human_conclusion(Conclusion c) {
    switch (c) {
        case Conclusion::CorollaryHolds:
            return "no solution in pairwise coprime nonzero integers";
        case Conclusion::TheoremHolds:
            return "no solution in pairwise coprime nonzero integers with t | Z";
        case Conclusion::NotApplicable:
            return "hypotheses not satisfied; nothing is asserted";
    }
    return "?";
}

int cmd_certify(const std::string& t_str, const std::string& B_str,
                std::optional<long> bound, bool theorem_only, bool full_scan) {
    Int t = parse_int(t_str), B = parse_int(B_str);
    Certificate c = make_certificate(t, B, theorem_only, bound, full_scan);
    std::cout << to_json(c).dump(2) << "\n";
    std::cerr << "conclusion: " << to_string(c.verdict.conclusion) << " -- "
              << human_conclusion(c.verdict.conclusion) << "\n";
    if (!c.verdict.all_hold())
        std::cerr << "first failing condition: " << c.verdict.first_failing() << "\n";
    if (c.search_evidence && !c.search_evidence->consistent) {
        std::cerr << "internal contradiction: " << c.search_evidence->detail << "\n";
        return 4;
    }
    return exit_code_for(c.verdict.conclusion);
}

int cmd_scan(const std::vector<std::string>& t_list, const std::string& b_lo_str,
             const std::string& b_hi_str, const std::string& output,
             const std::string& format, unsigned threads) {
    std::vector<Int> ts;
    for (const auto& s : t_list) ts.push_back(parse_int(s));
    Int b_lo = parse_int(b_lo_str), b_hi = parse_int(b_hi_str);
    auto records = run_scan(ts, b_lo, b_hi, threads);
    std::string rendered =
        format == "csv" ? render_scan_csv(records) : render_scan_jsonl(records);
    if (output.empty() || output == "-") {
        std::cout << rendered;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file: " << output << "\n";
            return 3;
        }
        f << rendered;
        if (!f) {
            std::cerr << "error: write failed: " << output << "\n";
            return 3;
        }
    }
    std::size_t corollary = 0, theorem = 0;
    for (const auto& r : records) {
        if (r.conclusion == Conclusion::CorollaryHolds) ++corollary;
        if (r.conclusion == Conclusion::TheoremHolds) ++theorem;
    }
    std::cerr << records.size() << " records: " << corollary << " CorollaryHolds, "
              << theorem << " TheoremHolds, "
              << records.size() - corollary - theorem << " NotApplicable\n";
    return 0;
}

int cmd_search(long t, const std::string& B_str, long bound, bool require_tz) {
    auto sols = find_solutions(t, parse_int(B_str), bound, require_tz);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sols) arr.push_back(to_json(s));
    std::cout << arr.dump(2) << "\n";
    std::cerr << sols.size() << " solution(s) with max(|X|,|Y|) <= " << bound << "\n";
    return 0;
}

int cmd_bernoulli(const std::string& t_str, unsigned exact_cap, bool full_scan) {
    Int t = parse_int(t_str);
    auto v = good_prime_check(t, full_scan, exact_cap);
    std::cout << to_json(v.report).dump(2) << "\n";
    std::cerr << "t = " << t.str() << ": iota = " << v.report.iota;
    if (!v.report.irregular_pairs.empty()) {
        std::cerr << ", irregular pairs:";
        for (unsigned k : v.report.irregular_pairs)
            std::cerr << " (" << t.str() << ", " << k << ")";
    }
    std::cerr << "; " << (v.is_good ? "good prime" : "not established good")
              << " (branch " << to_string(v.branch) << ")\n";
    for (const auto& a : v.assumptions) std::cerr << "assumption: " << a << "\n";
    return 0;
}

struct IdentityCheck {
    std::string name;
    bool ok;
};

int cmd_selftest(long t_max) {
    if (t_max < 5) {
        std::cerr << "error: --t-max must be at least 5\n";
        return 2;
    }
    std::vector<long> ts;
    for (long t : {5L, 7L, 11L, 13L})
        if (t <= t_max) ts.push_back(t);
    std::vector<IdentityCheck> checks;
    for (long t : ts) {
        checks.push_back({"t/lambda^((t-1)/2) is a real unit, t = " + std::to_string(t),
                          verify_t_over_lambda_unit(t)});
        bool delta_ok = true;
        for (long a = 1; a < t; ++a)
            for (long b = 1; b < t; ++b) {
                if ((a - b) % t == 0 || (a + b) % t == 0) continue;
                delta_ok = delta_ok && verify_delta_unit(t, a, b);
            }
        checks.push_back({"delta' is a real unit for all valid (a, b), t = " +
                              std::to_string(t), delta_ok});
        // alpha congruence on a deterministic sample
        bool alpha_ok = true;
        for (long x = 1; x <= 20 && alpha_ok; ++x)
            for (long y = -20; y <= 20; ++y) {
                if (y == 0 || x + y == 0) continue;
                if ((x + y) % t != 0 || gcd(Int(x), Int(y)) != 1) continue;
                alpha_ok = alpha_ok && alpha_congruence_check(t, x, y);
            }
        checks.push_back({"alpha == -y mod (1-zeta)^2 on sample pairs, t = " +
                              std::to_string(t), alpha_ok});
    }
    // cofactor coprimality on a deterministic sample
    for (auto [t, l] : std::vector<std::pair<long, long>>{{5, 2}, {5, 3}, {7, 3}, {7, 5}, {11, 2}}) {
        if (t > t_max) continue;
        bool ok = true;
        for (long x = -15; x <= 15 && ok; ++x)
            for (long y = -15; y <= 15; ++y) {
                if (x == 0 || y == 0 || x + y == 0) continue;
                if (gcd(Int(x), Int(y)) != 1) continue;
                ok = ok && cofactor_coprime_check(t, l, x, y);
            }
        checks.push_back({"l never divides (x^t+y^t)/(x+y) for coprime x, y; (t, l) = (" +
                              std::to_string(t) + ", " + std::to_string(l) + ")", ok});
    }
    bool all_ok = true;
    for (const auto& c : checks) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifies insolvability hypotheses for X^t + Y^t = B*Z^t"};
    app.require_subcommand(1);

    // certify
    std::string t_str, B_str;
    long bound = 0;
    bool theorem_only = false, full_scan = false;
    auto* certify = app.add_subcommand("certify", "evaluate all hypotheses for one (t, B)");
    certify->add_option("--t", t_str, "prime exponent t > 3")->required();
    certify->add_option("--B", B_str, "nonzero coefficient B")->required();
    auto* bound_opt = certify->add_option("--bound", bound,
                                          "cross-validate with exhaustive search up to this height");
    certify->add_flag("--theorem-only", theorem_only, "stop at the theorem-level conditions");
    certify->add_flag("--full-scan", full_scan, "force the complete B_{2nt} mod t^3 scan");

    // scan
    std::vector<std::string> scan_ts;
    std::string scan_b_lo, scan_b_hi, scan_output, scan_format = "json-lines";
    unsigned scan_threads = 0;
    auto* scan = app.add_subcommand("scan", "batch-evaluate a (t, B) grid");
    scan->add_option("--t", scan_ts, "exponents to scan")->required()->expected(-1);
    scan->add_option("--B-min", scan_b_lo, "lower end of the B range")->required();
    scan->add_option("--B-max", scan_b_hi, "upper end of the B range")->required();
    scan->add_option("--output", scan_output, "output path ('-' for stdout)");
    scan->add_option("--format", scan_format, "json-lines or csv")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    scan->add_option("--threads", scan_threads, "worker threads (FLT_CERT_THREADS overrides)");

    // search
    long search_t = 0, search_bound = 0;
    std::string search_B;
    bool require_tz = false;
    auto* search = app.add_subcommand("search", "exhaustive solution search within a box");
    search->add_option("--t", search_t, "prime exponent")->required();
    search->add_option("--B", search_B, "nonzero coefficient")->required();
    search->add_option("--bound", search_bound, "height bound on |X|, |Y|")->required();
    search->add_flag("--require-t-divides-z", require_tz, "only report solutions with t | Z");

    // bernoulli
    std::string bern_t;
    unsigned exact_cap = fltcert::kDefaultExactBernoulliCap;
    bool bern_full = false;
    auto* bern = app.add_subcommand("bernoulli", "irregular pairs and the good-prime check");
    bern->add_option("--t", bern_t, "prime t >= 5")->required();
    bern->add_option("--exact-cap", exact_cap, "cap on the exact-recurrence index");
    bern->add_flag("--full-scan", bern_full, "force the complete mod-t^3 scan");

    // selftest
    long t_max = 13;
    auto* self = app.add_subcommand("selftest", "verify the cyclotomic identity suite");
    self->add_option("--t-max", t_max, "largest exponent to exercise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (certify->parsed())
            return cmd_certify(t_str, B_str,
                               bound_opt->count() ? std::optional<long>(bound) : std::nullopt,
                               theorem_only, full_scan);
        if (scan->parsed())
            return cmd_scan(scan_ts, scan_b_lo, scan_b_hi, scan_output, scan_format,
                            scan_threads);
        if (search->parsed())
            return cmd_search(search_t, search_B, search_bound, require_tz);
        if (bern->parsed()) return cmd_bernoulli(bern_t, exact_cap, bern_full);
        if (self->parsed()) return cmd_selftest(t_max);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
