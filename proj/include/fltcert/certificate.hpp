#pragma once

// Machine-readable certificates and batch scan records. Certificates are
// self-contained: every verdict carries its conditions, evidence, and the
// assumptions imported from the literature.

#include "fltcert/bernoulli.hpp"
#include "fltcert/hypotheses.hpp"
#include "fltcert/search.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <thread>

namespace fltcert {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolchain = "fltcert 1.0";

struct SearchEvidence {
    long bound = 0;
    std::vector<SolutionTriple> solutions;
    bool consistent = true;
    std::string detail;

    bool operator==(const SearchEvidence&) const = default;
};

struct Certificate {
    std::string schema_version = kSchemaVersion;
    std::string timestamp;
    Int t;
    Int B;
    HypothesisVerdict verdict;
    IrregularityReport irregularity;
    std::optional<SearchEvidence> search_evidence;
    std::vector<std::string> assumptions;
    std::string toolchain = kToolchain;

    bool operator==(const Certificate&) const = default;
};

inline std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
    return buf;
}

// ---- JSON rendering -------------------------------------------------------

inline nlohmann::json to_json(const SolutionTriple& s) {
    return {{"X", s.x.str()}, {"Y", s.y.str()}, {"Z", s.z.str()},
            {"t_divides_Z", s.t_divides_z}};
}

inline SolutionTriple solution_from_json(const nlohmann::json& j) {
    SolutionTriple s;
    s.x = Int(j.at("X").get<std::string>());
    s.y = Int(j.at("Y").get<std::string>());
    s.z = Int(j.at("Z").get<std::string>());
    s.t_divides_z = j.at("t_divides_Z").get<bool>();
    return s;
}

inline nlohmann::json to_json(const HypothesisVerdict& v) {
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : v.conditions)
        conds.push_back({{"name", c.name}, {"holds", c.holds}, {"evidence", c.evidence}});
    return {{"t", v.t.str()}, {"B", v.B.str()}, {"conditions", conds},
            {"conclusion", to_string(v.conclusion)}, {"assumptions", v.assumptions}};
}

inline HypothesisVerdict verdict_from_json(const nlohmann::json& j) {
    HypothesisVerdict v;
    v.t = Int(j.at("t").get<std::string>());
    v.B = Int(j.at("B").get<std::string>());
    for (const auto& c : j.at("conditions"))
        v.conditions.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(),
                                c.at("evidence").get<std::string>()});
    auto conc = conclusion_from_string(j.at("conclusion").get<std::string>());
    if (!conc) throw std::runtime_error("verdict_from_json: unknown conclusion");
    v.conclusion = *conc;
    v.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    return v;
}

inline nlohmann::json to_json(const IrregularityReport& r) {
    nlohmann::json scan = nlohmann::json::array();
    for (const auto& [n, res] : r.scan_mod_t_cubed)
        scan.push_back({{"n", n}, {"residue", res.str()}});
    return {{"t", r.t.str()}, {"irregular_pairs", r.irregular_pairs}, {"iota", r.iota},
            {"scan_mod_t_cubed", scan}, {"vandiver_assumed", r.vandiver_assumed}};
}

inline IrregularityReport irregularity_from_json(const nlohmann::json& j) {
    IrregularityReport r;
    r.t = Int(j.at("t").get<std::string>());
    r.irregular_pairs = j.at("irregular_pairs").get<std::vector<unsigned>>();
    r.iota = j.at("iota").get<unsigned>();
    for (const auto& e : j.at("scan_mod_t_cubed"))
        r.scan_mod_t_cubed.emplace_back(e.at("n").get<unsigned>(),
                                        Int(e.at("residue").get<std::string>()));
    r.vandiver_assumed = j.at("vandiver_assumed").get<bool>();
    return r;
}

inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j = {{"schema_version", c.schema_version}, {"timestamp", c.timestamp},
                        {"t", c.t.str()}, {"B", c.B.str()}, {"verdict", to_json(c.verdict)},
                        {"irregularity", to_json(c.irregularity)},
                        {"assumptions", c.assumptions}, {"toolchain", c.toolchain}};
    if (c.search_evidence) {
        nlohmann::json sols = nlohmann::json::array();
        for (const auto& s : c.search_evidence->solutions) sols.push_back(to_json(s));
        j["search_evidence"] = {{"bound", c.search_evidence->bound}, {"solutions", sols},
                                {"consistent", c.search_evidence->consistent},
                                {"detail", c.search_evidence->detail}};
    }
    return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.schema_version = j.at("schema_version").get<std::string>();
    c.timestamp = j.at("timestamp").get<std::string>();
    c.t = Int(j.at("t").get<std::string>());
    c.B = Int(j.at("B").get<std::string>());
    c.verdict = verdict_from_json(j.at("verdict"));
    c.irregularity = irregularity_from_json(j.at("irregularity"));
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    c.toolchain = j.at("toolchain").get<std::string>();
    if (j.contains("search_evidence")) {
        SearchEvidence e;
        const auto& je = j.at("search_evidence");
        e.bound = je.at("bound").get<long>();
        for (const auto& s : je.at("solutions")) e.solutions.push_back(solution_from_json(s));
        e.consistent = je.at("consistent").get<bool>();
        e.detail = je.at("detail").get<std::string>();
        c.search_evidence = std::move(e);
    }
    return c;
}

// Assembles the full certificate for (t, B); optional bounded search.
inline Certificate make_certificate(const Int& t, const Int& B, bool theorem_only,
                                    std::optional<long> search_bound,
                                    bool full_scan = false) {
    Certificate c;
    c.timestamp = iso8601_now();
    c.t = t;
    c.B = B;
    c.verdict = theorem_only ? evaluate_theorem(t, B) : evaluate_corollary(t, B);
    c.assumptions = c.verdict.assumptions;
    if (t > 3 && is_prime(t)) {
        auto good = good_prime_check(t, full_scan);
        c.irregularity = good.report;
    } else {
        c.irregularity.t = t;
    }
    if (search_bound && t >= 5 && is_prime(t) && B != 0) {
        auto rep = consistency_check(static_cast<long>(t), B, *search_bound);
        SearchEvidence e;
        e.bound = *search_bound;
        e.solutions = rep.solutions;
        e.consistent = rep.pass;
        e.detail = rep.detail;
        c.search_evidence = std::move(e);
    }
    return c;
}

// ---- Batch scan -----------------------------------------------------------

struct ScanRecord {
    Int t;
    Int B;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::string first_failing;
    std::string branch;

    bool operator==(const ScanRecord&) const = default;
};

inline unsigned scan_thread_count(unsigned requested = 0) {
    if (const char* env = std::getenv("FLT_CERT_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    if (requested >= 1) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Deterministic: records are indexed t-major then B; workers fill disjoint
// slots of a preallocated vector, so thread count never changes the output.
inline std::vector<ScanRecord> run_scan(const std::vector<Int>& ts, const Int& b_lo,
                                        const Int& b_hi, unsigned threads = 0) {
    if (ts.empty() || b_hi < b_lo) throw std::domain_error("run_scan: empty range");
    std::vector<std::pair<Int, Int>> grid;
    for (const auto& t : ts)
        for (Int b = b_lo; b <= b_hi; ++b) grid.emplace_back(t, b);
    std::vector<ScanRecord> out(grid.size());
    unsigned n_threads = std::min<unsigned>(scan_thread_count(threads),
                                            static_cast<unsigned>(grid.size()));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& [t, b] = grid[i];
            ScanRecord r;
            r.t = t;
            r.B = b;
            auto v = evaluate_corollary(t, b);
            r.conclusion = v.conclusion;
            r.first_failing = v.first_failing();
            if (t > 3 && is_prime(t))
                r.branch = to_string(good_prime_check(t).branch);
            out[i] = std::move(r);
        }
    };
    if (n_threads <= 1) {
        work(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (grid.size() + n_threads - 1) / n_threads;
        for (unsigned k = 0; k < n_threads; ++k) {
            std::size_t lo = k * chunk, hi = std::min(grid.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

inline std::string render_scan_jsonl(const std::vector<ScanRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        nlohmann::json j = {{"t", r.t.str()}, {"B", r.B.str()},
                            {"conclusion", to_string(r.conclusion)},
                            {"first_failing", r.first_failing}, {"branch", r.branch}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

inline std::string render_scan_csv(const std::vector<ScanRecord>& records) {
    std::string out = "t,B,conclusion,first_failing,branch\n";
    for (const auto& r : records) {
        out += r.t.str() + "," + r.B.str() + "," + to_string(r.conclusion) + ",\"" +
               r.first_failing + "\"," + r.branch + "\n";
    }
    return out;
}

}  // namespace fltcert
