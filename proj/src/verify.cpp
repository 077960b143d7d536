#include "chromatlas/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "chromatlas/canonical.hpp"
#include "chromatlas/enumerate.hpp"
#include "chromatlas/extremal.hpp"
#include "chromatlas/graph6.hpp"
#include "chromatlas/records.hpp"

namespace chromatlas {

namespace {

struct SuiteStats {
    std::size_t checks = 0;
    std::size_t failures = 0;

    void expect(bool ok, std::ostream& log, const std::string& witness) {
        ++checks;
        if (!ok) {
            ++failures;
            log << "    FAIL " << witness << "\n";
        }
    }
};

bool wants(const VerifyOptions& o, const std::string& suite) {
    if (o.suites.empty()) return true;
    return std::find(o.suites.begin(), o.suites.end(), suite) != o.suites.end();
}

// Farrell, Meredith, Rota, sign alternation, bound, log-concavity.
SuiteStats suite_oracles(const VerifyOptions& o, std::ostream& log, ChromaticCache* cache) {
    SuiteStats stats;
    for (int n = 1; n <= o.max_n; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            std::string key = to_graph6(g);
            ChromaticPolynomial p = chromatic_polynomial(g, cache);
            CoefficientVector q = coefficient_vector(p, std::max(10, n));

            CheckReport farrell = check_farrell4(g, p);
            stats.expect(!farrell.applicable || farrell.passed, log,
                         key + " farrell: " + farrell.detail);
            CheckReport meredith = check_meredith(g, p);
            stats.expect(!meredith.applicable || meredith.passed, log,
                         key + " meredith: " + meredith.detail);
            stats.expect(evaluate(p, 0) == 0, log, key + " P(0) != 0");
            if (g.edge_count() >= 1)
                stats.expect(evaluate(p, 1) == 0, log, key + " P(1) != 0");
            bool signs = true;
            for (int i = 0; i < p.degree(); ++i) {
                std::int64_t c = p.coefficients_descending()[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                if ((i % 2 == 0) != (c > 0)) signs = false;
            }
            stats.expect(signs, log, key + " sign alternation");
            stats.expect(meredith_bound_check(q, g.edge_count()), log,
                         key + " coefficient bound");
            stats.expect(is_log_concave(q), log, key + " log-concavity");
        });
    }
    return stats;
}

SuiteStats suite_compression(const VerifyOptions& o, std::ostream& log,
                             ChromaticCache* cache) {
    SuiteStats stats;
    const int exhaustive_n = std::min(o.max_n, 6);
    for (int n = 2; n <= exhaustive_n; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            std::string key = to_graph6(g);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    CompressionCheck check = verify_compression_monotonicity(g, u, v, cache);
                    stats.expect(check.passed, log,
                                 key + " compress " + std::to_string(u) + "->" +
                                     std::to_string(v) + ": " + check.detail);
                }
        });
    }
    if (o.random_count > 0) {
        std::mt19937_64 rng(o.seed);
        const int n = o.random_n;
        for (int trial = 0; trial < o.random_count; ++trial) {
            Graph g(n);
            do {
                g = Graph(n);
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (rng() & 1) g.add_edge(a, b);
            } while (!is_connected(g));
            int u = static_cast<int>(rng() % static_cast<unsigned>(n));
            int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (u == v) v = (v + 1) % n;
            CompressionCheck check = verify_compression_monotonicity(g, u, v, cache);
            stats.expect(check.passed, log,
                         to_graph6(g) + " random compress " + std::to_string(u) + "->" +
                             std::to_string(v) + ": " + check.detail);
        }
    }
    return stats;
}

// J and L members are minimal in their (n, m) group and co-chromatic.
SuiteStats suite_minfam(const VerifyOptions& o, std::ostream& log, ChromaticCache* cache) {
    SuiteStats stats;
    for (int n = 1; n <= o.max_n; ++n) {
        std::map<int, std::vector<std::pair<std::string, CoefficientVector>>> groups;
        std::map<int, std::vector<std::string>> family_members;
        enumerate_connected(n, [&](const Graph& g) {
            std::string key = to_graph6(g);
            CoefficientVector q =
                coefficient_vector(chromatic_polynomial(g, cache), std::max(10, n));
            int m = g.edge_count();
            groups[m].push_back({key, q});
            if (in_family_J(g) || in_family_L(g)) family_members[m].push_back(key);
        });
        for (auto& [m, group] : groups) {
            auto fam = family_members.find(m);
            if (fam == family_members.end()) continue;
            ExtremalReport report = pareto_extremal(n, m, group);
            std::vector<CoefficientVector> fam_vectors;
            for (const std::string& key : fam->second) {
                bool minimal = std::find(report.minimal_set.begin(),
                                         report.minimal_set.end(),
                                         key) != report.minimal_set.end();
                stats.expect(minimal, log, key + " family member not minimal");
                for (const auto& [gkey, q] : group)
                    if (gkey == key) fam_vectors.push_back(q);
            }
            for (std::size_t i = 1; i < fam_vectors.size(); ++i)
                stats.expect(fam_vectors[i] == fam_vectors[0], log,
                             "family members of (" + std::to_string(n) + "," +
                                 std::to_string(m) + ") not co-chromatic");
        }
    }
    return stats;
}

SuiteStats suite_turan(const VerifyOptions& o, std::ostream& log, ChromaticCache* cache) {
    SuiteStats stats;
    for (int n = 2; n <= o.max_n; ++n) {
        std::map<int, std::vector<std::pair<std::string, CoefficientVector>>> groups;
        enumerate_connected(n, [&](const Graph& g) {
            CoefficientVector q =
                coefficient_vector(chromatic_polynomial(g, cache), std::max(10, n));
            groups[g.edge_count()].push_back({to_graph6(g), q});
        });
        for (int r = 2; r <= n; ++r) {
            Graph t = turan(n, r);
            std::string key = to_graph6(canonical_form(t));
            ExtremalReport report = pareto_extremal(n, t.edge_count(), groups[t.edge_count()]);
            bool maximal = std::find(report.maximal_set.begin(), report.maximal_set.end(),
                                     key) != report.maximal_set.end();
            stats.expect(maximal, log, "turan(" + std::to_string(n) + "," +
                                           std::to_string(r) + ") not maximal");
        }
    }
    return stats;
}

// sigma = 0 iff eps = 0 iff degree gap = 0; quasi-complete graphs threshold.
SuiteStats suite_irregularity(const VerifyOptions& o, std::ostream& log) {
    SuiteStats stats;
    for (int n = 1; n <= o.max_n; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            std::string key = to_graph6(g);
            bool sigma_zero = variance_irregularity(g).num == 0;
            bool eps_zero = spectral_irregularity(g) <= 1e-9;
            bool gap_zero = degree_gap(g) == 0;
            stats.expect(sigma_zero == eps_zero && eps_zero == gap_zero, log,
                         key + " irregularity measures disagree on regularity");
        });
    }
    for (int n = 2; n <= o.max_n; ++n)
        for (int m = n - 1; m <= n * (n - 1) / 2; ++m)
            stats.expect(is_threshold(quasi_complete(n, m)), log,
                         "quasi_complete(" + std::to_string(n) + "," + std::to_string(m) +
                             ") not threshold");
    return stats;
}

SuiteStats suite_records(const VerifyOptions& o, std::ostream& log,
                         ChromaticCache* cache) {
    SuiteStats stats;
    if (o.records_path.empty()) {
        log << "    (no records file given; skipping)\n";
        return stats;
    }
    std::vector<GraphRecord> records = read_records_file(o.records_path);
    std::mt19937_64 rng(o.seed);
    for (const GraphRecord& r : records) {
        if (o.sample < 1.0 &&
            std::uniform_real_distribution<double>(0.0, 1.0)(rng) > o.sample)
            continue;
        Graph g = from_graph6(r.graph6);
        bool ok = g.order() == r.n && g.edge_count() == r.m &&
                  degree_gap(g) == r.degree_gap;
        if (ok) {
            CoefficientVector q = coefficient_vector(chromatic_polynomial(g, cache),
                                                     static_cast<int>(r.q.entries.size()));
            ok = q == r.q;
        }
        stats.expect(ok, log, r.graph6 + " stored fields do not match recomputation");
    }
    return stats;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options, std::ostream& log,
                        ChromaticCache* cache) {
    ChromaticCache local_cache;
    if (cache == nullptr) cache = &local_cache;

    VerifyResult result;
    auto run = [&](const char* name, SuiteStats stats) {
        result.checks_run += stats.checks;
        result.failures += stats.failures;
        log << "  " << name << ": " << (stats.failures == 0 ? "pass" : "FAIL") << " ("
            << stats.checks << " checks, " << stats.failures << " failures)\n";
    };

    if (wants(options, "oracles")) run("oracles", suite_oracles(options, log, cache));
    if (wants(options, "compression"))
        run("compression", suite_compression(options, log, cache));
    if (wants(options, "minfam")) run("minfam", suite_minfam(options, log, cache));
    if (wants(options, "turan")) run("turan", suite_turan(options, log, cache));
    if (wants(options, "irregularity"))
        run("irregularity", suite_irregularity(options, log));
    if (wants(options, "records")) run("records", suite_records(options, log, cache));

    result.all_passed = result.failures == 0;
    return result;
}

VerifyOptions parse_verify_scope(const std::string& scope) {
    VerifyOptions options;
    std::string token;
    std::istringstream in(scope);
    auto handle = [&](std::string t) {
        if (t.empty()) return;
        if (t.rfind("n<=", 0) == 0) {
            options.max_n = std::stoi(t.substr(3));
        } else if (t.rfind("max-n=", 0) == 0) {
            options.max_n = std::stoi(t.substr(6));
        } else if (t.rfind("suites=", 0) == 0) {
            std::istringstream list(t.substr(7));
            std::string suite;
            while (std::getline(list, suite, '+'))
                if (!suite.empty()) options.suites.push_back(suite);
        } else if (t.rfind("random=", 0) == 0) {
            options.random_count = std::stoi(t.substr(7));
        } else if (t.rfind("random-n=", 0) == 0) {
            options.random_n = std::stoi(t.substr(9));
        } else if (t.rfind("seed=", 0) == 0) {
            options.seed = std::stoull(t.substr(5));
        } else if (t.rfind("sample=", 0) == 0) {
            options.sample = std::stod(t.substr(7));
        } else {
            throw std::invalid_argument("unknown scope token: " + t);
        }
    };
    while (std::getline(in, token, ',')) {
        // strip blanks, allow "; " separators too
        std::string cleaned;
        for (char c : token)
            if (c != ' ' && c != ';') cleaned.push_back(c);
        handle(cleaned);
    }
    return options;
}

}  // namespace chromatlas
