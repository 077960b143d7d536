// chromatlas: pipeline driver for the chromatic polynomial atlas.
// Subcommands: generate, chromatic, extremal, pca, ballmapper, verify,
// cache-compact. All stages are deterministic: byte-identical outputs for
// fixed inputs regardless of worker count.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <CLI11.hpp>

#include "chromatlas/ballmapper.hpp"
#include "chromatlas/canonical.hpp"
#include "chromatlas/chromatic.hpp"
#include "chromatlas/enumerate.hpp"
#include "chromatlas/extremal.hpp"
#include "chromatlas/graph6.hpp"
#include "chromatlas/parallel.hpp"
#include "chromatlas/pca.hpp"
#include "chromatlas/pointcloud.hpp"
#include "chromatlas/records.hpp"
#include "chromatlas/verify.hpp"

using namespace chromatlas;

namespace {

struct RunConfig {
    std::vector<int> orders;
    std::vector<double> epsilons;
    std::string mode = "fixed";
    std::string output_dir = ".";
    int workers = 1;
    std::string cache_path;
    std::uint64_t seed = 42;

    void validate() const {
        for (int n : orders)
            if (n < 1 || n > 10) throw CLI::ValidationError("orders must lie in 1..10");
        for (double e : epsilons)
            if (e <= 0) throw CLI::ValidationError("epsilons must be positive");
    }
};

std::string default_cache_path() {
    const char* dir = std::getenv("CHROMATLAS_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::string(dir) + "/chromatic.cache";
}

// ---------------------------------------------------------------------------
// persistent polynomial cache: "<canonical g6> <degree> <c_n> ... <c_1>"

using CoeffMap = std::unordered_map<std::string, std::vector<std::int64_t>>;

CoeffMap load_coeff_cache(const std::string& path) {
    CoeffMap map;
    if (path.empty()) return map;
    std::ifstream in(path);
    if (!in) return map;  // absent cache is an empty cache
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string key;
        int degree = 0;
        row >> key >> degree;
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree));
        for (auto& c : coeffs) row >> c;
        if (!row.fail()) map.emplace(std::move(key), std::move(coeffs));
    }
    return map;
}

void append_coeff_cache(const std::string& path,
                        const std::vector<std::pair<std::string, std::vector<std::int64_t>>>& rows) {
    if (path.empty() || rows.empty()) return;
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot append to cache " + path);
    for (const auto& [key, coeffs] : rows) {
        out << key << ' ' << coeffs.size();
        for (std::int64_t c : coeffs) out << ' ' << c;
        out << '\n';
    }
}

// ---------------------------------------------------------------------------

int cmd_generate(int order, const std::string& out_path, const std::string& scheme,
                 bool large) {
    if (order == 10 && !large)
        throw std::runtime_error("order 10 is a long batch; pass --large to confirm");
    AugmentationOrder aug = scheme == "reverse" ? AugmentationOrder::Reverse
                                                : AugmentationOrder::Forward;
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        out = &file;
    }
    std::size_t count = 0;
    enumerate_connected(order, [&](const Graph& g) {
        *out << to_graph6(g) << '\n';
        ++count;
    }, aug);
    std::cerr << count << " connected graphs of order " << order << "\n";
    return 0;
}

int cmd_chromatic(const std::string& in_path, const std::string& out_path, int workers,
                  const std::string& cache_path, bool self_check, bool large) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open " + in_path);
    std::vector<std::string> lines;
    std::vector<Graph> graphs;
    read_graph6_stream(in, [&](const Graph& g, std::size_t) {
        graphs.push_back(g);
        lines.push_back(to_graph6(g));
    });
    // keep the verbatim input text as the record key
    {
        std::ifstream reread(in_path);
        std::string line;
        std::size_t i = 0;
        while (std::getline(reread, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            lines[i++] = line;
        }
    }
    for (const Graph& g : graphs)
        if (g.order() == 10 && !large)
            throw std::runtime_error("order-10 input; pass --large to confirm");

    CoeffMap persisted = load_coeff_cache(cache_path);
    ChromaticCache memo;

    struct Row {
        std::string jsonl;
        std::string canon;
        std::vector<std::int64_t> coeffs;
        bool from_cache = false;
    };
    std::vector<Row> rows = parallel_ordered_map<Row>(
        graphs.size(), workers, [&](std::size_t i) {
            const Graph& g = graphs[i];
            Row row;
            row.canon = canonical_graph6(g);
            auto hit = persisted.find(row.canon);
            GraphRecord record;
            if (hit != persisted.end()) {
                row.from_cache = true;
                row.coeffs = hit->second;
                ChromaticPolynomial p(g.order(), row.coeffs);
                record = compute_record(lines[i], g, &memo, &p);
            } else {
                ChromaticPolynomial p = chromatic_polynomial(g, &memo);
                row.coeffs = p.coefficients_descending();
                record = compute_record(lines[i], g, &memo, &p);
            }
            if (self_check) {
                ChromaticPolynomial p(g.order(), row.coeffs);
                CheckReport farrell = check_farrell4(g, p);
                CheckReport meredith = check_meredith(g, p);
                if ((farrell.applicable && !farrell.passed) ||
                    (meredith.applicable && !meredith.passed))
                    throw std::runtime_error("self-check failed for " + lines[i]);
            }
            row.jsonl = record_to_jsonl(record);
            return row;
        });

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    std::vector<std::pair<std::string, std::vector<std::int64_t>>> to_append;
    std::unordered_set<std::string> appended;
    for (const Row& row : rows) {
        out << row.jsonl << '\n';
        if (!cache_path.empty() && !row.from_cache && appended.insert(row.canon).second)
            to_append.push_back({row.canon, row.coeffs});
    }
    append_coeff_cache(cache_path, to_append);
    std::cerr << rows.size() << " records written to " << out_path << "\n";
    return 0;
}

std::string join_vector(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_extremal(const std::string& in_path, const std::string& out_path,
                 const std::string& report_path) {
    std::vector<GraphRecord> records = read_records_file(in_path);
    std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i)
        groups[{records[i].n, records[i].m}].push_back(i);

    std::ofstream report;
    if (!report_path.empty()) {
        report.open(report_path, std::ios::binary);
        if (!report) throw std::runtime_error("cannot write " + report_path);
        report << "n,m,size,minimal_count,maximal_count,minimal_vectors,maximal_vectors,"
                  "minimal_witness,maximal_witness\n";
    }

    for (const auto& [key, indices] : groups) {
        std::vector<std::pair<std::string, CoefficientVector>> group;
        group.reserve(indices.size());
        for (std::size_t i : indices) group.push_back({records[i].graph6, records[i].q});
        ExtremalReport rep = pareto_extremal(key.first, key.second, group);
        std::set<std::string> minimal(rep.minimal_set.begin(), rep.minimal_set.end());
        std::set<std::string> maximal(rep.maximal_set.begin(), rep.maximal_set.end());
        for (std::size_t i : indices) {
            records[i].flags.chromatically_minimal = minimal.count(records[i].graph6) > 0;
            records[i].flags.chromatically_maximal = maximal.count(records[i].graph6) > 0;
        }
        if (report.is_open()) {
            std::string min_vecs, max_vecs;
            for (std::size_t i = 0; i < rep.minimal_vectors.size(); ++i)
                min_vecs += (i ? ";" : "") + join_vector(rep.minimal_vectors[i]);
            for (std::size_t i = 0; i < rep.maximal_vectors.size(); ++i)
                max_vecs += (i ? ";" : "") + join_vector(rep.maximal_vectors[i]);
            report << key.first << ',' << key.second << ',' << indices.size() << ','
                   << rep.minimal_set.size() << ',' << rep.maximal_set.size() << ",\""
                   << min_vecs << "\",\"" << max_vecs << "\","
                   << (rep.minimal_set.empty() ? "" : rep.minimal_set.front()) << ','
                   << (rep.maximal_set.empty() ? "" : rep.maximal_set.front()) << '\n';
        }
    }
    write_records_file(out_path, records);
    std::cerr << records.size() << " records flagged across " << groups.size()
              << " (n,m) groups\n";
    return 0;
}

std::vector<GraphRecord> filter_orders(std::vector<GraphRecord> records,
                                       const std::vector<int>& orders) {
    if (orders.empty()) return records;
    std::vector<GraphRecord> kept;
    for (auto& r : records)
        if (std::find(orders.begin(), orders.end(), r.n) != orders.end())
            kept.push_back(std::move(r));
    return kept;
}

// Normalize each order's rows against their own feature ranges.
PointCloud per_order_normalize(const std::vector<GraphRecord>& records,
                               const PointCloud& raw) {
    PointCloud out = raw;
    std::map<int, std::vector<std::size_t>> by_order;
    for (std::size_t i = 0; i < records.size(); ++i) by_order[records[i].n].push_back(i);
    for (const auto& [order, rows] : by_order) {
        for (std::size_t c = 0; c < raw.n_cols; ++c) {
            double lo = 0, hi = 0;
            bool first = true;
            for (std::size_t r : rows) {
                double v = std::log1p(raw.at(r, c));
                if (first) {
                    lo = hi = v;
                    first = false;
                } else {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            for (std::size_t r : rows) {
                double v = std::log1p(raw.at(r, c));
                out.at(r, c) = hi > lo ? (v - lo) / (hi - lo) : 0.0;
            }
        }
    }
    out.normalized = true;
    return out;
}

int cmd_pca(const std::string& in_path, const std::string& mode,
            const std::vector<int>& orders, const std::string& prefix, int components,
            bool per_order_norm) {
    std::vector<GraphRecord> records = filter_orders(read_records_file(in_path), orders);
    if (records.empty()) throw std::runtime_error("no records after order filtering");

    int pad = 10;
    for (const GraphRecord& r : records) pad = std::max(pad, r.n);
    CloudMode cloud_mode = mode == "mixed" ? CloudMode::MixedOrder : CloudMode::FixedOrder;
    PointCloud raw = build_point_cloud(records, cloud_mode, pad);
    PointCloud cloud = per_order_norm ? per_order_normalize(records, raw)
                                      : log_minmax_normalize(raw);
    PcaResult result = pca(cloud);
    const std::size_t p = cloud.n_cols;

    std::ofstream variance(prefix + "variance.csv", std::ios::binary);
    variance << "metric";
    for (std::size_t j = 0; j < p; ++j) variance << ",PC" << (j + 1);
    variance << "\neigenvalue";
    for (double v : result.eigenvalues) variance << ',' << format_double(v);
    variance << "\nnev";
    for (double v : result.nev) variance << ',' << format_double(v);
    variance << "\ncev";
    for (double v : result.cev) variance << ',' << format_double(v);
    variance << '\n';

    std::ofstream loadings(prefix + "loadings.csv", std::ios::binary);
    loadings << "component";
    for (const std::string& label : cloud.feature_labels) loadings << ',' << label;
    loadings << '\n';
    for (std::size_t j = 0; j < p; ++j) {
        loadings << "PC" << (j + 1);
        for (double v : result.loadings[j]) loadings << ',' << format_double(v);
        loadings << '\n';
    }

    int k = std::min<int>(components, static_cast<int>(p));
    std::vector<double> scores = project(cloud, result, k);
    std::ofstream sc(prefix + "scores.csv", std::ios::binary);
    sc << "graph6";
    for (int j = 0; j < k; ++j) sc << ",pc" << (j + 1);
    sc << ",m,sigma,eps_irr,degree_gap,threshold,minimal,maximal\n";
    for (std::size_t r = 0; r < records.size(); ++r) {
        sc << records[r].graph6;
        for (int j = 0; j < k; ++j)
            sc << ',' << format_double(scores[r * static_cast<std::size_t>(k) +
                                              static_cast<std::size_t>(j)]);
        sc << ',' << records[r].m << ',' << format_double(records[r].sigma_f) << ','
           << format_double(records[r].eps_irr) << ',' << records[r].degree_gap << ','
           << (records[r].flags.threshold ? 1 : 0) << ','
           << (records[r].flags.chromatically_minimal ? 1 : 0) << ','
           << (records[r].flags.chromatically_maximal ? 1 : 0) << '\n';
    }

    int dimension = 0;
    for (std::size_t j = 0; j < p; ++j)
        if (result.cev[j] >= 0.95) {
            dimension = static_cast<int>(j) + 1;
            break;
        }
    std::cout << "rows=" << cloud.n_rows << " features=" << p << " nev1="
              << format_double(result.nev.empty() ? 0.0 : result.nev[0])
              << " dimension(95%)=" << dimension << "\n";
    return 0;
}

int cmd_ballmapper(const std::string& in_path, double epsilon,
                   const std::vector<std::string>& colors, const std::string& json_path,
                   const std::string& dot_prefix, bool members, std::int64_t shuffle_seed) {
    std::vector<GraphRecord> records = read_records_file(in_path);
    if (records.empty()) throw std::runtime_error("no records");
    if (shuffle_seed >= 0) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(shuffle_seed));
        std::shuffle(records.begin(), records.end(), rng);
    }
    bool uniform = std::all_of(records.begin(), records.end(),
                               [&](const GraphRecord& r) { return r.n == records[0].n; });
    int pad = 10;
    for (const GraphRecord& r : records) pad = std::max(pad, r.n);
    PointCloud cloud = log_minmax_normalize(build_point_cloud(
        records, uniform ? CloudMode::FixedOrder : CloudMode::MixedOrder, pad));
    BallMapperGraph bm = nerve(cloud, epsilon);

    // optional PC scores for pc1/pc2 colorings
    std::vector<double> pc1, pc2;
    if (std::find(colors.begin(), colors.end(), "pc1") != colors.end() ||
        std::find(colors.begin(), colors.end(), "pc2") != colors.end()) {
        PcaResult result = pca(cloud);
        int k = cloud.n_cols >= 2 ? 2 : 1;
        std::vector<double> scores = project(cloud, result, k);
        pc1.resize(cloud.n_rows);
        pc2.assign(cloud.n_rows, 0.0);
        for (std::size_t r = 0; r < cloud.n_rows; ++r) {
            pc1[r] = scores[r * static_cast<std::size_t>(k)];
            if (k > 1) pc2[r] = scores[r * static_cast<std::size_t>(k) + 1];
        }
    }

    for (const std::string& name : colors) {
        std::vector<double> values(records.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            const GraphRecord& r = records[i];
            if (name == "m") values[i] = r.m;
            else if (name == "sigma") values[i] = r.sigma_f;
            else if (name == "eps_irr") values[i] = r.eps_irr;
            else if (name == "degree_gap") values[i] = r.degree_gap;
            else if (name == "t1") values[i] = static_cast<double>(r.t1);
            else if (name == "threshold") values[i] = r.flags.threshold ? 1.0 : 0.0;
            else if (name == "minimal") values[i] = r.flags.chromatically_minimal ? 1.0 : 0.0;
            else if (name == "maximal") values[i] = r.flags.chromatically_maximal ? 1.0 : 0.0;
            else if (name == "pc1") values[i] = pc1[i];
            else if (name == "pc2") values[i] = pc2[i];
            else if (name == "norm") {
                double s = 0;
                for (std::uint64_t e : r.q.entries) {
                    double d = static_cast<double>(e);
                    s += d * d;
                }
                values[i] = std::sqrt(s);
            } else {
                throw std::runtime_error("unknown coloring: " + name);
            }
        }
        color_by(bm, values, name);
    }

    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << ballmapper_to_json(bm, members) << '\n';
    }
    if (!dot_prefix.empty()) {
        if (bm.colorings.empty()) {
            std::ofstream out(dot_prefix + "size.dot", std::ios::binary);
            out << ballmapper_to_dot(bm, "");
        }
        for (const auto& [name, coloring] : bm.colorings) {
            std::ofstream out(dot_prefix + name + ".dot", std::ios::binary);
            out << ballmapper_to_dot(bm, name);
        }
    }
    std::cout << "balls=" << bm.landmarks.size() << " edges=" << bm.edges.size() << "\n";
    return 0;
}

int cmd_verify(const std::string& scope, const std::string& in_path) {
    VerifyOptions options = parse_verify_scope(scope);
    if (!in_path.empty()) options.records_path = in_path;
    VerifyResult result = run_verify(options, std::cout);
    std::cout << (result.all_passed ? "VERIFY PASS" : "VERIFY FAIL") << " ("
              << result.checks_run << " checks, " << result.failures << " failures)\n";
    return result.all_passed ? 0 : 1;
}

int cmd_cache_compact(const std::string& cache_path) {
    CoeffMap map = load_coeff_cache(cache_path);
    // rewrite with unique keys in sorted order
    std::vector<std::string> keys;
    keys.reserve(map.size());
    for (const auto& [k, v] : map) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot rewrite " + cache_path);
    for (const std::string& k : keys) {
        const auto& coeffs = map[k];
        out << k << ' ' << coeffs.size();
        for (std::int64_t c : coeffs) out << ' ' << c;
        out << '\n';
    }
    std::cerr << "compacted to " << keys.size() << " entries\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic polynomial atlas pipeline"};
    app.set_config("--config");
    app.require_subcommand(1);

    RunConfig config;

    auto* generate = app.add_subcommand("generate", "enumerate connected graphs");
    int gen_order = 0;
    std::string gen_out, gen_scheme = "forward";
    bool gen_large = false;
    generate->add_option("--order", gen_order, "graph order (1..10)")->required();
    generate->add_option("--out", gen_out, "output file (default stdout)");
    generate->add_option("--scheme", gen_scheme, "forward|reverse augmentation order")
        ->check(CLI::IsMember({"forward", "reverse"}));
    generate->add_flag("--large", gen_large, "confirm long order-10 batches");
    generate->add_option("--workers", config.workers, "accepted for pipeline symmetry");

    auto* chromatic = app.add_subcommand("chromatic", "compute records for a graph6 file");
    std::string chr_in, chr_out, chr_cache = default_cache_path();
    bool chr_self_check = false, chr_large = false;
    chromatic->add_option("--in", chr_in)->required();
    chromatic->add_option("--out", chr_out)->required();
    chromatic->add_option("--workers", config.workers, "worker threads");
    chromatic->add_option("--cache", chr_cache, "append-only polynomial cache file");
    chromatic->add_flag("--self-check", chr_self_check, "run coefficient oracles inline");
    chromatic->add_flag("--large", chr_large, "confirm order-10 inputs");

    auto* extremal = app.add_subcommand("extremal", "flag Pareto-extremal records");
    std::string ext_in, ext_out, ext_report;
    extremal->add_option("--in", ext_in)->required();
    extremal->add_option("--out", ext_out, "default: rewrite --in");
    extremal->add_option("--report", ext_report, "per-group CSV report");
    extremal->add_option("--workers", config.workers, "accepted for pipeline symmetry");

    auto* pca_cmd = app.add_subcommand("pca", "principal component analysis");
    std::string pca_in, pca_mode = "fixed", pca_prefix = "pca_";
    std::vector<int> pca_orders;
    int pca_components = 2;
    bool pca_per_order = false;
    pca_cmd->add_option("--in", pca_in)->required();
    pca_cmd->add_option("--mode", pca_mode)->check(CLI::IsMember({"fixed", "mixed"}));
    pca_cmd->add_option("--orders", pca_orders, "restrict to these orders")->delimiter(',');
    pca_cmd->add_option("--out-prefix", pca_prefix);
    pca_cmd->add_option("--components", pca_components, "score columns to export");
    pca_cmd->add_flag("--per-order-norm", pca_per_order,
                      "normalize each order separately (mixed clouds)");
    pca_cmd->add_option("--workers", config.workers, "accepted for pipeline symmetry");

    auto* bm_cmd = app.add_subcommand("ballmapper", "Ball Mapper cover and nerve");
    std::string bm_in, bm_json, bm_dot;
    double bm_eps = 0.0;
    std::vector<std::string> bm_colors;
    bool bm_members = false;
    std::int64_t bm_shuffle = -1;
    bm_cmd->add_option("--in", bm_in)->required();
    bm_cmd->add_option("--epsilon", bm_eps)->required()->check(CLI::PositiveNumber);
    bm_cmd->add_option("--color", bm_colors,
                       "m,sigma,eps_irr,degree_gap,t1,norm,threshold,minimal,maximal,pc1,pc2")
        ->delimiter(',');
    bm_cmd->add_option("--out-json", bm_json);
    bm_cmd->add_option("--out-dot", bm_dot, "prefix; one DOT per coloring");
    bm_cmd->add_flag("--members", bm_members, "list ball members in the JSON");
    bm_cmd->add_option("--shuffle-seed", bm_shuffle,
                       "optional seeded shuffle of the net order");
    bm_cmd->add_option("--workers", config.workers, "accepted for pipeline symmetry");

    auto* verify = app.add_subcommand("verify", "run the oracle suites");
    std::string ver_scope = "n<=6", ver_in;
    verify->add_option("--scope", ver_scope,
                       "e.g. \"n<=6\" or \"suites=compression, random=1000, random-n=8, seed=42\"");
    verify->add_option("--in", ver_in, "records file for the records suite");

    auto* compact = app.add_subcommand("cache-compact", "deduplicate the polynomial cache");
    std::string cmp_cache;
    compact->add_option("--cache", cmp_cache)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        config.validate();
        if (generate->parsed()) return cmd_generate(gen_order, gen_out, gen_scheme, gen_large);
        if (chromatic->parsed())
            return cmd_chromatic(chr_in, chr_out, config.workers, chr_cache, chr_self_check,
                                 chr_large);
        if (extremal->parsed())
            return cmd_extremal(ext_in, ext_out.empty() ? ext_in : ext_out, ext_report);
        if (pca_cmd->parsed())
            return cmd_pca(pca_in, pca_mode, pca_orders, pca_prefix, pca_components,
                           pca_per_order);
        if (bm_cmd->parsed())
            return cmd_ballmapper(bm_in, bm_eps, bm_colors, bm_json, bm_dot, bm_members,
                                  bm_shuffle);
        if (verify->parsed()) return cmd_verify(ver_scope, ver_in);
        if (compact->parsed()) return cmd_cache_compact(cmp_cache);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
