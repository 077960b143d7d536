#include "chromatlas/records.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "chromatlas/canonical.hpp"
#include "chromatlas/graph6.hpp"

namespace chromatlas {

namespace {

// canonical keys of Turan graphs, built on demand
const std::string& turan_key(int n, int r) {
    static std::map<std::pair<int, int>, std::string> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, r});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(n, r), canonical_graph6(turan(n, r))).first;
    return it->second;
}

bool is_turan_graph(const Graph& g, const std::string& canon_key) {
    int r = clique_number(g);
    if (r < 1) return false;
    return canon_key == turan_key(g.order(), r);
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

GraphRecord compute_record(const std::string& graph6_key, const Graph& g,
                           ChromaticCache* cache, const ChromaticPolynomial* precomputed) {
    GraphRecord r;
    r.graph6 = graph6_key;
    r.n = g.order();
    r.m = g.edge_count();

    ChromaticPolynomial p = precomputed ? *precomputed : chromatic_polynomial(g, cache);
    r.q = coefficient_vector(p, std::max(10, r.n));
    if (!is_log_concave(r.q))
        throw std::logic_error("coefficient vector not log-concave for " + graph6_key);
    if (!meredith_bound_check(r.q, r.m))
        throw std::logic_error("coefficient bound violated for " + graph6_key);

    r.sigma = variance_irregularity(g);
    r.sigma_f = r.sigma.to_double();
    r.eps_irr = spectral_irregularity(g);
    r.degree_gap = degree_gap(g);
    r.girth = girth(g);
    SubgraphCensus census = subgraph_census(g);
    r.t1 = census.triangles;
    r.t2 = census.induced_c4;
    r.t3 = census.k4;

    std::string canon_key = canonical_graph6(g);
    r.flags.threshold = is_threshold(g);
    if (is_connected(g)) {
        r.flags.in_j = in_family_J(g);
        r.flags.in_l = in_family_L(g);
    }
    r.flags.is_turan = is_turan_graph(g, canon_key);
    return r;
}

namespace {

// the graph6 alphabet (byte values 63..126) includes the backslash, the one
// character in that range JSON strings cannot hold verbatim
std::string escape_graph6(const std::string& key) {
    std::string out;
    out.reserve(key.size() + 2);
    for (char c : key) {
        if (c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string record_to_jsonl(const GraphRecord& r) {
    std::string out;
    out.reserve(256);
    out += "{\"graph6\":\"";
    out += escape_graph6(r.graph6);
    out += "\",\"n\":";
    out += std::to_string(r.n);
    out += ",\"m\":";
    out += std::to_string(r.m);
    out += ",\"q\":[";
    for (std::size_t i = 0; i < r.q.entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.q.entries[i]);
    }
    out += "],\"sigma\":\"";
    out += r.sigma.to_string();
    out += "\",\"sigma_f\":";
    out += format_double(r.sigma_f);
    out += ",\"eps_irr\":";
    out += format_double(r.eps_irr);
    out += ",\"degree_gap\":";
    out += std::to_string(r.degree_gap);
    out += ",\"girth\":";
    out += r.girth ? std::to_string(*r.girth) : "null";
    out += ",\"t1\":";
    out += std::to_string(r.t1);
    out += ",\"t2\":";
    out += std::to_string(r.t2);
    out += ",\"t3\":";
    out += std::to_string(r.t3);
    out += ",\"flags\":{\"threshold\":";
    out += r.flags.threshold ? "true" : "false";
    out += ",\"in_j\":";
    out += r.flags.in_j ? "true" : "false";
    out += ",\"in_l\":";
    out += r.flags.in_l ? "true" : "false";
    out += ",\"is_turan\":";
    out += r.flags.is_turan ? "true" : "false";
    out += ",\"chromatically_minimal\":";
    out += r.flags.chromatically_minimal ? "true" : "false";
    out += ",\"chromatically_maximal\":";
    out += r.flags.chromatically_maximal ? "true" : "false";
    out += "}}";
    return out;
}

GraphRecord record_from_jsonl(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    GraphRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.q.entries = j.at("q").get<std::vector<std::uint64_t>>();
    std::string sigma = j.at("sigma").get<std::string>();
    auto slash = sigma.find('/');
    if (slash == std::string::npos) throw std::runtime_error("bad sigma field");
    r.sigma = Rational::make(std::stoll(sigma.substr(0, slash)),
                             std::stoll(sigma.substr(slash + 1)));
    r.sigma_f = j.at("sigma_f").get<double>();
    r.eps_irr = j.at("eps_irr").get<double>();
    r.degree_gap = j.at("degree_gap").get<int>();
    if (!j.at("girth").is_null()) r.girth = j.at("girth").get<int>();
    r.t1 = j.at("t1").get<std::int64_t>();
    r.t2 = j.at("t2").get<std::int64_t>();
    r.t3 = j.at("t3").get<std::int64_t>();
    const auto& flags = j.at("flags");
    r.flags.threshold = flags.at("threshold").get<bool>();
    r.flags.in_j = flags.at("in_j").get<bool>();
    r.flags.in_l = flags.at("in_l").get<bool>();
    r.flags.is_turan = flags.at("is_turan").get<bool>();
    r.flags.chromatically_minimal = flags.at("chromatically_minimal").get<bool>();
    r.flags.chromatically_maximal = flags.at("chromatically_maximal").get<bool>();
    return r;
}

std::vector<GraphRecord> read_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open records file " + path);
    std::vector<GraphRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(record_from_jsonl(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

void write_records_file(const std::string& path, const std::vector<GraphRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write records file " + path);
    for (const GraphRecord& r : records) {
        out << record_to_jsonl(r);
        out << '\n';
    }
}

}  // namespace chromatlas
