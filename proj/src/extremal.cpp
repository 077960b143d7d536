#include "chromatlas/extremal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "chromatlas/jacobi.hpp"

namespace chromatlas {

namespace {

inline std::uint16_t bit(int v) { return static_cast<std::uint16_t>(1u << v); }

std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}

Rational variance_irregularity(const Graph& g) {
    const std::int64_t n = g.order();
    std::int64_t sum = 0, sum_sq = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::int64_t d = g.degree(v);
        sum += d;
        sum_sq += d * d;
    }
    return Rational::make(n * sum_sq - sum * sum, n * n);
}

double spectral_irregularity(const Graph& g) {
    const int n = g.order();
    std::vector<double> adj(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) adj[static_cast<std::size_t>(i) * n + j] = 1.0;
    EigenDecomposition eig = jacobi_eigen(adj, n, 1e-12, 100);
    double lambda1 = eig.values[0];
    for (double v : eig.values) lambda1 = std::max(lambda1, v);
    double avg_degree = 2.0 * g.edge_count() / n;
    return lambda1 - avg_degree;
}

int degree_gap(const Graph& g) {
    int lo = g.degree(0), hi = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return hi - lo;
}

bool is_threshold(const Graph& g) {
    std::uint16_t active = g.vertex_mask();
    int count = g.order();
    while (count > 0) {
        int found = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (!(active & bit(v))) continue;
            int d = std::popcount(static_cast<unsigned>(g.neighbors(v) & active));
            if (d == 0 || d == count - 1) {
                found = v;
                break;
            }
        }
        if (found < 0) return false;
        active &= static_cast<std::uint16_t>(~bit(found));
        --count;
    }
    return true;
}

Graph compress(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("compression endpoints must differ");
    std::uint16_t movers = static_cast<std::uint16_t>(
        g.neighbors(u) & ~g.neighbors(v) & ~bit(v));
    Graph r = g;
    while (movers) {
        int x = std::countr_zero(movers);
        movers &= static_cast<std::uint16_t>(movers - 1);
        r.remove_edge(x, u);
        r.add_edge(x, v);
    }
    return r;
}

CompressionCheck verify_compression_monotonicity(const Graph& g, int u, int v,
                                                 ChromaticCache* cache) {
    CompressionCheck check;
    Graph compressed = compress(g, u, v);

    ChromaticPolynomial before = chromatic_polynomial(g, cache);
    ChromaticPolynomial after = chromatic_polynomial(compressed, cache);
    for (int power = 1; power <= before.degree(); ++power) {
        std::int64_t a = before.coefficient(power);
        std::int64_t b = after.coefficient(power);
        if (std::abs(b) > std::abs(a)) {
            check.coefficients_ok = false;
            check.detail = "coefficient of x^" + std::to_string(power) + " grew";
            break;
        }
    }
    if (variance_irregularity(compressed) < variance_irregularity(g)) {
        check.sigma_ok = false;
        check.detail += std::string(check.detail.empty() ? "" : "; ") + "sigma decreased";
    }
    if (spectral_irregularity(compressed) < spectral_irregularity(g) - 1e-9) {
        check.eps_ok = false;
        check.detail += std::string(check.detail.empty() ? "" : "; ") + "epsilon decreased";
    }
    check.passed = check.coefficients_ok && check.sigma_ok && check.eps_ok;
    return check;
}

Graph quasi_complete(int n, int m) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("order out of range");
    const std::int64_t max_m = binom2(n);
    if (m < n - 1 || m > max_m)
        throw std::invalid_argument("no connected graph with that many edges");
    Graph g(n);
    if (m == max_m) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    // Largest clique d such that the remaining edges cover one partial vertex
    // plus one pendant edge per leftover vertex.
    int d = -1;
    std::int64_t t = 0;
    for (int cand = n - 1; cand >= 1; --cand) {
        std::int64_t rem = m - binom2(cand) - (n - cand - 1);
        if (rem >= 1) {
            d = cand;
            t = rem;
            break;
        }
    }
    if (d < 0 || t > d - 1) throw std::invalid_argument("infeasible (n, m) decomposition");
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) g.add_edge(i, j);
    for (int i = 0; i < t; ++i) g.add_edge(d, i);
    for (int v = d + 1; v < n; ++v) g.add_edge(v, 0);
    return g;
}

namespace {

// Ahlswede-Katona quasi-complete core: greedy clique packing of m edges,
// leftover vertices isolated. May be disconnected; used under complement.
Graph quasi_complete_core(int n, std::int64_t m) {
    Graph g(n);
    if (m == 0) return g;
    int d = 2;
    while (d + 1 <= n && binom2(d + 1) <= m) ++d;
    std::int64_t t = m - binom2(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) g.add_edge(i, j);
    for (int i = 0; i < t; ++i) g.add_edge(d, i);
    return g;
}

}  // namespace

Graph quasi_star(int n, int m) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("order out of range");
    const std::int64_t max_m = binom2(n);
    if (m < n - 1 || m > max_m)
        throw std::invalid_argument("no connected graph with that many edges");
    return complement(quasi_complete_core(n, max_m - m));
}

Graph turan(int n, int r) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("order out of range");
    if (r < 1 || r > n) throw std::invalid_argument("part count out of range");
    std::vector<int> part(static_cast<std::size_t>(n));
    int base = n / r, rem = n % r;
    int v = 0;
    for (int p = 0; p < r; ++p) {
        int size = base + (p < rem ? 1 : 0);
        for (int i = 0; i < size; ++i) part[static_cast<std::size_t>(v++)] = p;
    }
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)])
                g.add_edge(a, b);
    return g;
}

bool in_family_J(const Graph& g) {
    if (g.order() == 1) return true;
    for (const Block& b : block_decomposition(g).blocks) {
        int size = std::popcount(static_cast<unsigned>(b.vertices));
        if (static_cast<std::int64_t>(b.edges.size()) != binom2(size)) return false;
    }
    return true;
}

bool in_family_L(const Graph& g) {
    if (g.order() == 1) return true;
    BlockDecomposition dec = block_decomposition(g);
    const Block* big = nullptr;
    for (const Block& b : dec.blocks) {
        if (std::popcount(static_cast<unsigned>(b.vertices)) <= 2) continue;
        if (big != nullptr) return false;  // more than one non-K2 block
        big = &b;
    }
    if (big == nullptr) return true;  // all blocks are bridges
    Graph sub = induced_subgraph(g, big->vertices);
    return clique_number(sub) >= sub.order() - 1;
}

PosetRelation poset_compare(const CoefficientVector& qh, const CoefficientVector& qg) {
    if (qh.entries.size() != qg.entries.size())
        throw std::invalid_argument("coefficient vectors must have equal length");
    bool le = true, ge = true;
    for (std::size_t i = 0; i < qh.entries.size(); ++i) {
        if (qh.entries[i] > qg.entries[i]) le = false;
        if (qh.entries[i] < qg.entries[i]) ge = false;
    }
    if (le && ge) return PosetRelation::Equal;
    if (le) return PosetRelation::LessOrEqual;
    if (ge) return PosetRelation::GreaterOrEqual;
    return PosetRelation::Incomparable;
}

namespace {

using Vec = std::vector<std::uint64_t>;

bool dominates_le(const Vec& a, const Vec& b) {  // a <= b componentwise
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Distinct vectors that are not strictly dominated from below (resp. above).
std::vector<Vec> frontier_minimal(std::vector<Vec> distinct) {
    std::sort(distinct.begin(), distinct.end());
    std::vector<Vec> frontier;
    for (const Vec& v : distinct) {
        bool dominated = false;
        for (const Vec& f : frontier)
            if (dominates_le(f, v)) {
                dominated = true;
                break;
            }
        if (!dominated) frontier.push_back(v);
    }
    return frontier;
}

std::vector<Vec> frontier_maximal(std::vector<Vec> distinct) {
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    std::vector<Vec> frontier;
    for (const Vec& v : distinct) {
        bool dominated = false;
        for (const Vec& f : frontier)
            if (dominates_le(v, f)) {
                dominated = true;
                break;
            }
        if (!dominated) frontier.push_back(v);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

}  // namespace

ExtremalReport pareto_extremal(
    int n, int m, const std::vector<std::pair<std::string, CoefficientVector>>& group) {
    ExtremalReport report;
    report.n = n;
    report.m = m;
    if (group.empty()) return report;

    std::vector<Vec> distinct;
    distinct.reserve(group.size());
    for (const auto& [key, q] : group) distinct.push_back(q.entries);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    report.minimal_vectors = frontier_minimal(distinct);
    report.maximal_vectors = frontier_maximal(distinct);

    auto contains = [](const std::vector<Vec>& set, const Vec& v) {
        return std::binary_search(set.begin(), set.end(), v);
    };
    for (const auto& [key, q] : group) {
        if (contains(report.minimal_vectors, q.entries)) report.minimal_set.push_back(key);
        if (contains(report.maximal_vectors, q.entries)) report.maximal_set.push_back(key);
    }
    return report;
}

}  // namespace chromatlas
