#include "chromatlas/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>

#include "chromatlas/canonical.hpp"
#include "chromatlas/graph6.hpp"

namespace chromatlas {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("coefficient addition overflowed 64 bits");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("coefficient subtraction overflowed 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("coefficient multiplication overflowed 64 bits");
    return r;
}

// Dense polynomial, poly[k] = coefficient of x^k.
using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_sub(r[i], b[i]);
    return r;
}

// (x-1)^k expanded
Poly power_of_x_minus_one(int k) {
    Poly r{1};
    for (int i = 0; i < k; ++i) r = poly_mul(r, Poly{-1, 1});
    return r;
}

Poly poly_tree(int n) {
    Poly r = power_of_x_minus_one(n - 1);
    r.insert(r.begin(), 0);  // multiply by x
    return r;
}

Poly poly_cycle(int n) {
    Poly r = power_of_x_minus_one(n);
    std::int64_t sign = (n % 2 == 0) ? 1 : -1;
    r[1] = checked_add(r[1], sign);
    r[0] = checked_sub(r[0], sign);
    return r;
}

Poly poly_complete(int n) {
    Poly r{0, 1};  // x
    for (int k = 1; k < n; ++k) r = poly_mul(r, Poly{-k, 1});
    return r;
}

bool all_degrees_two(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Edge in the most triangles, ties broken by smallest (u,v).
std::pair<int, int> pick_edge(const Graph& g) {
    int best_u = -1, best_v = -1, best_t = -1;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            int t = std::popcount(static_cast<unsigned>(g.neighbors(u) & g.neighbors(v)));
            if (t > best_t) {
                best_t = t;
                best_u = u;
                best_v = v;
            }
        }
    return {best_u, best_v};
}

struct Engine {
    ChromaticCache* cache;

    Poly compute(const Graph& g) {
        if (is_connected(g)) return compute_connected(g);
        Poly r{1};
        for (const Graph& comp : connected_components(g))
            r = poly_mul(r, compute_connected(comp));
        return r;
    }

    Poly compute_connected(const Graph& g) {
        const int n = g.order();
        const int m = g.edge_count();
        if (n == 1) return Poly{0, 1};
        if (m == n * (n - 1) / 2) return poly_complete(n);
        if (m == n - 1) return poly_tree(n);
        if (n >= 3 && all_degrees_two(g)) return poly_cycle(n);

        Graph canon = canonical_form(g);
        std::string key = to_graph6(canon);
        if (cache) {
            Poly hit;
            if (cache->lookup(key, hit)) return hit;
        }
        auto [u, v] = pick_edge(canon);
        Poly deleted = compute(delete_edge(canon, u, v));
        Poly contracted = compute(contract_edge(canon, u, v));
        Poly r = poly_sub(deleted, contracted);
        if (cache) cache->store(key, r);
        return r;
    }
};

std::int64_t binomial_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    const unsigned __int128 cap = static_cast<unsigned __int128>(
        std::numeric_limits<std::int64_t>::max());
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > cap) return std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

ChromaticPolynomial::ChromaticPolynomial(int degree, std::vector<std::int64_t> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 1 || static_cast<int>(coeffs_.size()) != degree_)
        throw std::invalid_argument("coefficient list must have one entry per power n..1");
}

std::int64_t ChromaticPolynomial::coefficient(int power) const {
    if (power < 0 || power > degree_) throw std::out_of_range("power out of range");
    if (power == 0) return 0;
    return coeffs_[static_cast<std::size_t>(degree_ - power)];
}

ChromaticCache::ChromaticCache(std::size_t max_entries) : cap_(max_entries) {}

std::size_t ChromaticCache::shard_of(const std::string& key) const {
    return std::hash<std::string>{}(key) % kShards;
}

bool ChromaticCache::lookup(const std::string& key, std::vector<std::int64_t>& out) const {
    const Shard& s = shards_[shard_of(key)];
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
}

void ChromaticCache::store(const std::string& key, const std::vector<std::int64_t>& value) {
    if (count_.load(std::memory_order_relaxed) >= cap_) clear();
    Shard& s = shards_[shard_of(key)];
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.map.emplace(key, value).second)
        count_.fetch_add(1, std::memory_order_relaxed);
}

std::size_t ChromaticCache::size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        total += s.map.size();
    }
    return total;
}

void ChromaticCache::clear() {
    for (Shard& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        s.map.clear();
    }
    count_.store(0, std::memory_order_relaxed);
}

ChromaticPolynomial chromatic_polynomial(const Graph& g, ChromaticCache* cache) {
    Engine engine{cache};
    Poly p = engine.compute(g);
    const int n = g.order();
    p.resize(static_cast<std::size_t>(n) + 1, 0);
    if (p[0] != 0 || p[static_cast<std::size_t>(n)] != 1)
        throw std::logic_error("chromatic polynomial violates c_n = 1, c_0 = 0");
    std::vector<std::int64_t> descending(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) descending[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(n - i)];
    return ChromaticPolynomial(n, std::move(descending));
}

CoefficientVector coefficient_vector(const ChromaticPolynomial& p, int length) {
    if (length < p.degree())
        throw std::invalid_argument("padded length smaller than polynomial degree");
    CoefficientVector q;
    q.entries.resize(static_cast<std::size_t>(length), 0);
    for (int i = 0; i < p.degree(); ++i) {
        std::int64_t c = p.coefficients_descending()[static_cast<std::size_t>(i)];
        q.entries[static_cast<std::size_t>(i)] =
            static_cast<std::uint64_t>(c < 0 ? -c : c);
    }
    return q;
}

std::int64_t evaluate(const ChromaticPolynomial& p, std::int64_t k) {
    std::int64_t r = 0;
    for (std::int64_t c : p.coefficients_descending())
        r = checked_add(checked_mul(r, k), c);
    return checked_mul(r, k);  // the omitted constant term is zero
}

CheckReport check_meredith(const Graph& g, const ChromaticPolynomial& p) {
    CheckReport rep;
    if (!is_connected(g)) {
        rep.applicable = false;
        rep.detail = "not applicable: disconnected";
        return rep;
    }
    auto girth_value = girth(g);
    if (!girth_value) {
        rep.applicable = false;
        rep.detail = "not applicable: acyclic";
        return rep;
    }
    const int gv = *girth_value;
    const int m = g.edge_count();
    for (int i = 0; i < gv - 1; ++i) {
        std::int64_t expected = binomial_saturating(m, i);
        if (i % 2 == 1) expected = -expected;
        if (p.coefficient(p.degree() - i) != expected) {
            rep.passed = false;
            rep.detail = "c_{n-" + std::to_string(i) + "} != (-1)^i C(m,i)";
            return rep;
        }
    }
    std::int64_t shortest_cycles = count_cycles_of_length(g, gv);
    std::int64_t expected = binomial_saturating(m, gv - 1) - shortest_cycles;
    if ((gv - 1) % 2 == 1) expected = -expected;
    if (p.coefficient(p.degree() - (gv - 1)) != expected) {
        rep.passed = false;
        rep.detail = "girth coefficient mismatch at i = " + std::to_string(gv - 1);
    }
    return rep;
}

CheckReport check_farrell4(const Graph& g, const ChromaticPolynomial& p) {
    CheckReport rep;
    if (!is_connected(g)) {
        rep.applicable = false;
        rep.detail = "not applicable: disconnected";
        return rep;
    }
    const int n = g.order();
    const std::int64_t m = g.edge_count();
    SubgraphCensus census = subgraph_census(g);
    auto expect = [&](int i, std::int64_t value, const char* label) {
        if (n - i < 1) return true;  // coefficient does not exist
        if (p.coefficient(n - i) != value) {
            rep.passed = false;
            rep.detail = std::string(label) + " mismatch";
            return false;
        }
        return true;
    };
    if (!expect(0, 1, "c_n")) return rep;
    if (!expect(1, -m, "c_{n-1}")) return rep;
    if (!expect(2, binomial_saturating(static_cast<int>(m), 2) - census.triangles,
                "c_{n-2}"))
        return rep;
    std::int64_t c3 = -binomial_saturating(static_cast<int>(m), 3) +
                      (m - 2) * census.triangles + census.induced_c4 - 2 * census.k4;
    expect(3, c3, "c_{n-3}");
    return rep;
}

bool is_log_concave(const CoefficientVector& q) {
    std::size_t prefix = q.entries.size();
    for (std::size_t i = 0; i < q.entries.size(); ++i)
        if (q.entries[i] == 0) {
            prefix = i;
            break;
        }
    for (std::size_t i = 1; i + 1 < prefix; ++i) {
        unsigned __int128 outer = static_cast<unsigned __int128>(q.entries[i - 1]) *
                                  q.entries[i + 1];
        unsigned __int128 inner = static_cast<unsigned __int128>(q.entries[i]) *
                                  q.entries[i];
        if (outer > inner) return false;
    }
    return true;
}

bool meredith_bound_check(const CoefficientVector& q, int m) {
    for (std::size_t i = 0; i < q.entries.size(); ++i) {
        std::int64_t bound = binomial_saturating(m, static_cast<int>(i));
        if (q.entries[i] > static_cast<std::uint64_t>(bound)) return false;
    }
    return true;
}

}  // namespace chromatlas
