#include "chromatlas/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace chromatlas {

namespace {

inline std::uint16_t bit(int v) { return static_cast<std::uint16_t>(1u << v); }

inline int popcount(std::uint16_t x) { return std::popcount(x); }

inline int lowest(std::uint16_t x) { return std::countr_zero(x); }

}  // namespace

Graph::Graph(int order) : order_(order) {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be within 1.." +
                                    std::to_string(kMaxOrder));
}

Graph Graph::from_edges(int order,
                        std::initializer_list<std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < order_; ++v) total += popcount(adj_[v]);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    assert(u >= 0 && u < order_ && v >= 0 && v < order_);
    return (adj_[u] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
    assert(u >= 0 && u < order_ && v >= 0 && v < order_);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    assert(u >= 0 && u < order_ && v >= 0 && v < order_);
    adj_[u] &= static_cast<std::uint16_t>(~bit(v));
    adj_[v] &= static_cast<std::uint16_t>(~bit(u));
}

int Graph::degree(int v) const {
    assert(v >= 0 && v < order_);
    return popcount(adj_[v]);
}

std::uint16_t Graph::vertex_mask() const {
    return static_cast<std::uint16_t>((1u << order_) - 1u);
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.order());
    for (int v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
    return degs;
}

bool is_connected(const Graph& g) {
    std::uint16_t seen = bit(0);
    std::uint16_t frontier = bit(0);
    while (frontier) {
        std::uint16_t next = 0;
        while (frontier) {
            int v = lowest(frontier);
            frontier &= static_cast<std::uint16_t>(frontier - 1);
            next |= g.neighbors(v);
        }
        frontier = next & static_cast<std::uint16_t>(~seen);
        seen |= next;
    }
    return seen == g.vertex_mask();
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = n + 1;
    // BFS from every root; the minimum cycle estimate over all roots is the
    // girth since a shortest cycle is detected exactly from any of its
    // vertices.
    for (int root = 0; root < n; ++root) {
        std::array<int, kMaxOrder> dist{};
        std::array<int, kMaxOrder> parent{};
        dist.fill(-1);
        parent.fill(-1);
        dist[root] = 0;
        std::array<int, kMaxOrder> queue{};
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] >= best) break;
            std::uint16_t nb = g.neighbors(u);
            while (nb) {
                int w = lowest(nb);
                nb &= static_cast<std::uint16_t>(nb - 1);
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best > n) return std::nullopt;
    return best;
}

namespace {

void cycle_dfs(const Graph& g, int anchor, int current, std::uint16_t visited,
               int remaining, std::int64_t& found) {
    if (remaining == 0) {
        if (g.has_edge(current, anchor)) ++found;
        return;
    }
    std::uint16_t nb = g.neighbors(current) & static_cast<std::uint16_t>(~visited);
    // only vertices above the anchor may continue the path
    nb &= static_cast<std::uint16_t>(~((1u << (anchor + 1)) - 1u));
    while (nb) {
        int w = lowest(nb);
        nb &= static_cast<std::uint16_t>(nb - 1);
        cycle_dfs(g, anchor, w, static_cast<std::uint16_t>(visited | bit(w)),
                  remaining - 1, found);
    }
}

}  // namespace

std::int64_t count_cycles_of_length(const Graph& g, int k) {
    if (k < 3 || k > g.order())
        throw std::invalid_argument("cycle length out of range");
    std::int64_t doubled = 0;
    for (int anchor = 0; anchor + k <= g.order(); ++anchor) {
        // anchor is the smallest vertex of the cycle; each cycle is traced in
        // both directions, hence the final halving.
        cycle_dfs(g, anchor, anchor, bit(anchor), k - 1, doubled);
    }
    return doubled / 2;
}

SubgraphCensus subgraph_census(const Graph& g) {
    SubgraphCensus c;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            c.triangles += popcount(
                static_cast<std::uint16_t>(g.neighbors(i) & g.neighbors(j) &
                                           static_cast<std::uint16_t>(~((1u << (j + 1)) - 1u))));
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int cc = b + 1; cc < n; ++cc)
                for (int d = cc + 1; d < n; ++d) {
                    int e = g.has_edge(a, b) + g.has_edge(a, cc) + g.has_edge(a, d) +
                            g.has_edge(b, cc) + g.has_edge(b, d) + g.has_edge(cc, d);
                    if (e == 6) {
                        ++c.k4;
                    } else if (e == 4) {
                        // a 4-subset induces a pure square iff each vertex has
                        // induced degree 2
                        int da = g.has_edge(a, b) + g.has_edge(a, cc) + g.has_edge(a, d);
                        int db = g.has_edge(a, b) + g.has_edge(b, cc) + g.has_edge(b, d);
                        int dc = g.has_edge(a, cc) + g.has_edge(b, cc) + g.has_edge(cc, d);
                        int dd = g.has_edge(a, d) + g.has_edge(b, d) + g.has_edge(cc, d);
                        if (da == 2 && db == 2 && dc == 2 && dd == 2) ++c.induced_c4;
                    }
                }
    return c;
}

namespace {

void clique_search(const Graph& g, std::uint16_t candidates, int size, int& best) {
    if (size + popcount(candidates) <= best) return;
    if (!candidates) {
        best = std::max(best, size);
        return;
    }
    while (candidates) {
        if (size + popcount(candidates) <= best) return;
        int v = lowest(candidates);
        candidates &= static_cast<std::uint16_t>(candidates - 1);
        clique_search(g, static_cast<std::uint16_t>(candidates & g.neighbors(v)),
                      size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    clique_search(g, g.vertex_mask(), 0, best);
    return best;
}

namespace {

struct BlockDfs {
    const Graph& g;
    BlockDecomposition& out;
    std::array<int, kMaxOrder> disc{};
    std::array<int, kMaxOrder> low{};
    std::array<int, kMaxOrder> parent{};
    std::vector<std::pair<int, int>> stack;
    int timer = 0;

    explicit BlockDfs(const Graph& graph, BlockDecomposition& result)
        : g(graph), out(result) {
        disc.fill(-1);
        parent.fill(-1);
    }

    void pop_block(int u, int v) {
        Block b;
        while (!stack.empty()) {
            auto e = stack.back();
            if (e.first == u && e.second == v) break;
            stack.pop_back();
            b.edges.push_back(e);
            b.vertices |= bit(e.first);
            b.vertices |= bit(e.second);
        }
        stack.pop_back();
        b.edges.push_back({u, v});
        b.vertices |= bit(u);
        b.vertices |= bit(v);
        std::reverse(b.edges.begin(), b.edges.end());
        if (b.edges.size() == 1) out.bridges.push_back(b.edges.front());
        out.blocks.push_back(std::move(b));
    }

    void visit(int u) {
        disc[u] = low[u] = timer++;
        int children = 0;
        std::uint16_t nb = g.neighbors(u);
        while (nb) {
            int v = lowest(nb);
            nb &= static_cast<std::uint16_t>(nb - 1);
            if (disc[v] < 0) {
                ++children;
                parent[v] = u;
                stack.push_back({u, v});
                visit(v);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent[u] >= 0 || children > 1) out.cut_vertices |= bit(u);
                    pop_block(u, v);
                }
            } else if (v != parent[u] && disc[v] < disc[u]) {
                stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    BlockDecomposition out;
    BlockDfs dfs(g, out);
    dfs.visit(0);
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph r = g;
    r.remove_edge(u, v);
    return r;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    int keep = std::min(u, v);
    int drop = std::max(u, v);
    Graph r(g.order() - 1);
    auto remap = [drop](int w) { return w < drop ? w : w - 1; };
    for (int a = 0; a < g.order(); ++a) {
        if (a == drop) continue;
        std::uint16_t nb = g.neighbors(a);
        while (nb) {
            int b = lowest(nb);
            nb &= static_cast<std::uint16_t>(nb - 1);
            if (b <= a || b == drop) continue;
            if (remap(a) != remap(b)) r.add_edge(remap(a), remap(b));
        }
    }
    // the merged vertex inherits drop's neighbourhood
    std::uint16_t nb = g.neighbors(drop);
    while (nb) {
        int b = lowest(nb);
        nb &= static_cast<std::uint16_t>(nb - 1);
        if (b == keep) continue;
        if (remap(b) != keep) r.add_edge(keep, remap(b));
    }
    return r;
}

Graph delete_vertex(const Graph& g, int v) {
    if (g.order() < 2) throw std::invalid_argument("cannot delete the last vertex");
    Graph r(g.order() - 1);
    auto remap = [v](int w) { return w < v ? w : w - 1; };
    for (int a = 0; a < g.order(); ++a) {
        if (a == v) continue;
        std::uint16_t nb = g.neighbors(a);
        while (nb) {
            int b = lowest(nb);
            nb &= static_cast<std::uint16_t>(nb - 1);
            if (b <= a || b == v) continue;
            r.add_edge(remap(a), remap(b));
        }
    }
    return r;
}

Graph induced_subgraph(const Graph& g, std::uint16_t mask) {
    int count = popcount(mask);
    if (count < 1) throw std::invalid_argument("empty vertex subset");
    std::array<int, kMaxOrder> remap{};
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (mask & bit(v)) remap[v] = next++;
    Graph r(count);
    for (int a = 0; a < g.order(); ++a) {
        if (!(mask & bit(a))) continue;
        std::uint16_t nb = static_cast<std::uint16_t>(g.neighbors(a) & mask);
        while (nb) {
            int b = lowest(nb);
            nb &= static_cast<std::uint16_t>(nb - 1);
            if (b > a) r.add_edge(remap[a], remap[b]);
        }
    }
    return r;
}

Graph complement(const Graph& g) {
    Graph r(g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (!g.has_edge(a, b)) r.add_edge(a, b);
    return r;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    Graph r(g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.has_edge(a, b)) r.add_edge(perm[a], perm[b]);
    return r;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> comps;
    std::uint16_t remaining = g.vertex_mask();
    while (remaining) {
        int start = lowest(remaining);
        std::uint16_t seen = bit(start);
        std::uint16_t frontier = bit(start);
        while (frontier) {
            std::uint16_t next = 0;
            while (frontier) {
                int v = lowest(frontier);
                frontier &= static_cast<std::uint16_t>(frontier - 1);
                next |= g.neighbors(v);
            }
            frontier = next & static_cast<std::uint16_t>(~seen);
            seen |= next;
        }
        comps.push_back(induced_subgraph(g, seen));
        remaining &= static_cast<std::uint16_t>(~seen);
    }
    return comps;
}

}  // namespace chromatlas
