#include "chromatlas/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "chromatlas/graph6.hpp"

namespace chromatlas {

namespace {

using Cells = std::vector<std::vector<int>>;

// Upper-triangle bits packed into two words, column-major like graph6,
// MSB-first so lexicographic comparison is plain word comparison.
struct BitString {
    std::array<std::uint64_t, 2> words{};

    void set(int idx) { words[idx >> 6] |= 1ULL << (63 - (idx & 63)); }

    // compare the first nbits against other; <0, 0, >0
    int compare_prefix(const BitString& other, int nbits) const {
        for (int w = 0; w < 2 && nbits > 0; ++w, nbits -= 64) {
            std::uint64_t mask = nbits >= 64 ? ~0ULL : ~0ULL << (64 - nbits);
            std::uint64_t a = words[w] & mask;
            std::uint64_t b = other.words[w] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }
};

inline int bit_index(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint16_t cell_mask(const std::vector<int>& cell) {
    std::uint16_t m = 0;
    for (int v : cell) m |= static_cast<std::uint16_t>(1u << v);
    return m;
}

// One pass of equitable refinement; returns true if any cell was split.
bool refine_once(const Graph& g, Cells& cells) {
    for (std::size_t s = 0; s < cells.size(); ++s) {
        std::uint16_t target = cell_mask(cells[s]);
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() < 2) continue;
            std::map<int, std::vector<int>> groups;
            for (int v : cells[ci])
                groups[std::popcount(static_cast<unsigned>(g.neighbors(v) & target))]
                    .push_back(v);
            if (groups.size() < 2) continue;
            Cells replacement;
            replacement.reserve(groups.size());
            for (auto& [count, vs] : groups) replacement.push_back(std::move(vs));
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                         std::make_move_iterator(replacement.begin()),
                         std::make_move_iterator(replacement.end()));
            return true;
        }
    }
    return false;
}

void refine(const Graph& g, Cells& cells) {
    while (refine_once(g, cells)) {
    }
}

struct UnionFind {
    std::array<int, kMaxOrder> parent{};

    explicit UnionFind(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct CanonSearch {
    const Graph& g;
    int n;
    bool have_best = false;
    BitString best_bits;
    std::vector<int> best_labeling;          // position -> vertex
    std::vector<std::vector<int>> aut_gens;  // vertex -> image

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    void run() {
        Cells cells{std::vector<int>(static_cast<std::size_t>(n))};
        for (int v = 0; v < n; ++v) cells[0][static_cast<std::size_t>(v)] = v;
        descend(std::move(cells), {}, BitString{}, {});
    }

    void descend(Cells cells, std::vector<int> prefix, BitString bits,
                 std::vector<int> path) {
        refine(g, cells);

        std::size_t lead = 0;
        while (lead < cells.size() && cells[lead].size() == 1) ++lead;
        for (std::size_t pos = prefix.size(); pos < lead; ++pos) {
            int v = cells[pos][0];
            for (std::size_t i = 0; i < pos; ++i)
                if (g.has_edge(prefix[i], v))
                    bits.set(bit_index(static_cast<int>(i), static_cast<int>(pos)));
            prefix.push_back(v);
        }
        // lexicographic order: a larger prefix can never yield a smaller code
        if (have_best &&
            bits.compare_prefix(best_bits, bit_index(0, static_cast<int>(prefix.size()))) > 0)
            return;

        if (lead == cells.size()) {  // discrete partition: a full labeling
            if (!have_best) {
                have_best = true;
                best_bits = bits;
                best_labeling = prefix;
                return;
            }
            int cmp = bits.compare_prefix(best_bits, bit_index(0, n));
            if (cmp < 0) {
                best_bits = bits;
                best_labeling = prefix;
            } else if (cmp == 0 && prefix != best_labeling) {
                // two labelings with identical code: an automorphism
                std::vector<int> aut(static_cast<std::size_t>(n));
                for (int pos = 0; pos < n; ++pos)
                    aut[static_cast<std::size_t>(prefix[static_cast<std::size_t>(pos)])] =
                        best_labeling[static_cast<std::size_t>(pos)];
                aut_gens.push_back(std::move(aut));
            }
            return;
        }

        const std::vector<int> candidates = cells[lead];
        std::vector<int> tried;
        for (int v : candidates) {
            // skip candidates equivalent to an already-explored one under the
            // automorphisms that fix every individualized vertex so far
            if (!tried.empty() && !aut_gens.empty()) {
                UnionFind uf(n);
                for (const auto& a : aut_gens) {
                    bool fixes = true;
                    for (int w : path)
                        if (a[static_cast<std::size_t>(w)] != w) {
                            fixes = false;
                            break;
                        }
                    if (!fixes) continue;
                    for (int w = 0; w < n; ++w) uf.unite(w, a[static_cast<std::size_t>(w)]);
                }
                bool skip = false;
                for (int u : tried)
                    if (uf.find(u) == uf.find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < lead; ++i) child.push_back(cells[i]);
            child.push_back({v});
            std::vector<int> rest;
            for (int u : candidates)
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            for (std::size_t i = lead + 1; i < cells.size(); ++i) child.push_back(cells[i]);

            std::vector<int> child_path = path;
            child_path.push_back(v);
            descend(std::move(child), prefix, bits, std::move(child_path));
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() == 1) return g;
    CanonSearch search(g);
    search.run();
    // labeling maps position -> original vertex; permuted() wants old -> new
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int pos = 0; pos < g.order(); ++pos)
        perm[static_cast<std::size_t>(search.best_labeling[static_cast<std::size_t>(pos)])] = pos;
    return permuted(g, perm);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

}  // namespace chromatlas
