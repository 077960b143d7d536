#include "chromatlas/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "chromatlas/canonical.hpp"
#include "chromatlas/graph6.hpp"

namespace chromatlas {

namespace {

// Sorted degree sequence of g minus one vertex, packed 4 bits per entry so
// deletions can be ranked without building the subgraph. Iso-invariant.
std::uint64_t deletion_invariant(const Graph& g, int dropped) {
    std::array<int, kMaxOrder> degs{};
    int count = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (v == dropped) continue;
        degs[count++] = g.degree(v) - (g.has_edge(v, dropped) ? 1 : 0);
    }
    std::sort(degs.begin(), degs.begin() + count);
    std::uint64_t packed = 0;
    for (int i = 0; i < count; ++i)
        packed = (packed << 4) | static_cast<std::uint64_t>(degs[i]);
    return packed;
}

// Accept the child iff deleting the new (last) vertex is the least deletion
// under the iso-invariant order (degree multiset, then canonical graph6).
// Exactly one parent class then generates each child class.
bool is_canonical_child(const Graph& child, const std::string& parent_canon) {
    const int last = child.order() - 1;
    std::uint64_t parent_inv = deletion_invariant(child, last);
    std::array<std::uint64_t, kMaxOrder> inv{};
    std::uint64_t min_inv = parent_inv;
    for (int u = 0; u < last; ++u) {
        inv[u] = deletion_invariant(child, u);
        min_inv = std::min(min_inv, inv[u]);
    }
    if (parent_inv != min_inv) return false;
    for (int u = 0; u < last; ++u) {
        if (inv[u] != min_inv) continue;
        if (canonical_graph6(delete_vertex(child, u)) < parent_canon) return false;
    }
    return true;
}

void augment(int n, bool connected_only, AugmentationOrder order,
             const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumeration supports orders 1..10");
    Graph k1(1);
    if (n == 1) {
        emit(k1);
        return;
    }
    std::vector<std::string> level{to_graph6(k1)};
    for (int k = 1; k < n; ++k) {
        const bool final_level = (k + 1 == n);
        std::vector<std::string> next;
        const std::uint32_t subset_count = 1u << k;

        auto process_parent = [&](const std::string& parent_canon) {
            Graph parent = from_graph6(parent_canon);
            std::unordered_set<std::string> seen;
            for (std::uint32_t step = 0; step < subset_count; ++step) {
                std::uint32_t subset =
                    order == AugmentationOrder::Forward ? step : subset_count - 1 - step;
                Graph child(k + 1);
                for (int a = 0; a < k; ++a) {
                    std::uint16_t nb = parent.neighbors(a);
                    while (nb) {
                        int b = std::countr_zero(nb);
                        nb &= static_cast<std::uint16_t>(nb - 1);
                        if (b > a) child.add_edge(a, b);
                    }
                }
                for (int a = 0; a < k; ++a)
                    if (subset & (1u << a)) child.add_edge(a, k);
                if (final_level && connected_only && !is_connected(child)) continue;
                if (!is_canonical_child(child, parent_canon)) continue;
                Graph canon = canonical_form(child);
                std::string key = to_graph6(canon);
                if (!seen.insert(key).second) continue;
                if (final_level)
                    emit(canon);
                else
                    next.push_back(std::move(key));
            }
        };

        if (order == AugmentationOrder::Forward) {
            for (const auto& p : level) process_parent(p);
        } else {
            for (auto it = level.rbegin(); it != level.rend(); ++it) process_parent(*it);
        }
        level = std::move(next);
    }
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const Graph&)>& emit,
                         AugmentationOrder order) {
    augment(n, true, order, emit);
}

void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& emit,
                          AugmentationOrder order) {
    augment(n, false, order, emit);
}

std::vector<Graph> enumerate_connected_list(int n, AugmentationOrder order) {
    std::vector<Graph> out;
    enumerate_connected(n, [&](const Graph& g) { out.push_back(g); }, order);
    return out;
}

void read_graph6_stream(std::istream& in,
                        const std::function<void(const Graph&, std::size_t)>& sink) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            sink(from_graph6(line), line_no);
        } catch (const Graph6Error& e) {
            throw Graph6Error(Graph6Error::Verbatim{},
                              "line " + std::to_string(line_no) + ": " + e.what(),
                              e.byte_offset());
        }
    }
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    read_graph6_stream(in, [&](const Graph& g, std::size_t) { out.push_back(g); });
    return out;
}

std::vector<Graph> filter_by_edges(const std::vector<Graph>& graphs, int m) {
    std::vector<Graph> out;
    for (const Graph& g : graphs)
        if (g.edge_count() == m) out.push_back(g);
    return out;
}

}  // namespace chromatlas
