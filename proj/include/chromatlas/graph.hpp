#ifndef CHROMATLAS_GRAPH_HPP
#define CHROMATLAS_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace chromatlas {

// Hard cap on graph order; adjacency rows fit in one 16-bit word.
inline constexpr int kMaxOrder = 16;

/// Simple undirected graph on at most kMaxOrder vertices.
/// Adjacency is stored as one bitset row per vertex; the structure is a
/// plain value and every operation on it is a pure function.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    static Graph from_edges(int order,
                            std::initializer_list<std::pair<int, int>> edges);

    int order() const { return order_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Neighbourhood of v as a bitset.
    std::uint16_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;

    /// Bitset with one bit per vertex.
    std::uint16_t vertex_mask() const;

    bool operator==(const Graph&) const = default;

private:
    int order_ = 0;
    std::array<std::uint16_t, kMaxOrder> adj_{};
};

std::vector<int> degree_sequence(const Graph& g);
bool is_connected(const Graph& g);

/// Length of the shortest cycle; empty for forests.
std::optional<int> girth(const Graph& g);

/// Number of distinct cycles of length exactly k (as vertex subsets with
/// cyclic structure), 3 <= k <= order.
std::int64_t count_cycles_of_length(const Graph& g, int k);

struct SubgraphCensus {
    std::int64_t triangles = 0;   // t1
    std::int64_t induced_c4 = 0;  // t2: squares with no diagonal present
    std::int64_t k4 = 0;          // t3
};
SubgraphCensus subgraph_census(const Graph& g);

int clique_number(const Graph& g);

struct Block {
    std::uint16_t vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<std::pair<int, int>> bridges;  // blocks with exactly one edge
    std::uint16_t cut_vertices = 0;
};

/// Biconnected components of a connected graph (depth-first lowpoint
/// algorithm). The blocks' edge lists partition the edge set.
BlockDecomposition block_decomposition(const Graph& g);

Graph delete_edge(const Graph& g, int u, int v);

/// Contract {u,v}: endpoints merge into the smaller index, duplicates
/// collapse, remaining vertices are compacted preserving relative order.
Graph contract_edge(const Graph& g, int u, int v);

Graph delete_vertex(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, std::uint16_t mask);
Graph complement(const Graph& g);

/// Relabel: vertex i of g becomes vertex perm[i] of the result.
Graph permuted(const Graph& g, const std::vector<int>& perm);

std::vector<Graph> connected_components(const Graph& g);

}  // namespace chromatlas

#endif
