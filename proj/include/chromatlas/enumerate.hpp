#ifndef CHROMATLAS_ENUMERATE_HPP
#define CHROMATLAS_ENUMERATE_HPP

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "chromatlas/graph.hpp"

namespace chromatlas {

/// Two independent traversal orders of the augmentation tree. Both emit the
/// same set of graphs; running both and comparing is a self-consistency
/// check of the generator.
enum class AugmentationOrder { Forward, Reverse };

/// Exactly one representative per isomorphism class of connected simple
/// graphs on n vertices, emitted in canonical labeling in a deterministic
/// order. Generation is canonical augmentation by vertex addition: children
/// are accepted only when deleting the new vertex realizes the
/// lexicographically least canonical deletion, so each class appears once.
void enumerate_connected(int n, const std::function<void(const Graph&)>& emit,
                         AugmentationOrder order = AugmentationOrder::Forward);

/// Same machinery without the final connectivity filter: all graphs on n
/// vertices, one per isomorphism class.
void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& emit,
                          AugmentationOrder order = AugmentationOrder::Forward);

std::vector<Graph> enumerate_connected_list(int n,
                                            AugmentationOrder order = AugmentationOrder::Forward);

/// Newline-delimited graph6; malformed lines raise Graph6Error wrapped with
/// the 1-based line number, never silently skipped.
void read_graph6_stream(std::istream& in,
                        const std::function<void(const Graph&, std::size_t line)>& sink);

std::vector<Graph> read_graph6_lines(std::istream& in);

/// Passes exactly the graphs with the given edge count, preserving order.
std::vector<Graph> filter_by_edges(const std::vector<Graph>& graphs, int m);

}  // namespace chromatlas

#endif
