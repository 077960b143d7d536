#ifndef CHROMATLAS_CANONICAL_HPP
#define CHROMATLAS_CANONICAL_HPP

#include <string>

#include "chromatlas/graph.hpp"

namespace chromatlas {

/// Deterministic canonical relabeling: canonical_form(g) == canonical_form(h)
/// iff g and h are isomorphic. Implemented as iterated degree/neighbourhood
/// partition refinement with backtracking over the remaining choices,
/// minimising the graph6 bit string; discovered automorphisms prune the
/// search.
Graph canonical_form(const Graph& g);

/// graph6 encoding of canonical_form(g); usable as an isomorphism-class key.
std::string canonical_graph6(const Graph& g);

}  // namespace chromatlas

#endif
