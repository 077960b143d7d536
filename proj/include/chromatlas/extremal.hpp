#ifndef CHROMATLAS_EXTREMAL_HPP
#define CHROMATLAS_EXTREMAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chromatlas/chromatic.hpp"
#include "chromatlas/graph.hpp"

namespace chromatlas {

/// Exact non-negative rational, normalized with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    bool operator==(const Rational&) const = default;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

/// Degree variance: (1/n) sum d_i^2 - (1/n^2) (sum d_i)^2, exact.
Rational variance_irregularity(const Graph& g);

/// Largest adjacency eigenvalue minus the average degree, via a full Jacobi
/// eigendecomposition (threshold 1e-12, up to 100 sweeps).
double spectral_irregularity(const Graph& g);

int degree_gap(const Graph& g);

/// Repeatedly peel an isolated or dominating vertex; threshold graphs are
/// exactly the ones that empty out.
bool is_threshold(const Graph& g);

/// Compression from u to v: every neighbour of u that is neither v nor a
/// neighbour of v is rewired from u to v. Preserves order and size.
Graph compress(const Graph& g, int u, int v);

struct CompressionCheck {
    bool passed = true;
    bool coefficients_ok = true;  // |c_i(g')| <= |c_i(g)| exactly
    bool sigma_ok = true;         // variance irregularity non-decreasing, exact
    bool eps_ok = true;           // spectral irregularity non-decreasing within 1e-9
    std::string detail;
};

CompressionCheck verify_compression_monotonicity(const Graph& g, int u, int v,
                                                 ChromaticCache* cache = nullptr);

/// Connected quasi-complete graph: a clique on d vertices, one vertex
/// adjacent to t of them, and any leftover vertices attached as pendants so
/// the result stays connected with exactly m edges. Threshold by
/// construction.
Graph quasi_complete(int n, int m);

/// Quasi-star graph: complement of the (possibly disconnected) quasi-complete
/// core with C(n,2) - m edges; contains universal vertices over a sparse rest.
Graph quasi_star(int n, int m);

/// Complete r-partite graph with part sizes as equal as possible.
Graph turan(int n, int r);

/// All blocks complete.
bool in_family_J(const Graph& g);

/// One block B with clique number >= |V(B)| - 1, all other blocks K2.
bool in_family_L(const Graph& g);

enum class PosetRelation { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

/// Componentwise dominance of coefficient vectors within a fixed (n, m).
PosetRelation poset_compare(const CoefficientVector& qh, const CoefficientVector& qg);

struct ExtremalReport {
    int n = 0;
    int m = 0;
    std::vector<std::string> minimal_set;  // graph6 keys, input order
    std::vector<std::string> maximal_set;
    std::vector<std::vector<std::uint64_t>> minimal_vectors;  // distinct, lex sorted
    std::vector<std::vector<std::uint64_t>> maximal_vectors;
};

/// Pareto-minimal and -maximal members of one (n, m) group under
/// componentwise dominance. Lexicographic presort plus a single dominance
/// pass against the running frontier.
ExtremalReport pareto_extremal(
    int n, int m,
    const std::vector<std::pair<std::string, CoefficientVector>>& group);

}  // namespace chromatlas

#endif
