#ifndef CHROMATLAS_CHROMATIC_HPP
#define CHROMATLAS_CHROMATIC_HPP

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromatlas/graph.hpp"

namespace chromatlas {

/// 64-bit coefficient arithmetic would wrap silently; we detect and refuse.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact chromatic polynomial of a graph of order n:
///   P(x) = c_n x^n + c_{n-1} x^{n-1} + ... + c_1 x
/// The constant term is identically zero and is not stored.
class ChromaticPolynomial {
public:
    ChromaticPolynomial() = default;

    /// coeffs[i] is the coefficient of x^(degree - i), i in 0..degree-1.
    ChromaticPolynomial(int degree, std::vector<std::int64_t> coeffs);

    int degree() const { return degree_; }

    /// Coefficient of x^power, power in 0..degree (0 gives 0).
    std::int64_t coefficient(int power) const;

    const std::vector<std::int64_t>& coefficients_descending() const { return coeffs_; }

    bool operator==(const ChromaticPolynomial&) const = default;

private:
    int degree_ = 0;
    std::vector<std::int64_t> coeffs_;
};

/// Absolute coefficient values in descending degree order, zero padded.
struct CoefficientVector {
    std::vector<std::uint64_t> entries;

    bool operator==(const CoefficientVector&) const = default;
};

/// Shared memo for deletion-contraction sub-instances, keyed by canonical
/// graph6 string. Sharded so concurrent workers can insert/lookup; all
/// writers compute identical values, so last-write-wins is safe. When the
/// entry cap is reached the cache is cleared; correctness never depends on
/// hits.
class ChromaticCache {
public:
    explicit ChromaticCache(std::size_t max_entries = std::size_t{1} << 22);

    bool lookup(const std::string& key, std::vector<std::int64_t>& out) const;
    void store(const std::string& key, const std::vector<std::int64_t>& value);

    std::size_t size() const;
    void clear();

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<std::string, std::vector<std::int64_t>> map;
    };
    std::size_t shard_of(const std::string& key) const;

    std::array<Shard, kShards> shards_;
    std::atomic<std::size_t> count_{0};
    std::size_t cap_;
};

/// Deletion-contraction with memoization; trees, cycles and complete graphs
/// short-circuit to closed forms, disconnected inputs factor into a product
/// over components. Throws OverflowError if a coefficient leaves int64.
ChromaticPolynomial chromatic_polynomial(const Graph& g, ChromaticCache* cache = nullptr);

/// Pad |c_n|, |c_{n-1}|, ..., |c_1| with zeros up to length.
CoefficientVector coefficient_vector(const ChromaticPolynomial& p, int length);

/// Exact evaluation at a non-negative integer; equals the number of proper
/// colorings with that many colors.
std::int64_t evaluate(const ChromaticPolynomial& p, std::int64_t k);

struct CheckReport {
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

/// Girth-prefix coefficient identities: |c_{n-i}| = C(m,i) for i < g-1 and
/// |c_{n-(g-1)}| = C(m,g-1) - (number of shortest cycles). Not applicable to
/// forests.
CheckReport check_meredith(const Graph& g, const ChromaticPolynomial& p);

/// First-four coefficient formulas from the subgraph census
/// (edges, triangles, pure squares, K4s).
CheckReport check_farrell4(const Graph& g, const ChromaticPolynomial& p);

bool is_log_concave(const CoefficientVector& q);

/// entries[i] <= C(m, i) for all i.
bool meredith_bound_check(const CoefficientVector& q, int m);

}  // namespace chromatlas

#endif
