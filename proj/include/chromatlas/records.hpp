#ifndef CHROMATLAS_RECORDS_HPP
#define CHROMATLAS_RECORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromatlas/chromatic.hpp"
#include "chromatlas/extremal.hpp"
#include "chromatlas/graph.hpp"

namespace chromatlas {

struct RecordFlags {
    bool threshold = false;
    bool in_j = false;
    bool in_l = false;
    bool is_turan = false;
    bool chromatically_minimal = false;  // filled by the extremal pass
    bool chromatically_maximal = false;

    bool operator==(const RecordFlags&) const = default;
};

/// One persisted row of the atlas: graph6 key, invariants, coefficient
/// vector. The graph6 string is the primary key everywhere.
struct GraphRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    CoefficientVector q;  // length max(10, n)
    Rational sigma;
    double sigma_f = 0.0;
    double eps_irr = 0.0;
    int degree_gap = 0;
    std::optional<int> girth;
    std::int64_t t1 = 0, t2 = 0, t3 = 0;
    RecordFlags flags;

    bool operator==(const GraphRecord&) const = default;
};

/// Compute every first-pass field for a graph; the key stores the given
/// graph6 text verbatim. A precomputed polynomial (from a persistent cache)
/// skips the deletion-contraction run. Throws if the coefficient vector
/// fails its own sanity checks (log-concavity, Meredith bound).
GraphRecord compute_record(const std::string& graph6_key, const Graph& g,
                           ChromaticCache* cache = nullptr,
                           const ChromaticPolynomial* precomputed = nullptr);

/// One JSONL line, fixed field order, floats with 17 significant digits.
std::string record_to_jsonl(const GraphRecord& r);

GraphRecord record_from_jsonl(const std::string& line);

std::vector<GraphRecord> read_records_file(const std::string& path);
void write_records_file(const std::string& path, const std::vector<GraphRecord>& records);

/// Shortest float spelling that still round-trips: %.17g.
std::string format_double(double value);

}  // namespace chromatlas

#endif
