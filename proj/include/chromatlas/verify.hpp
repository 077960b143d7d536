#ifndef CHROMATLAS_VERIFY_HPP
#define CHROMATLAS_VERIFY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "chromatlas/chromatic.hpp"

namespace chromatlas {

struct VerifyOptions {
    int max_n = 6;                      // exhaustive sweep bound
    std::vector<std::string> suites;    // empty means all
    int random_count = 0;               // extra random compression triples
    int random_n = 8;                   // order of the random graphs
    std::uint64_t seed = 42;
    std::string records_path;           // for the records-integrity suite
    double sample = 1.0;                // fraction of records to re-derive
};

struct VerifyResult {
    bool all_passed = true;
    std::size_t checks_run = 0;
    std::size_t failures = 0;
};

/// Oracle suites: coefficient-formula checks over exhaustive enumerations,
/// compression monotonicity, minimal-family and Turan poset placement,
/// irregularity cross-validation, and record-store integrity. Prints one
/// summary line per suite; failure messages carry a graph6 witness.
VerifyResult run_verify(const VerifyOptions& options, std::ostream& log,
                        ChromaticCache* cache = nullptr);

/// Parse scope strings like "n<=6", "suites=oracles,compression",
/// "random=1000", "random-n=8", "seed=42", "sample=0.01" separated by
/// commas/semicolons/spaces.
VerifyOptions parse_verify_scope(const std::string& scope);

}  // namespace chromatlas

#endif
