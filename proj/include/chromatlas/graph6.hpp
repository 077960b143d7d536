#ifndef CHROMATLAS_GRAPH6_HPP
#define CHROMATLAS_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chromatlas/graph.hpp"

namespace chromatlas {

/// Decode failure; byte_offset points at the offending byte of the input.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    struct Verbatim {};
    Graph6Error(Verbatim, const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what), byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// graph6: N(n) = chr(63+n), then the upper-triangle bits x(0,1), x(0,2),
/// x(1,2), x(0,3), ... packed six per character, zero padded, offset +63.
/// Strict: padding bits must be zero, so decode is the exact inverse of
/// encode.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace chromatlas

#endif
