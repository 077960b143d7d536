#include "chromatlas/graph6.hpp"

namespace chromatlas {

namespace {

constexpr int kOffset = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);
    unsigned char head = static_cast<unsigned char>(text[0]);
    if (!printable(head)) throw Graph6Error("non-printable byte", 0);
    if (head == 126) throw Graph6Error("multi-byte order not supported (n > 62)", 0);
    int n = head - kOffset;
    if (n < 1) throw Graph6Error("order must be at least 1", 0);
    if (n > kMaxOrder)
        throw Graph6Error("order " + std::to_string(n) + " exceeds the cap of " +
                              std::to_string(kMaxOrder),
                          0);
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (nbits + 5) / 6;
    if (text.size() != expected)
        throw Graph6Error("malformed length: expected " + std::to_string(expected) +
                              " bytes, got " + std::to_string(text.size()),
                          text.size() < expected ? text.size() : expected);

    Graph g(n);
    std::size_t b = 0;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (!printable(c)) throw Graph6Error("non-printable byte", pos);
        int word = c - kOffset;
        for (int k = 5; k >= 0; --k, ++b) {
            bool set = (word >> k) & 1;
            if (b >= nbits) {
                if (set) throw Graph6Error("nonzero padding bits", pos);
                continue;
            }
            if (set) {
                // bit index b encodes the pair (i, j) with j the smallest
                // column such that j(j-1)/2 > b
                std::size_t j = 1;
                while (j * (j + 1) / 2 <= b) ++j;
                std::size_t i = b - j * (j - 1) / 2;
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(kOffset + n));
    int word = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kOffset + word));
                word = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(kOffset + (word << (6 - filled))));
    return out;
}

}  // namespace chromatlas
