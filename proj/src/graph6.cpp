#include <string>
#include <string_view>

#include "coalition/error.hpp"
#include "coalition/graph.hpp"

namespace coalition {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kLongForm = 126;

int sextet(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < kBias || v > 126) {
        throw ParseError("graph6: character code " + std::to_string(v) + " outside 63..126");
    }
    return v - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw ParseError("graph6: empty line");
    if (line.front() == ':' || line.front() == ';') throw ParseError("graph6: sparse6 input is not supported");
    if (line.front() == '&') throw ParseError("graph6: digraph6 input is not supported");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (static_cast<unsigned char>(line[0]) != kLongForm) {
        n = static_cast<std::size_t>(sextet(line[0]));
        pos = 1;
    } else {
        if (line.size() < 4) throw ParseError("graph6: truncated long-form length");
        if (static_cast<unsigned char>(line[1]) == kLongForm) {
            throw ParseError("graph6: order exceeds " + std::to_string(kMaxVertices));
        }
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(line[i]));
        if (n < 63) throw ParseError("graph6: long-form length used for order " + std::to_string(n));
        pos = 4;
    }
    if (n == 0) throw ParseError("graph6: graphs with zero vertices are not supported");
    if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

    const std::size_t bit_count = n * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (line.size() - pos != byte_count) {
        throw ParseError("graph6: expected " + std::to_string(byte_count) + " payload bytes for order " +
                         std::to_string(n) + ", got " + std::to_string(line.size() - pos));
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const int group = sextet(line[pos + bit / 6]);
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits in the final byte must be zero.
    if (bit_count % 6 != 0) {
        const int last = sextet(line.back());
        const int pad = 6 - static_cast<int>(bit_count % 6);
        if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kLongForm));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int group = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

}  // namespace coalition
