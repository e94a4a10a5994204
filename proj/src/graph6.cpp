#include "rbond/graph6.hpp"

namespace rbond {

namespace graph6_detail {

std::string encode_order(std::uint64_t n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= (1ull << 36) - 1) {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6 order exceeds 2^36 - 1");
    }
    return out;
}

std::uint64_t decode_order(const std::string& line, std::size_t& offset) {
    auto need = [&](std::size_t at) -> std::uint64_t {
        if (at >= line.size()) throw Graph6ParseError("truncated graph6 header", at);
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte outside graph6 range 63..126", at);
        return c - 63;
    };
    std::uint64_t first = need(offset);
    if (first != 63) {
        offset += 1;
        return first;
    }
    if (need(offset + 1) != 63) {
        std::uint64_t n = 0;
        for (std::size_t k = 1; k <= 3; ++k) n = n << 6 | need(offset + k);
        offset += 4;
        return n;
    }
    std::uint64_t n = 0;
    for (std::size_t k = 2; k <= 7; ++k) n = n << 6 | need(offset + k);
    offset += 8;
    return n;
}

}  // namespace graph6_detail

Graph parse_graph6(const std::string& line) {
    std::size_t offset = 0;
    std::uint64_t n64 = graph6_detail::decode_order(line, offset);

    unsigned __int128 bits = static_cast<unsigned __int128>(n64) * (n64 - (n64 ? 1 : 0)) / 2;
    unsigned __int128 payload = (bits + 5) / 6;
    std::size_t remaining = line.size() - offset;
    if (payload > remaining)
        throw Graph6ParseError("truncated graph6 payload: need " +
                                   std::to_string(static_cast<unsigned long long>(payload)) +
                                   " bytes, have " + std::to_string(remaining),
                               line.size());
    if (static_cast<unsigned __int128>(remaining) > payload)
        throw Graph6ParseError("trailing bytes after graph6 payload",
                               offset + static_cast<std::size_t>(payload));

    int n = static_cast<int>(n64);
    std::vector<Edge> edges;
    std::uint64_t bit_index = 0;
    const std::uint64_t total_bits = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    int col_j = 1, row_i = 0;
    for (std::size_t b = 0; b < static_cast<std::size_t>(payload); ++b) {
        unsigned char c = static_cast<unsigned char>(line[offset + b]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("byte outside graph6 range 63..126", offset + b);
        unsigned value = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++bit_index) {
            bool set = (value >> bit) & 1;
            if (bit_index >= total_bits) {
                if (set) throw Graph6ParseError("nonzero padding bit", offset + b);
                continue;
            }
            if (set) edges.emplace_back(row_i, col_j);
            if (++row_i == col_j) {
                row_i = 0;
                ++col_j;
            }
        }
    }
    return Graph::build(n, edges);
}

std::string write_graph6(const Graph& g) {
    std::string out = graph6_detail::encode_order(static_cast<std::uint64_t>(g.vertex_count()));
    int n = g.vertex_count();
    unsigned value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = value << 1 | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

}  // namespace rbond
