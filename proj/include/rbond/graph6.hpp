#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rbond/graph.hpp"

namespace rbond {

/// Parse failure for a graph6 line; byte_offset is 0-based into the line.
class Graph6ParseError : public std::runtime_error {
  public:
    Graph6ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

/// Decodes one graph6 line: N(n) header (single byte for n <= 62, the '~'
/// multi-byte forms above that), then ceil(n(n-1)/2 / 6) payload bytes
/// packing the upper-triangle adjacency bits column-wise, six per byte,
/// most significant bit first, zero padding. Rejects bytes outside 63..126,
/// truncated lines, trailing bytes, and nonzero padding bits.
Graph parse_graph6(const std::string& line);

/// Canonical (minimal-header, zero-padded) graph6 encoding.
/// parse_graph6(write_graph6(g)) == g, byte for byte on re-encoding.
std::string write_graph6(const Graph& g);

namespace graph6_detail {

// Header codec, exposed for boundary tests: the order field alone covers
// 0..2^36-1 even though whole-graph payloads that large are never built.
std::string encode_order(std::uint64_t n);
std::uint64_t decode_order(const std::string& line, std::size_t& offset);

}  // namespace graph6_detail

}  // namespace rbond
