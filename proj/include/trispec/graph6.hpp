#pragma once

#include <stdexcept>
#include <string>

#include "trispec/graph.hpp"

namespace trispec {

struct graph6_error : std::runtime_error {
    size_t byte_offset;
    graph6_error(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), byte_offset(off) {}
};

// Standard graph6: N(n) size prefix, upper-triangle column-major bit packing,
// 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header; rejects out-of-range characters,
// wrong length, and nonzero padding bits, reporting the byte offset.
Graph graph6_decode(const std::string& line);

}  // namespace trispec
