#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trispec/canonical.hpp"
#include "trispec/graph.hpp"

namespace trispec {

struct EnumFilter {
    bool require_triangle_free = true;
    int min_chromatic = 0;
    bool connected_only = false;
    bool non_bipartite_only = false;
};

// Triangle-free class counts grow ~17x per vertex (2.1e7 classes at n=13);
// orders past 13 are refused with a cost estimate.
constexpr int kEnumCap = 13;

// Streams one canonical representative per triangle-free isomorphism class
// of order n, in a deterministic order that does not depend on the worker
// count.  The filter is applied before emission.
void enumerate_triangle_free_small(int n, const EnumFilter& f,
                                   const std::function<void(const SmallGraph&)>& emit,
                                   int workers = 1);

void enumerate_triangle_free(int n, const EnumFilter& f,
                             const std::function<void(const Graph&)>& emit, int workers = 1);

// Oracle: one representative per isomorphism class of ALL graphs of order
// n <= 7, by canonical dedup over every labeled graph.
std::vector<SmallGraph> brute_force_all_small(int n);
std::vector<Graph> brute_force_all(int n);

struct IngestedLine {
    size_t line_no = 0;          // 1-based
    std::optional<Graph> graph;  // empty on a decode error
    std::string error;           // decode error text, empty on success
};

// Decodes one graph6 value per line; per-line errors are reported and the
// stream continues.
void ingest_graph6(std::istream& in, const std::function<void(const IngestedLine&)>& sink);

bool passes_filter(const SmallGraph& g, const EnumFilter& f);

}  // namespace trispec
