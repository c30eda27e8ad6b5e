#pragma once

#include "trispec/graph.hpp"

namespace trispec {

// Exact decision by backtracking: saturation-degree vertex order, colors
// introduced in first-use order (new color index may only follow all smaller
// ones), so relabeled colorings are never re-explored.
bool is_k_colorable(const Graph& g, int k);

// Least k with is_k_colorable(g, k), counting up from the trivial lower
// bound (0 empty order, 1 edgeless, 2 with an edge).
int chromatic_number(const Graph& g);

}  // namespace trispec
