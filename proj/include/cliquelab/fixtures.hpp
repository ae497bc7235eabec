#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab::fixtures {

// Built-in graphs. All generators are deterministic; display labels follow
// the conventional drawings (digits, then letters) so traces read naturally.

// 6 vertices, 7 edges; its only triangle is {1,2,5} (labels).
Graph fig1();

// 7 vertices, 15 edges. The unique 4-clique {4,5,6,7} sits behind the
// low-degree fringe {1,2,6,7}: the cheapest pair interdictions can destroy it.
Graph fig2();

// Family on 3k-2 vertices (k >= 4): a k-clique C_k = {0..k-1} whose two
// lowest ids v=0 and v'=1 each attach by a single edge to the lowest id of a
// (k-1)-clique ({k..2k-2} and {2k-1..3k-3}); the remaining k-2 vertices of
// the two smaller cliques are joined by a perfect matching. Every vertex
// except v and v' ends with degree k-1, so the cheapest pairs include
// C(k-2,2) pairs inside C_k itself.
Graph tamta_family(int k);

// 15 vertices, 40 edges: a 5-clique on labels 1..5 plus one extra vertex per
// 3-subset (A..J), each adjacent to exactly its subset. Every pair of the
// 5-clique can be merged into a lettered 4-clique instead.
Graph laplante15();

// Lookup by CLI name: "fig1", "fig2", "laplante15", "tamta:<k>".
std::optional<Graph> by_name(const std::string& name);
std::vector<std::string> names();

} // namespace cliquelab::fixtures
