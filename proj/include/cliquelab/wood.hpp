#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab::wood {

// Node of the interdiction network, identified by where it came from: the
// source graph's edges become the N1 layer, its vertices the N2 layer.
struct NodeRef {
    enum class Kind { source, sink, edge_node, vertex_node };
    Kind kind = Kind::source;
    Edge edge{-1, -1}; // edge_node only
    int vertex = -1;   // vertex_node only

    static NodeRef src() { return {Kind::source, {-1, -1}, -1}; }
    static NodeRef snk() { return {Kind::sink, {-1, -1}, -1}; }
    static NodeRef edge_of(Edge e) { return {Kind::edge_node, e, -1}; }
    static NodeRef vertex_of(int v) { return {Kind::vertex_node, {-1, -1}, v}; }

    friend auto operator<=>(const NodeRef&, const NodeRef&) = default;

    std::string name() const;
};

enum class ArcClass { a1, a2, a3 };

struct Arc {
    NodeRef tail;
    NodeRef head;
    int capacity = 0;
    ArcClass cls = ArcClass::a1;
};

// 4-layer DAG: source -> N1 (one node per source edge) -> N2 (one node per
// source vertex) -> sink. A1 arcs carry capacity 2, A2 and A3 capacity 1.
// Values are immutable; the removal helpers return filtered copies.
struct FlowNetwork {
    std::vector<Edge> edge_nodes;  // N1, canonical (lexicographic) edge order
    std::vector<int> vertex_nodes; // N2, ascending
    std::vector<Arc> arcs;         // A1 block, then A2, then A3
};

FlowNetwork build_gh(const Graph& g);

struct MaxFlowResult {
    int value = 0;
    std::vector<int> arc_flow;         // parallel to net.arcs
    std::vector<NodeRef> source_side;  // nodes reachable in the final residual
    int cut_capacity = 0;              // capacity crossing source_side -> rest
};

// Exact integral max flow, shortest augmenting paths (breadth-first).
int max_flow(const FlowNetwork& net);
MaxFlowResult max_flow_detail(const FlowNetwork& net);

// G^H minus the A1 arcs of the named source edges. Unknown edge: domain_error.
FlowNetwork remove_source_arcs(const FlowNetwork& net, const std::vector<Edge>& edges);

// G^H minus the N2 nodes of `removed` and their incident arcs.
FlowNetwork remove_vertex_nodes(const FlowNetwork& net, const VertexSet& removed);

// max_flow(build_gh(g)) == |{v : deg(v) > 0}| -- holds for every graph.
bool check_lemma1(const Graph& g);

struct TheoremCheck {
    bool holds = false;                  // the two sides agree
    bool clique_exists = false;          // exact oracle side
    bool interdiction_achieves_k = false; // exists A1' of the mandated size with flow == k
    long long required_removals = 0;     // |E| - C(k,2); negative means no valid A1'
    std::optional<std::vector<Edge>> witness_removal;
    std::uint64_t subsets_enumerated = 0;
};

// Certifies, by enumerating every A1' of size |E| - C(k,2), that
//   (exists A1' with max_flow(G^H - A1') == k)  <=>  (G has a k-clique).
// Throws resource_error if the subset count exceeds subset_cap.
TheoremCheck verify_wood_theorem(const Graph& g, int k, std::uint64_t subset_cap = 1'000'000);

// Max flow of G^H with the N2 nodes of `removed` deleted. Cross-checked
// internally against the surviving-coverage count it must equal.
int vertex_interdiction_value(const Graph& g, const VertexSet& removed);

// DOT export, layered left to right: source | N1 | N2 | sink.
std::string serialize_gh_dot(const FlowNetwork& net);

} // namespace cliquelab::wood
