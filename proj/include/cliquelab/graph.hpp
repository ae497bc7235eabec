#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/errors.hpp"

namespace cliquelab {

using VertexSet = std::set<int>;
using Edge = std::pair<int, int>; // normalized: first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

enum class GraphFormat { dimacs, edge_list, dot };

// Undirected simple graph over small nonnegative vertex ids. Adjacency is
// symmetric with set semantics: no self-loops, no parallel edges. Vertices
// may carry an optional display label (used by the built-in fixtures to match
// their lettered drawings); labels are metadata and do not affect equality.
//
// Algorithms treat graphs as immutable values: every "removal" operation
// returns a new graph, and const graphs are safe to share across threads.
class Graph {
public:
    Graph() = default;

    void add_vertex(int v);
    void add_edge(int u, int v); // inserts missing endpoints; rejects self-loops
    void set_label(int v, std::string label);

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;

    std::vector<int> vertices() const; // ascending
    std::vector<Edge> edges() const;   // lexicographic
    const std::set<int>& neighbors(int v) const; // domain_error if absent

    // Display label; falls back to the decimal id.
    std::string label(int v) const;
    bool has_label(int v) const { return labels_.count(v) != 0; }

    // Structural equality (labels excluded).
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    std::map<int, std::set<int>> adj_;
    std::map<int, std::string> labels_;
};

// Parses DIMACS .col ("c" comments, "p edge N M", "e u v" with 1-based ids
// mapped to 0-based) or a plain edge list ("u v" per line, ids taken
// literally, optional "n N" header declaring vertices 0..N-1). Duplicate
// edges collapse; isolated vertices declared by a header are retained.
// Throws parse_error naming the offending 1-based line.
Graph parse_graph(const std::string& text, GraphFormat format);

int degree(const Graph& g, int v);

// True iff every unordered pair of s is an edge. Empty sets and singletons
// are cliques. Throws domain_error if s has a member outside g.
bool is_clique(const Graph& g, const VertexSet& s);

// Returns a copy of g without the vertices of s and their incident edges.
Graph remove_vertices(const Graph& g, const VertexSet& s);

// DIMACS and edge_list round-trip through parse_graph with identical ids and
// edges for graphs whose ids are dense 0..n-1 (all parser outputs are).
// Graphs with gaps in their id range serialize with padding isolated
// vertices. The dot form optionally paints `highlight` vertices and the
// edges among them red.
std::string serialize_graph(const Graph& g, GraphFormat format,
                            const VertexSet* highlight = nullptr);

} // namespace cliquelab
