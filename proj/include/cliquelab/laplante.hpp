#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cliquelab/choice.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab::laplante {

// Every pair {p,q} forming a triangle with the center vertex.
struct Neighborhood {
    int center = -1;
    std::set<Edge> pairs;
};

struct NeighborhoodStats {
    std::uint64_t basic_ops = 0; // adjacency probes of the cubic scan
};

// Triangle pairs around every vertex, found by checking each neighbor pair.
std::map<int, Neighborhood> neighborhoods(const Graph& g,
                                          NeighborhoodStats* stats = nullptr);

struct MergeStep {
    Edge absorbed;                   // pair {key, r} that was merged in
    std::vector<Edge> cross_checked; // pairs {m, r} verified present first

    friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

// One merge chain: starting from start_pair with a fixed key vertex, absorb
// pairs {key, r} whose cross pairs against every merged member exist.
struct MergeTrace {
    int center = -1;
    Edge start_pair{-1, -1};
    int key = -1;
    std::vector<MergeStep> merges;
    VertexSet result; // merged clique, includes center

    friend bool operator==(const MergeTrace&, const MergeTrace&) = default;
};

// Grows M = {center} ∪ start_pair by absorbing, per policy, pairs {key, r}
// from the neighborhood such that {m, r} is also a neighborhood pair for
// every already-merged m (other than center and key). Stops when no pair
// containing the key is absorbable. The key never changes mid-chain.
MergeTrace merge_around(const Graph& g, const Neighborhood& nbhd, Edge start_pair,
                        int key, ChoicePolicy& policy);

struct LaplanteResult {
    std::map<int, std::set<VertexSet>> per_vertex; // cliques found around each center
    std::set<VertexSet> cliques;                   // deduplicated across centers
    int global_max_size = 0;
    VertexSet global_max_witness; // lex smallest among the largest
    std::vector<MergeTrace> traces;
    std::uint64_t basic_ops = 0;
    std::vector<Choice> choices; // full replay script
};

// For every vertex: start merge chains on not-yet-merged neighborhood pairs
// (lexicographic order) until every pair has been a start or an absorption;
// the key for each start is chosen by policy, as is each absorption.
LaplanteResult run(const Graph& g, ChoicePolicy policy);

// Searches per-vertex choice trees for a complete script whose replayed run
// has global max strictly below the exact oracle (adversarial) or equal to it
// (optimistic). nullopt when no resolution achieves that. Throws
// resource_error once node_cap states have been expanded.
std::optional<std::vector<Choice>> search_traces(const Graph& g, SearchMode mode,
                                                 std::uint64_t node_cap = 1'000'000,
                                                 SearchStats* stats = nullptr);

} // namespace cliquelab::laplante
