#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cliquelab/choice.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab::poly_clique {

// Live interdiction state. T is the set of surviving vertices priced at their
// current degree; S the surviving adjacent pairs priced at deg+deg-1; both
// mirror `residual` exactly and are refreshed after every removal.
struct InterdictionState {
    Graph residual;
    std::map<int, int> vertex_cost;  // T
    std::map<Edge, int> pair_cost;   // S
    long long budget = 0;            // R; may start negative
};

// budget = |E| - C(k,2); T and S priced from g. k must be >= 1.
InterdictionState init_state(const Graph& g, int k);

// Current price of a live pair: deg(u) + deg(v) - 1. domain_error if dead.
int pair_cost(const InterdictionState& st, int u, int v);

// True iff T and S mirror the residual graph and every stored price matches
// a recomputation from residual degrees.
bool state_consistent(const InterdictionState& st);

enum class Decision { clique_exists, no_clique };

struct TraceEvent {
    enum class Kind { interdict_pair, interdict_vertex, enter_part2, enter_part3 };
    Kind kind = Kind::enter_part2;
    int a = -1; // pair: lower id / vertex: id
    int b = -1; // pair: higher id
    int cost = 0;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct PolyCliqueTrace {
    int k = 0;
    long long initial_budget = 0;
    std::vector<TraceEvent> steps;
    Decision decision = Decision::no_clique;
    int final_t_size = 0;
    long long final_budget = 0;
    VertexSet final_t;            // surviving vertex set
    bool final_t_is_clique = false;
    std::vector<Choice> choices;  // replaying these reproduces the trace

    friend bool operator==(const PolyCliqueTrace&, const PolyCliqueTrace&) = default;
};

// Runs the three-part interdiction procedure:
//   Part 1 repeatedly removes a cheapest affordable pair (budget -= cost,
//          prices refreshed, pairs incident to removed vertices dropped),
//   Part 2 does the same for single vertices (isolated ones cost 0),
//   Part 3 declares a k-clique present iff exactly k vertices survive.
// Ties among cheapest candidates are resolved by `policy`. An empty queue
// falls through to the next part; a never-affordable removal does the same.
PolyCliqueTrace run(const Graph& g, int k, ChoicePolicy policy);

// Largest k in n..1 whose run decides clique_exists, else 0. The policy is
// copied fresh for each k.
int max_clique_via_decision(const Graph& g, const ChoicePolicy& policy);

// Depth-first enumeration over every resolution of the minimum-cost tie sets.
// Adversarial: first trace whose decision disagrees with the exact oracle's
// has_k_clique answer. Optimistic: first that agrees. nullopt if none exists.
// Throws resource_error once node_cap states have been expanded.
std::optional<PolyCliqueTrace> search_traces(const Graph& g, int k, SearchMode mode,
                                             std::uint64_t node_cap = 1'000'000,
                                             SearchStats* stats = nullptr);

} // namespace cliquelab::poly_clique
