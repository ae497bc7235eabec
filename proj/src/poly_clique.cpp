#include "cliquelab/poly_clique.hpp"

#include <algorithm>
#include <limits>

#include "cliquelab/oracle.hpp"

namespace cliquelab::poly_clique {

namespace {

void refresh_costs(InterdictionState& st) {
    st.vertex_cost.clear();
    st.pair_cost.clear();
    for (int v : st.residual.vertices()) st.vertex_cost[v] = degree(st.residual, v);
    for (const auto& e : st.residual.edges())
        st.pair_cost[e] = st.vertex_cost[e.first] + st.vertex_cost[e.second] - 1;
}

int min_pair_cost(const InterdictionState& st) {
    int best = std::numeric_limits<int>::max();
    for (const auto& [e, c] : st.pair_cost) best = std::min(best, c);
    return best;
}

int min_vertex_cost(const InterdictionState& st) {
    int best = std::numeric_limits<int>::max();
    for (const auto& [v, c] : st.vertex_cost) best = std::min(best, c);
    return best;
}

std::vector<std::pair<int, int>> cheapest_pairs(const InterdictionState& st, int cost) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, c] : st.pair_cost)
        if (c == cost) out.push_back(e);
    return out; // map order is already lexicographic
}

std::vector<int> cheapest_vertices(const InterdictionState& st, int cost) {
    std::vector<int> out;
    for (const auto& [v, c] : st.vertex_cost)
        if (c == cost) out.push_back(v);
    return out;
}

void apply_pair_removal(InterdictionState& st, Edge e, int cost) {
    st.residual = remove_vertices(st.residual, {e.first, e.second});
    st.budget -= cost;
    refresh_costs(st);
}

void apply_vertex_removal(InterdictionState& st, int v, int cost) {
    st.residual = remove_vertices(st.residual, {v});
    st.budget -= cost;
    refresh_costs(st);
}

Decision decide(const InterdictionState& st, int k) {
    return st.residual.vertex_count() == k ? Decision::clique_exists : Decision::no_clique;
}

PolyCliqueTrace finish_trace(PolyCliqueTrace trace, const InterdictionState& st,
                             const Graph& original, int k) {
    trace.decision = decide(st, k);
    trace.final_t_size = st.residual.vertex_count();
    trace.final_budget = st.budget;
    auto vs = st.residual.vertices();
    trace.final_t = VertexSet(vs.begin(), vs.end());
    trace.final_t_is_clique = is_clique(original, trace.final_t);
    return trace;
}

} // namespace

InterdictionState init_state(const Graph& g, int k) {
    if (k < 1) throw domain_error("k must be at least 1");
    InterdictionState st;
    st.residual = g;
    st.budget = static_cast<long long>(g.edge_count()) -
                static_cast<long long>(k) * (k - 1) / 2;
    refresh_costs(st);
    return st;
}

int pair_cost(const InterdictionState& st, int u, int v) {
    auto it = st.pair_cost.find(make_edge(u, v));
    if (it == st.pair_cost.end())
        throw domain_error("pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") is not live");
    return it->second;
}

bool state_consistent(const InterdictionState& st) {
    InterdictionState fresh;
    fresh.residual = st.residual;
    refresh_costs(fresh);
    return fresh.vertex_cost == st.vertex_cost && fresh.pair_cost == st.pair_cost;
}

PolyCliqueTrace run(const Graph& g, int k, ChoicePolicy policy) {
    InterdictionState st = init_state(g, k);
    PolyCliqueTrace trace;
    trace.k = k;
    trace.initial_budget = st.budget;

    // Part 1: cheapest-pair interdictions while affordable
    while (!st.pair_cost.empty()) {
        int cost = min_pair_cost(st);
        if (cost > st.budget) break;
        auto picked = policy.pick_pair(cheapest_pairs(st, cost));
        apply_pair_removal(st, picked, cost);
        trace.steps.push_back({TraceEvent::Kind::interdict_pair, picked.first, picked.second, cost});
    }
    trace.steps.push_back({TraceEvent::Kind::enter_part2, -1, -1, 0});

    // Part 2: cheapest-vertex interdictions while affordable
    while (!st.vertex_cost.empty()) {
        int cost = min_vertex_cost(st);
        if (cost > st.budget) break;
        int picked = policy.pick_vertex(cheapest_vertices(st, cost));
        apply_vertex_removal(st, picked, cost);
        trace.steps.push_back({TraceEvent::Kind::interdict_vertex, picked, -1, cost});
    }
    trace.steps.push_back({TraceEvent::Kind::enter_part3, -1, -1, 0});

    trace.choices = policy.log();
    return finish_trace(std::move(trace), st, g, k);
}

int max_clique_via_decision(const Graph& g, const ChoicePolicy& policy) {
    for (int k = g.vertex_count(); k >= 1; --k)
        if (run(g, k, policy).decision == Decision::clique_exists) return k;
    return 0;
}

namespace {

struct TraceSearch {
    const Graph& g;
    int k;
    bool oracle_has;
    SearchMode mode;
    std::uint64_t cap;
    SearchStats stats;
    std::vector<Choice> prefix;
    std::optional<PolyCliqueTrace> found;

    bool leaf_matches(Decision d) const {
        bool says_yes = d == Decision::clique_exists;
        return mode == SearchMode::adversarial ? says_yes != oracle_has : says_yes == oracle_has;
    }

    void bump() {
        if (++stats.nodes > cap) {
            stats.cap_hit = true;
            throw resource_error("choice-tree node cap exceeded", stats.nodes);
        }
    }

    bool dfs_part1(const InterdictionState& st) {
        bump();
        if (!st.pair_cost.empty()) {
            int cost = min_pair_cost(st);
            if (cost <= st.budget) {
                for (auto pick : cheapest_pairs(st, cost)) {
                    InterdictionState next = st;
                    apply_pair_removal(next, pick, cost);
                    prefix.push_back(Choice::pair(pick.first, pick.second));
                    if (dfs_part1(next)) return true;
                    prefix.pop_back();
                }
                return false;
            }
        }
        return dfs_part2(st);
    }

    bool dfs_part2(const InterdictionState& st) {
        bump();
        if (!st.vertex_cost.empty()) {
            int cost = min_vertex_cost(st);
            if (cost <= st.budget) {
                for (int pick : cheapest_vertices(st, cost)) {
                    InterdictionState next = st;
                    apply_vertex_removal(next, pick, cost);
                    prefix.push_back(Choice::vertex(pick));
                    if (dfs_part2(next)) return true;
                    prefix.pop_back();
                }
                return false;
            }
        }
        ++stats.leaves;
        if (!leaf_matches(decide(st, k))) return false;
        found = run(g, k, ChoicePolicy::scripted(prefix));
        return true;
    }
};

} // namespace

std::optional<PolyCliqueTrace> search_traces(const Graph& g, int k, SearchMode mode,
                                             std::uint64_t node_cap, SearchStats* stats) {
    TraceSearch search{g,
                       k,
                       oracle::has_k_clique(g, k).has_value(),
                       mode,
                       node_cap,
                       {0, 0, node_cap, false},
                       {},
                       std::nullopt};
    try {
        search.dfs_part1(init_state(g, k));
    } catch (const resource_error&) {
        if (stats) *stats = search.stats;
        throw;
    }
    if (stats) *stats = search.stats;
    return search.found;
}

} // namespace cliquelab::poly_clique
