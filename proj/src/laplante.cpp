#include "cliquelab/laplante.hpp"

#include <algorithm>

#include "cliquelab/oracle.hpp"

namespace cliquelab::laplante {

std::map<int, Neighborhood> neighborhoods(const Graph& g, NeighborhoodStats* stats) {
    std::map<int, Neighborhood> out;
    std::uint64_t ops = 0;
    for (int v : g.vertices()) {
        Neighborhood& nbhd = out[v];
        nbhd.center = v;
        const auto& nbrs = g.neighbors(v);
        for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
            auto jt = it;
            for (++jt; jt != nbrs.end(); ++jt) {
                ++ops;
                if (g.has_edge(*it, *jt)) nbhd.pairs.insert(make_edge(*it, *jt));
            }
        }
    }
    if (stats) stats->basic_ops = ops;
    return out;
}

namespace {

int other_end(Edge e, int key) { return e.first == key ? e.second : e.first; }

// Pairs {key, r} that can be absorbed right now, with their cross pairs.
struct Absorbable {
    Edge pair;
    std::vector<Edge> cross;
};

std::vector<Absorbable> absorbable_pairs(const Neighborhood& nbhd, const VertexSet& merged,
                                         const std::set<Edge>& used, int key) {
    std::vector<Absorbable> out;
    for (const Edge& p : nbhd.pairs) {
        if (p.first != key && p.second != key) continue;
        if (used.count(p)) continue;
        int r = other_end(p, key);
        std::vector<Edge> cross;
        bool ok = true;
        for (int m : merged) {
            if (m == nbhd.center || m == key) continue;
            Edge need = make_edge(m, r);
            if (!nbhd.pairs.count(need)) {
                ok = false;
                break;
            }
            cross.push_back(need);
        }
        if (ok) out.push_back({p, std::move(cross)});
    }
    return out; // neighborhood set order keeps this lexicographic
}

} // namespace

MergeTrace merge_around(const Graph& g, const Neighborhood& nbhd, Edge start_pair,
                        int key, ChoicePolicy& policy) {
    start_pair = make_edge(start_pair.first, start_pair.second);
    if (!nbhd.pairs.count(start_pair))
        throw domain_error("start pair is not in the neighborhood");
    if (key != start_pair.first && key != start_pair.second)
        throw domain_error("key must be a member of the start pair");
    if (!g.has_vertex(nbhd.center)) throw domain_error("neighborhood center not in graph");

    MergeTrace trace;
    trace.center = nbhd.center;
    trace.start_pair = start_pair;
    trace.key = key;
    trace.result = {nbhd.center, start_pair.first, start_pair.second};

    std::set<Edge> used{start_pair};
    for (;;) {
        auto candidates = absorbable_pairs(nbhd, trace.result, used, key);
        if (candidates.empty()) break;
        std::vector<std::pair<int, int>> offered;
        offered.reserve(candidates.size());
        for (const auto& c : candidates) offered.push_back(c.pair);
        Edge picked = policy.pick_pair(offered);
        const auto& chosen = *std::find_if(candidates.begin(), candidates.end(),
                                           [&](const Absorbable& c) { return c.pair == picked; });
        trace.merges.push_back({chosen.pair, chosen.cross});
        trace.result.insert(other_end(chosen.pair, key));
        used.insert(chosen.pair);
    }
    return trace;
}

namespace {

void run_vertex(const Graph& g, const Neighborhood& nbhd, ChoicePolicy& policy,
                LaplanteResult& out) {
    out.per_vertex[nbhd.center]; // every vertex gets an entry
    std::set<Edge> unmerged = nbhd.pairs;
    while (!unmerged.empty()) {
        Edge start = *unmerged.begin();
        int key = policy.pick_vertex({start.first, start.second});
        MergeTrace trace = merge_around(g, nbhd, start, key, policy);
        unmerged.erase(start);
        for (const auto& m : trace.merges) unmerged.erase(m.absorbed);
        out.per_vertex[nbhd.center].insert(trace.result);
        out.cliques.insert(trace.result);
        out.traces.push_back(std::move(trace));
    }
}

} // namespace

LaplanteResult run(const Graph& g, ChoicePolicy policy) {
    NeighborhoodStats stats;
    auto nbhds = neighborhoods(g, &stats);

    LaplanteResult out;
    out.basic_ops = stats.basic_ops;
    for (int v : g.vertices()) run_vertex(g, nbhds.at(v), policy, out);

    for (const auto& clique : out.cliques) {
        int size = static_cast<int>(clique.size());
        if (size > out.global_max_size) {
            out.global_max_size = size;
            out.global_max_witness = clique;
        }
    }
    out.choices = policy.log();
    return out;
}

namespace {

// Per-vertex depth-first search over key and absorption choices, mirroring
// run_vertex()'s control flow exactly so a successful prefix replays as-is.
struct VertexSearch {
    const Neighborhood& nbhd;
    int target; // oracle max clique size
    SearchMode mode;
    std::uint64_t& nodes;
    std::uint64_t cap;
    std::vector<Choice> script;

    void bump() {
        if (++nodes > cap) throw resource_error("choice-tree node cap exceeded", nodes);
    }

    // Start-of-chain level: all merges so far stayed below target.
    bool search_run(const std::set<Edge>& unmerged) {
        bump();
        if (unmerged.empty()) return mode == SearchMode::adversarial;
        Edge start = *unmerged.begin();
        for (int key : {start.first, start.second}) {
            script.push_back(Choice::vertex(key));
            VertexSet merged{nbhd.center, start.first, start.second};
            if (search_chain(unmerged, merged, {start}, key)) return true;
            script.pop_back();
        }
        return false;
    }

    bool search_chain(const std::set<Edge>& unmerged, const VertexSet& merged,
                      const std::set<Edge>& used, int key) {
        bump();
        if (static_cast<int>(merged.size()) >= target)
            return mode == SearchMode::optimistic; // clique of oracle size reached
        auto candidates = absorbable_pairs(nbhd, merged, used, key);
        if (candidates.empty()) {
            std::set<Edge> next_unmerged = unmerged;
            for (const auto& u : used) next_unmerged.erase(u);
            return search_run(next_unmerged);
        }
        for (const auto& c : candidates) {
            script.push_back(Choice::pair(c.pair.first, c.pair.second));
            VertexSet next_merged = merged;
            next_merged.insert(other_end(c.pair, key));
            std::set<Edge> next_used = used;
            next_used.insert(c.pair);
            if (search_chain(unmerged, next_merged, next_used, key)) return true;
            script.pop_back();
        }
        return false;
    }
};

// Complete per-vertex script recorded from a replay: prefix choices first,
// lowest-id from there on.
std::vector<Choice> complete_vertex_script(const Graph& g, const Neighborhood& nbhd,
                                           const std::vector<Choice>& prefix) {
    ChoicePolicy policy = ChoicePolicy::scripted(prefix);
    LaplanteResult scratch;
    run_vertex(g, nbhd, policy, scratch);
    return policy.log();
}

} // namespace

std::optional<std::vector<Choice>> search_traces(const Graph& g, SearchMode mode,
                                                 std::uint64_t node_cap, SearchStats* stats) {
    auto nbhds = neighborhoods(g);
    const int target = oracle::max_clique(g).size;
    SearchStats local{0, 0, node_cap, false};

    std::vector<Choice> full;
    bool optimistic_hit = false;
    try {
        for (int v : g.vertices()) {
            const Neighborhood& nbhd = nbhds.at(v);
            if (mode == SearchMode::optimistic && optimistic_hit) {
                auto rest = complete_vertex_script(g, nbhd, {});
                full.insert(full.end(), rest.begin(), rest.end());
                continue;
            }
            VertexSearch search{nbhd, target, mode, local.nodes, node_cap, {}};
            bool ok = search.search_run(nbhd.pairs);
            ++local.leaves;
            if (mode == SearchMode::adversarial) {
                if (!ok) {
                    // this vertex finds an oracle-sized clique under every resolution
                    if (stats) *stats = local;
                    return std::nullopt;
                }
                full.insert(full.end(), search.script.begin(), search.script.end());
            } else {
                if (ok) {
                    optimistic_hit = true;
                    auto completed = complete_vertex_script(g, nbhd, search.script);
                    full.insert(full.end(), completed.begin(), completed.end());
                } else {
                    auto fallback = complete_vertex_script(g, nbhd, {});
                    full.insert(full.end(), fallback.begin(), fallback.end());
                }
            }
        }
    } catch (const resource_error& e) {
        local.nodes = e.explored();
        local.cap_hit = true;
        if (stats) *stats = local;
        throw;
    }
    if (stats) *stats = local;

    if (mode == SearchMode::adversarial) {
        if (target == 0) return std::nullopt; // nothing can sit strictly below zero
        return full;
    }
    if (optimistic_hit || target == 0) return full;
    // the oracle max may be unreachable outright (no triangles): only a
    // target of <= 2 can ever make run() agree, and then only at 0
    return std::nullopt;
}

} // namespace cliquelab::laplante
