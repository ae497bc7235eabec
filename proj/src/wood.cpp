#include "cliquelab/wood.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "cliquelab/oracle.hpp"

namespace cliquelab::wood {

std::string NodeRef::name() const {
    switch (kind) {
    case Kind::source: return "s";
    case Kind::sink: return "t";
    case Kind::edge_node:
        return "e" + std::to_string(edge.first) + "_" + std::to_string(edge.second);
    case Kind::vertex_node: return "v" + std::to_string(vertex);
    }
    return "?";
}

FlowNetwork build_gh(const Graph& g) {
    FlowNetwork net;
    net.edge_nodes = g.edges();
    net.vertex_nodes = g.vertices();
    for (const auto& e : net.edge_nodes)
        net.arcs.push_back({NodeRef::src(), NodeRef::edge_of(e), 2, ArcClass::a1});
    for (const auto& e : net.edge_nodes) {
        net.arcs.push_back({NodeRef::edge_of(e), NodeRef::vertex_of(e.first), 1, ArcClass::a2});
        net.arcs.push_back({NodeRef::edge_of(e), NodeRef::vertex_of(e.second), 1, ArcClass::a2});
    }
    for (int v : net.vertex_nodes)
        net.arcs.push_back({NodeRef::vertex_of(v), NodeRef::snk(), 1, ArcClass::a3});
    return net;
}

namespace {

struct ResidualGraph {
    // forward arc i has residual cap[2i], its reverse cap[2i+1]
    std::vector<int> cap;
    std::vector<int> head;               // per directed residual arc
    std::vector<std::vector<int>> out;   // node -> residual arc indices
    std::map<NodeRef, int> index;
    std::vector<NodeRef> nodes;

    int node_id(const NodeRef& n) {
        auto it = index.find(n);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        index.emplace(n, id);
        nodes.push_back(n);
        out.emplace_back();
        return id;
    }

    explicit ResidualGraph(const FlowNetwork& net) {
        node_id(NodeRef::src());
        node_id(NodeRef::snk());
        for (const auto& a : net.arcs) {
            int t = node_id(a.tail);
            int h = node_id(a.head);
            out[static_cast<size_t>(t)].push_back(static_cast<int>(cap.size()));
            cap.push_back(a.capacity);
            head.push_back(h);
            out[static_cast<size_t>(h)].push_back(static_cast<int>(cap.size()));
            cap.push_back(0);
            head.push_back(t);
        }
    }
};

} // namespace

MaxFlowResult max_flow_detail(const FlowNetwork& net) {
    ResidualGraph rg(net);
    const int s = 0, t = 1;
    const int n = static_cast<int>(rg.nodes.size());

    int total = 0;
    for (;;) {
        // shortest augmenting path
        std::vector<int> parent_arc(static_cast<size_t>(n), -1);
        std::vector<bool> seen(static_cast<size_t>(n), false);
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty() && !seen[t]) {
            int u = queue.front();
            queue.pop_front();
            for (int arc : rg.out[static_cast<size_t>(u)]) {
                int v = rg.head[static_cast<size_t>(arc)];
                if (seen[static_cast<size_t>(v)] || rg.cap[static_cast<size_t>(arc)] <= 0) continue;
                seen[static_cast<size_t>(v)] = true;
                parent_arc[static_cast<size_t>(v)] = arc;
                queue.push_back(v);
            }
        }
        if (!seen[t]) break;

        int bottleneck = 0;
        for (int v = t; v != s;) {
            int arc = parent_arc[static_cast<size_t>(v)];
            int c = rg.cap[static_cast<size_t>(arc)];
            bottleneck = bottleneck == 0 ? c : std::min(bottleneck, c);
            v = rg.head[static_cast<size_t>(arc ^ 1)];
        }
        for (int v = t; v != s;) {
            int arc = parent_arc[static_cast<size_t>(v)];
            rg.cap[static_cast<size_t>(arc)] -= bottleneck;
            rg.cap[static_cast<size_t>(arc ^ 1)] += bottleneck;
            v = rg.head[static_cast<size_t>(arc ^ 1)];
        }
        total += bottleneck;
    }

    MaxFlowResult result;
    result.value = total;
    result.arc_flow.reserve(net.arcs.size());
    for (size_t i = 0; i < net.arcs.size(); ++i)
        result.arc_flow.push_back(net.arcs[i].capacity - rg.cap[2 * i]);

    // residual reachability gives a min cut
    std::vector<bool> reach(static_cast<size_t>(n), false);
    std::deque<int> queue{s};
    reach[s] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int arc : rg.out[static_cast<size_t>(u)]) {
            int v = rg.head[static_cast<size_t>(arc)];
            if (!reach[static_cast<size_t>(v)] && rg.cap[static_cast<size_t>(arc)] > 0) {
                reach[static_cast<size_t>(v)] = true;
                queue.push_back(v);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (reach[static_cast<size_t>(i)]) result.source_side.push_back(rg.nodes[static_cast<size_t>(i)]);
    for (const auto& a : net.arcs) {
        bool tail_in = reach[static_cast<size_t>(rg.index.at(a.tail))];
        bool head_in = reach[static_cast<size_t>(rg.index.at(a.head))];
        if (tail_in && !head_in) result.cut_capacity += a.capacity;
    }
    return result;
}

int max_flow(const FlowNetwork& net) {
    return max_flow_detail(net).value;
}

FlowNetwork remove_source_arcs(const FlowNetwork& net, const std::vector<Edge>& edges) {
    std::set<Edge> live(net.edge_nodes.begin(), net.edge_nodes.end());
    std::set<Edge> doomed;
    for (const auto& e : edges) {
        Edge norm = make_edge(e.first, e.second);
        if (!live.count(norm))
            throw domain_error("no A1 arc for edge (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + ")");
        doomed.insert(norm);
    }
    FlowNetwork out;
    out.edge_nodes = net.edge_nodes;
    out.vertex_nodes = net.vertex_nodes;
    for (const auto& a : net.arcs)
        if (!(a.cls == ArcClass::a1 && doomed.count(a.head.edge))) out.arcs.push_back(a);
    return out;
}

FlowNetwork remove_vertex_nodes(const FlowNetwork& net, const VertexSet& removed) {
    FlowNetwork out;
    out.edge_nodes = net.edge_nodes;
    for (int v : net.vertex_nodes)
        if (!removed.count(v)) out.vertex_nodes.push_back(v);
    auto gone = [&](const NodeRef& n) {
        return n.kind == NodeRef::Kind::vertex_node && removed.count(n.vertex) != 0;
    };
    for (const auto& a : net.arcs)
        if (!gone(a.tail) && !gone(a.head)) out.arcs.push_back(a);
    return out;
}

bool check_lemma1(const Graph& g) {
    int covered = 0;
    for (int v : g.vertices())
        if (degree(g, v) > 0) ++covered;
    return max_flow(build_gh(g)) == covered;
}

namespace {

// C(n,k) saturating at limit+1 so callers can compare against a cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > limit) return limit + 1;
        r = r * (n - k + i) / i;
    }
    return std::min(r, limit + 1);
}

} // namespace

TheoremCheck verify_wood_theorem(const Graph& g, int k, std::uint64_t subset_cap) {
    if (k < 0) throw domain_error("k must be nonnegative");
    TheoremCheck check;
    check.clique_exists = oracle::has_k_clique(g, k).has_value();

    const auto edges = g.edges();
    const long long m = static_cast<long long>(edges.size());
    check.required_removals = m - static_cast<long long>(k) * (k - 1) / 2;

    if (check.required_removals < 0) {
        // no subset of the mandated size exists, so the interdiction side is
        // vacuously false and so must be the clique side
        check.interdiction_achieves_k = false;
        check.holds = !check.clique_exists;
        return check;
    }

    const auto need = static_cast<std::uint64_t>(check.required_removals);
    std::uint64_t subset_count =
        binomial_capped(static_cast<std::uint64_t>(m), need, subset_cap);
    if (subset_count > subset_cap)
        throw resource_error("subset enumeration above cap (" + std::to_string(subset_cap) + ")", 0);

    const FlowNetwork net = build_gh(g);

    // enumerate index combinations of size `need`
    std::vector<size_t> pick(static_cast<size_t>(need));
    for (size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    for (;;) {
        ++check.subsets_enumerated;
        std::vector<Edge> removal;
        removal.reserve(pick.size());
        for (size_t i : pick) removal.push_back(edges[i]);
        if (max_flow(remove_source_arcs(net, removal)) == k) {
            check.interdiction_achieves_k = true;
            check.witness_removal = removal;
            break;
        }
        // next combination
        if (pick.empty()) break;
        int pos = static_cast<int>(pick.size()) - 1;
        while (pos >= 0 &&
               pick[static_cast<size_t>(pos)] ==
                   static_cast<size_t>(m) - pick.size() + static_cast<size_t>(pos))
            --pos;
        if (pos < 0) break;
        ++pick[static_cast<size_t>(pos)];
        for (size_t i = static_cast<size_t>(pos) + 1; i < pick.size(); ++i)
            pick[i] = pick[i - 1] + 1;
    }

    check.holds = check.interdiction_achieves_k == check.clique_exists;
    return check;
}

int vertex_interdiction_value(const Graph& g, const VertexSet& removed) {
    for (int v : removed)
        if (!g.has_vertex(v)) throw domain_error("unknown vertex " + std::to_string(v));

    int flow = max_flow(remove_vertex_nodes(build_gh(g), removed));

    // survivors with a surviving neighbor; the flow must equal this count
    int covered = 0;
    for (int v : g.vertices()) {
        if (removed.count(v)) continue;
        for (int w : g.neighbors(v)) {
            if (!removed.count(w)) {
                ++covered;
                break;
            }
        }
    }
    if (flow != covered)
        throw std::logic_error("vertex interdiction flow " + std::to_string(flow) +
                               " != surviving coverage " + std::to_string(covered));
    return flow;
}

std::string serialize_gh_dot(const FlowNetwork& net) {
    std::ostringstream out;
    out << "digraph gh {\n  rankdir=LR;\n";
    out << "  s [shape=box];\n  t [shape=box];\n";
    out << "  { rank=same;";
    for (const auto& e : net.edge_nodes) out << ' ' << NodeRef::edge_of(e).name() << ';';
    out << " }\n  { rank=same;";
    for (int v : net.vertex_nodes) out << ' ' << NodeRef::vertex_of(v).name() << ';';
    out << " }\n";
    for (const auto& a : net.arcs)
        out << "  " << a.tail.name() << " -> " << a.head.name() << " [label=\"" << a.capacity
            << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace cliquelab::wood
