#include "cliquelab/fixtures.hpp"

#include <array>

namespace cliquelab::fixtures {

namespace {

Graph from_labeled_edges(int n, const std::vector<Edge>& edges) {
    Graph g;
    for (int v = 0; v < n; ++v) {
        g.add_vertex(v);
        g.set_label(v, std::to_string(v + 1));
    }
    // edges given in 1-based display labels
    for (const auto& [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

} // namespace

Graph fig1() {
    return from_labeled_edges(6, {{6, 4}, {4, 5}, {2, 3}, {3, 4}, {1, 2}, {2, 5}, {5, 1}});
}

Graph fig2() {
    return from_labeled_edges(7, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 4}, {3, 5},
                                  {1, 6}, {2, 7},
                                  {4, 5}, {4, 6}, {4, 7}, {5, 7}, {5, 6}, {6, 7}});
}

Graph tamta_family(int k) {
    if (k < 4) throw domain_error("tamta_family requires k >= 4");
    Graph g;
    const int ck_begin = 0;          // C_k  = {0 .. k-1}, v = 0, v' = 1
    const int c1_begin = k;          // C_{k-1}  = {k .. 2k-2}, attached at k
    const int c2_begin = 2 * k - 1;  // C'_{k-1} = {2k-1 .. 3k-3}, attached at 2k-1
    const int total = 3 * k - 2;
    for (int v = 0; v < total; ++v) g.add_vertex(v);

    auto add_clique = [&](int begin, int size) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) g.add_edge(begin + i, begin + j);
    };
    add_clique(ck_begin, k);
    add_clique(c1_begin, k - 1);
    add_clique(c2_begin, k - 1);

    g.add_edge(0, c1_begin); // v  -> C_{k-1}
    g.add_edge(1, c2_begin); // v' -> C'_{k-1}

    // matching between the non-attached vertices of the two smaller cliques
    for (int i = 0; i < k - 2; ++i) g.add_edge(c1_begin + 1 + i, c2_begin + 1 + i);

    return g;
}

Graph laplante15() {
    Graph g;
    for (int v = 0; v < 5; ++v) {
        g.add_vertex(v);
        g.set_label(v, std::to_string(v + 1));
    }
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);

    // one lettered vertex per 3-subset of the 5-clique, in A..J order
    static constexpr std::array<std::array<int, 3>, 10> subsets{{
        {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
        {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
    }};
    for (int i = 0; i < 10; ++i) {
        int letter = 5 + i;
        g.add_vertex(letter);
        g.set_label(letter, std::string(1, static_cast<char>('A' + i)));
        for (int member : subsets[static_cast<size_t>(i)]) g.add_edge(letter, member);
    }
    return g;
}

std::optional<Graph> by_name(const std::string& name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "laplante15") return laplante15();
    if (name.rfind("tamta:", 0) == 0) {
        try {
            int k = std::stoi(name.substr(6));
            if (k < 4) return std::nullopt;
            return tamta_family(k);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"fig1", "fig2", "laplante15", "tamta:<k>"};
}

} // namespace cliquelab::fixtures
