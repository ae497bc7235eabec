#include "cliquelab/oracle.hpp"

#include <algorithm>
#include <bit>

namespace cliquelab::oracle {

namespace {

// Minimal dynamic bitset: one word covers every fixture (n <= 64), the
// vector form handles anything larger with the same code path.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int n = 0) : w(static_cast<size_t>((n + 63) / 64), 0) {}

    void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    Bits and_with(const Bits& o) const {
        Bits r(*this);
        for (size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
        return r;
    }

    // ids of set bits, ascending
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>(i * 64) + b);
                x &= x - 1;
            }
        }
    }
};

// Dense view of a graph: index i <-> g.vertices()[i], adjacency as bit rows.
struct DenseGraph {
    std::vector<int> ids;
    std::vector<Bits> adj;

    explicit DenseGraph(const Graph& g) : ids(g.vertices()) {
        int n = static_cast<int>(ids.size());
        adj.assign(static_cast<size_t>(n), Bits(n));
        std::map<int, int> index;
        for (int i = 0; i < n; ++i) index[ids[static_cast<size_t>(i)]] = i;
        for (const auto& [u, v] : g.edges()) {
            int a = index[u], b = index[v];
            adj[static_cast<size_t>(a)].set(b);
            adj[static_cast<size_t>(b)].set(a);
        }
    }

    int n() const { return static_cast<int>(ids.size()); }

    VertexSet to_ids(const std::vector<int>& stack) const {
        VertexSet s;
        for (int i : stack) s.insert(ids[static_cast<size_t>(i)]);
        return s;
    }
};

struct MaxCliqueSearch {
    const DenseGraph& dg;
    int best = 0;
    std::vector<int> best_stack;
    std::vector<int> stack;
    std::uint64_t nodes = 0;

    explicit MaxCliqueSearch(const DenseGraph& d) : dg(d) {}

    // Candidates are expanded in ascending index order and the incumbent is
    // only replaced on strict improvement, so the recorded witness is the
    // lex-smallest clique of the final size.
    void expand(const Bits& cand) {
        ++nodes;
        if (static_cast<int>(stack.size()) > best) {
            best = static_cast<int>(stack.size());
            best_stack = stack;
        }
        int remaining = cand.count();
        cand.for_each([&](int v) {
            if (static_cast<int>(stack.size()) + remaining <= best) {
                remaining = 0; // bound hit; skip the rest of this level
                return;
            }
            --remaining;
            stack.push_back(v);
            Bits next = cand.and_with(dg.adj[static_cast<size_t>(v)]);
            // restrict to indices above v so each clique is visited once
            for (int i = 0; i <= v; ++i)
                if (next.test(i)) next.w[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63));
            expand(next);
            stack.pop_back();
        });
    }
};

struct KCliqueSearch {
    const DenseGraph& dg;
    int target;
    std::vector<int> stack;
    std::optional<std::vector<int>> found;

    void expand(const Bits& cand) {
        if (static_cast<int>(stack.size()) == target) {
            found = stack;
            return;
        }
        int remaining = cand.count();
        cand.for_each([&](int v) {
            if (found || static_cast<int>(stack.size()) + remaining < target) {
                remaining = 0;
                return;
            }
            --remaining;
            stack.push_back(v);
            Bits next = cand.and_with(dg.adj[static_cast<size_t>(v)]);
            for (int i = 0; i <= v; ++i)
                if (next.test(i)) next.w[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63));
            expand(next);
            stack.pop_back();
        });
    }
};

struct BronKerbosch {
    const DenseGraph& dg;
    std::vector<VertexSet>& out;
    std::vector<int> stack;

    void run(Bits p, Bits x) {
        if (p.empty() && x.empty()) {
            out.push_back(dg.to_ids(stack));
            return;
        }
        // pivot: maximize |P ∩ N(u)| over P ∪ X
        int pivot = -1, pivot_score = -1;
        auto consider = [&](int u) {
            int score = p.and_with(dg.adj[static_cast<size_t>(u)]).count();
            if (score > pivot_score) {
                pivot_score = score;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        std::vector<int> branch;
        p.for_each([&](int v) {
            if (!dg.adj[static_cast<size_t>(pivot)].test(v)) branch.push_back(v);
        });
        for (int v : branch) {
            stack.push_back(v);
            run(p.and_with(dg.adj[static_cast<size_t>(v)]),
                x.and_with(dg.adj[static_cast<size_t>(v)]));
            stack.pop_back();
            p.w[static_cast<size_t>(v) >> 6] &= ~(1ull << (v & 63));
            x.set(v);
        }
    }
};

} // namespace

CliqueResult max_clique(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    DenseGraph dg(g);
    Bits all(dg.n());
    for (int i = 0; i < dg.n(); ++i) all.set(i);
    MaxCliqueSearch search(dg);
    search.expand(all);
    return {search.best, dg.to_ids(search.best_stack), search.nodes};
}

std::optional<VertexSet> has_k_clique(const Graph& g, int k) {
    if (k < 0) throw domain_error("k must be nonnegative");
    if (k == 0) return VertexSet{};
    if (k > g.vertex_count()) return std::nullopt;
    DenseGraph dg(g);
    Bits all(dg.n());
    for (int i = 0; i < dg.n(); ++i) all.set(i);
    KCliqueSearch search{dg, k, {}, std::nullopt};
    search.expand(all);
    if (!search.found) return std::nullopt;
    return dg.to_ids(*search.found);
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.vertex_count() == 0) return out;
    DenseGraph dg(g);
    Bits p(dg.n()), x(dg.n());
    for (int i = 0; i < dg.n(); ++i) p.set(i);
    BronKerbosch bk{dg, out, {}};
    bk.run(p, x);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cliquelab::oracle
