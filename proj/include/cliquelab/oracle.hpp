#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab::oracle {

struct CliqueResult {
    int size = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

// Exact maximum clique by branch and bound over bitset-mirrored adjacency.
// The witness is the lexicographically smallest maximum clique (candidates
// are expanded in ascending id order, so the first clique of the final size
// is the lex leader). Empty graph: size 0, empty witness.
CliqueResult max_clique(const Graph& g);

// Witness k-clique if one exists (lex smallest), else nullopt. k=0 yields an
// engaged empty witness.
std::optional<VertexSet> has_k_clique(const Graph& g, int k);

// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted.
std::vector<VertexSet> maximal_cliques(const Graph& g);

} // namespace cliquelab::oracle
