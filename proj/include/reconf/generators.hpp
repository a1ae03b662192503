#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reconf/explorer.hpp"
#include "reconf/graph.hpp"

namespace reconf {

/// The counterexample family: four cliques K_{k-1} on u, v, w, z plus x and y.
struct GkBundle {
    Graph graph;
    int k = 0;
    Colouring base_colouring;
    std::optional<Colouring> frozen_colouring;
    /// False when the frozen search ran out of budget without a verdict.
    bool frozen_search_complete = true;
};

/// Vertex ids: x = 0, y = 1, then u_1..u_{k-1}, v_1.., w_1.., z_1.. in blocks.
Graph gk_graph(int k);
GkBundle generate_gk(int k, std::chrono::milliseconds frozen_budget = std::chrono::seconds(60));

/// path, cycle, complete, complete_bipartite_minus_matching (parameter n per side),
/// diamond, p5, p5_complement, c5, 2k2.
Graph generate_named(const std::string& name, int n = 0);

/// Erdős–Rényi G(n, p), deterministic in (n, p, seed).
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// Complement of a random chordal graph grown by adding vertices onto cliques.
Graph random_cochordal(int n, std::uint64_t seed);

struct SearchCandidate {
    Graph graph;
    int chromatic_number = 0;
    VertexSet failing_subgraph;
    std::string canonical_code;
};

struct SearchReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<SearchCandidate> candidates;
    std::uint64_t graphs_examined = 0;
    double seconds_spent = 0;
    /// True when the whole labelled space was enumerated (small n only).
    bool exhausted = false;
};

/// Looks for (P5, P5-complement, C5)-free graphs with chromatic number 4 that are not compact.
/// n <= 7 enumerates every labelled graph; larger n runs a seeded random walk until the budget
/// or `max_candidates` distinct hits.
SearchReport search_h(int n, std::chrono::milliseconds budget, std::uint64_t seed, int max_candidates = 4);

/// Lexicographically largest upper-triangle adjacency string over all vertex orders (n <= 9).
std::string canonical_code(const Graph& g);

} // namespace reconf
