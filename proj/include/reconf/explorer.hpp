#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

inline constexpr std::size_t default_colouring_cap = 16'000'000;
inline constexpr std::size_t default_diameter_cap = 50'000;

/// Assignment of colours 0..palette-1 to vertices 0..n-1.
struct Colouring {
    std::vector<int> assignment;
    int palette = 0;

    int operator[](Vertex v) const { return assignment[v]; }
    int size() const { return static_cast<int>(assignment.size()); }

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Entries in range and every edge bichromatic.
bool is_proper(const Graph& g, const Colouring& c);

/// Calls f on every proper k-colouring in lexicographic order; f returns false to stop.
void for_each_colouring(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& f);
std::size_t count_colourings(const Graph& g, int k, std::size_t cap = default_colouring_cap);
/// All proper k-colourings, lexicographic. CapacityError beyond `cap`.
std::vector<Colouring> enumerate_colourings(const Graph& g, int k, std::size_t cap = default_colouring_cap);

/// Materialized R_k(G): nodes sorted lexicographically, CSR adjacency.
class ReconfigGraph {
public:
    ReconfigGraph(const Graph& g, int k, std::size_t cap = default_colouring_cap);

    int vertex_count() const { return n_; }
    int palette() const { return k_; }
    std::size_t node_count() const { return n_ == 0 ? count_ : assignments_.size() / n_; }

    std::span<const std::uint8_t> assignment(std::size_t node) const
    {
        return {assignments_.data() + node * n_, static_cast<std::size_t>(n_)};
    }
    Colouring colouring(std::size_t node) const;
    std::optional<std::size_t> index_of(const Colouring& c) const;

    std::span<const std::uint32_t> neighbours(std::size_t node) const
    {
        return {targets_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
    }
    std::size_t degree(std::size_t node) const { return offsets_[node + 1] - offsets_[node]; }
    std::size_t edge_count() const { return targets_.size() / 2; }

    std::uint32_t component_id(std::size_t node) const { return component_[node]; }
    std::size_t component_count() const { return component_sizes_.size(); }
    const std::vector<std::size_t>& component_sizes() const { return component_sizes_; }

    /// Hop distances from `source`; -1 for unreachable nodes.
    std::vector<long> bfs_from(std::size_t source) const;
    /// Largest BFS depth from `source`.
    long eccentricity(std::size_t source) const;

private:
    std::optional<std::size_t> find_raw(const std::uint8_t* key) const;

    int n_ = 0;
    int k_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint8_t> assignments_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
    std::vector<std::uint32_t> component_;
    std::vector<std::size_t> component_sizes_;
};

ReconfigGraph build_reconfiguration_graph(const Graph& g, int k, std::size_t cap = default_colouring_cap);

struct ExplorationSummary {
    std::size_t colouring_count = 0;
    std::size_t component_count = 0;
    std::vector<std::size_t> component_sizes;
    /// Per component; none when the component was larger than the diameter cap.
    std::vector<std::optional<long>> component_diameters;
    std::vector<std::size_t> frozen_indices;
    /// Present when R is connected (and nonempty) and its diameter was computed.
    std::optional<long> diameter;
};

ExplorationSummary summarize(const ReconfigGraph& r, std::size_t diameter_cap = default_diameter_cap,
                             int threads = 1);

/// Every closed neighbourhood shows the whole palette. Throws on improper input.
bool is_frozen(const Graph& g, const Colouring& c);

struct FrozenSearchResult {
    std::vector<Colouring> colourings;
    /// False when the time budget or result limit stopped the search early.
    bool complete = true;
};

FrozenSearchResult find_frozen_colourings(const Graph& g, int k, std::chrono::milliseconds budget,
                                          std::size_t max_results = 0);

} // namespace reconf
