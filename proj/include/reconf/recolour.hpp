#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reconf/certificate.hpp"
#include "reconf/explorer.hpp"
#include "reconf/graph.hpp"

namespace reconf {

struct RecolourStep {
    Vertex vertex = -1;
    int new_colour = -1;

    friend bool operator==(const RecolourStep&, const RecolourStep&) = default;
};

struct RecolourSequence {
    Colouring start;
    std::vector<RecolourStep> steps;
    Colouring end;

    std::size_t length() const { return steps.size(); }
    /// Number of steps touching each vertex.
    std::vector<int> per_vertex_counts(int n) const;
    int max_per_vertex(int n) const;
};

struct ValidationReport {
    bool ok = false;
    /// Index of the offending step, -1 for start/end problems, absent on success.
    std::optional<long> violation_index;
    std::string message;
    std::vector<int> per_vertex_counts;
    std::size_t total_length = 0;
};

/// Recolours K_n from a to b with at most two switches per vertex overall.
/// `a` and `b` must be injective with palette >= n + 1.
RecolourSequence recolour_complete(int n, int palette, const Colouring& a, const Colouring& b);

/// Follows the elimination certificate to transform a into b on a compact graph.
RecolourSequence recolour_compact(const Graph& g, const EliminationCertificate& cert, const Colouring& a,
                                  const Colouring& b);

ValidationReport validate_sequence(const Graph& g, const RecolourSequence& s);

/// Exact distance between a and b in R_k(g); none when in different components.
std::optional<long> bfs_distance(const Graph& g, int k, const Colouring& a, const Colouring& b,
                                 std::size_t cap = default_colouring_cap);

} // namespace reconf
