#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

// Events of an elimination certificate. All ids are host-graph ids; each event
// is stated about the graph left after all earlier removals.

/// {x, y} nonadjacent with N(x) ⊆ N(y); x is deleted.
struct PairRemoval {
    Vertex x = -1;
    Vertex y = -1;
};

/// 2-pair {x, y} with S(x, y) = {z} and C_x = {x, w}, {x, w, z} a triangle; x and w are deleted.
struct TriangleRemoval {
    Vertex x = -1;
    Vertex w = -1;
    Vertex z = -1;
    Vertex y = -1;
};

/// 2-pair {x, y} with empty separator: C_x is a whole component of the current
/// graph and a clique of two or three vertices. The component is deleted.
struct CliqueComponentRemoval {
    Vertex x = -1;
    Vertex y = -1;
    VertexSet clique;
};

/// The residual graph is complete.
struct CompleteBase {
    VertexSet remaining;
};

using EliminationEvent = std::variant<PairRemoval, TriangleRemoval, CliqueComponentRemoval, CompleteBase>;

struct EliminationCertificate {
    std::vector<EliminationEvent> events;

    bool uses_triangle_removal() const;
};

/// Greedy elimination driven by qualifying_two_pair; none when some stage has no qualifying pair.
std::optional<EliminationCertificate> find_elimination_certificate(const Graph& g);

/// Replays the certificate on g and returns the first structural fact that fails, if any.
std::optional<std::string> check_certificate(const Graph& g, const EliminationCertificate& cert);

} // namespace reconf
