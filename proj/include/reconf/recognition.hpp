#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reconf/certificate.hpp"
#include "reconf/graph.hpp"

namespace reconf {

/// Nonadjacent x, y separated by S = N(x) ∩ N(y), with the two sides of the cut.
/// All sets live in the host graph's id space.
struct TwoPair {
    Vertex x = -1;
    Vertex y = -1;
    VertexSet separator;
    VertexSet component_of_x;
    VertexSet component_of_y;
};

enum class HoleKind { hole, antihole };

struct HoleWitness {
    std::vector<Vertex> cycle;
    HoleKind kind = HoleKind::hole;
};

enum class Pattern { p5, p5_complement, c5, two_k2, k4, diamond };

Pattern pattern_from_name(const std::string& name);
std::string pattern_name(Pattern p);

enum class CompactCase { nested_neighbourhood, small_clique_side };

struct QualifyingPair {
    TwoPair pair;
    CompactCase which = CompactCase::nested_neighbourhood;
};

struct CompactnessVerdict {
    bool compact = false;
    std::optional<EliminationCertificate> certificate;
    /// Minimum-size, lexicographically least induced subgraph violating every case.
    std::optional<VertexSet> failing_subgraph;
};

struct AnticonnectedProbe {
    VertexSet t;
    VertexSet d_of_t;
};

struct AnticonnectedTwoPair {
    AnticonnectedProbe probe;
    TwoPair pair;
};

class BoundExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 2-pair test for x != y inside g[within]; fills `out` when it is one.
bool two_pair_within(const Graph& g, const VertexSet& within, Vertex x, Vertex y, TwoPair* out = nullptr);

/// All 2-pairs (x < y) of g, resp. of g[within], in lexicographic order.
std::vector<TwoPair> find_two_pairs(const Graph& g);
std::vector<TwoPair> find_two_pairs(const Graph& g, const VertexSet& within);
bool has_two_pair(const Graph& g, const VertexSet& within);

std::optional<HoleWitness> find_hole(const Graph& g);
std::optional<HoleWitness> find_antihole(const Graph& g);
bool is_weakly_chordal(const Graph& g);

/// Chordality by maximum cardinality search and a perfect-elimination check.
bool is_chordal(const Graph& g);
/// (2K2, antihole)-free test.
bool is_co_chordal(const Graph& g);
/// Complement-is-chordal test; must agree with is_co_chordal.
bool is_co_chordal_via_complement(const Graph& g);

std::optional<VertexSet> contains_induced(const Graph& g, Pattern pattern);
bool is_p5_p5bar_c5_free(const Graph& g);

/// A proper k-colouring (entries 0..k-1) or none.
std::optional<std::vector<int>> find_colouring(const Graph& g, int k);
/// Least k <= upper_bound with a proper k-colouring; BoundExceededError otherwise.
int chromatic_number(const Graph& g, int upper_bound);

/// First qualifying oriented 2-pair of g[within]: case (ii) over all pairs before case (iii).
/// Throws if g[within] is complete.
std::optional<QualifyingPair> qualifying_two_pair(const Graph& g, const VertexSet& within);
std::optional<QualifyingPair> qualifying_two_pair(const Graph& g);

inline constexpr int default_compact_limit = 12;

CompactnessVerdict is_compact_bruteforce(const Graph& g, int vertex_limit = default_compact_limit);

/// Grows an anticonnected T from {m} and returns a 2-pair of g found inside D(T).
/// Requires g weakly chordal and a-m-b an induced path.
AnticonnectedTwoPair two_pair_via_anticonnected_set(const Graph& g, Vertex a, Vertex m, Vertex b);

/// Vertices outside t adjacent to every member of t.
VertexSet t_complete_vertices(const Graph& g, const VertexSet& t);

} // namespace reconf
