#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace reconf {

using Vertex = int;

/// A caller broke a documented precondition (bad id, wrong palette, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size or memory cap would be exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-universe bitset of vertex ids. Graphs up to 128 vertices stay inline.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);

    static VertexSet full(int universe);
    static VertexSet from_vector(int universe, const std::vector<Vertex>& members);

    int universe() const { return universe_; }
    bool contains(Vertex v) const
    {
        return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(Vertex v);
    void erase(Vertex v);
    void clear();

    int size() const;
    bool empty() const;

    /// Smallest member, or -1.
    Vertex first() const;
    /// Smallest member strictly greater than v, or -1.
    Vertex next(Vertex v) const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::vector<Vertex> to_vector() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

private:
    void check(Vertex v) const;

    int universe_ = 0;
    boost::container::small_vector<std::uint64_t, 2> words_;
};

/// Simple undirected graph on dense ids 0..n-1 with optional display labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws PreconditionError on self-loops, out-of-range ids or duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int size() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const;

    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
    const VertexSet& neighbours(Vertex v) const { return adjacency_[v]; }
    VertexSet closed_neighbourhood(Vertex v) const;
    int degree(Vertex v) const { return adjacency_[v].size(); }
    int max_degree() const;
    VertexSet vertices() const { return VertexSet::full(size()); }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool has_labels() const { return !labels_.empty(); }
    const std::map<Vertex, std::string>& labels() const { return labels_; }
    void set_label(Vertex v, std::string label);
    /// Display name: the label when present, the decimal id otherwise.
    std::string name(Vertex v) const;
    /// Vertex carrying the given label, or -1.
    Vertex find_label(const std::string& label) const;

    /// Adjacency equality; labels are metadata and are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    void check(Vertex v) const;

    std::vector<VertexSet> adjacency_;
    std::map<Vertex, std::string> labels_;
};

/// Disjoint parts covering `ground`, ordered by smallest member.
struct Partition {
    VertexSet ground;
    std::vector<VertexSet> parts;
};

struct InducedSubgraph {
    Graph graph;
    /// old id -> new id, -1 for dropped vertices.
    std::vector<Vertex> old_to_new;
    /// new id -> old id (ascending).
    std::vector<Vertex> new_to_old;
};

Graph complement(const Graph& g);

/// Order-preserving relabelling onto 0..|s|-1. Labels follow their vertices.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

Partition connected_components(const Graph& g);
/// Components of the subgraph induced by `within`, in host ids.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
/// Component of g[within] containing `start` (which must lie in `within`).
VertexSet component_of(const Graph& g, const VertexSet& within, Vertex start);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_complete(const Graph& g);
/// The complement of g[s] is connected. Throws on empty s.
bool is_anticonnected(const Graph& g, const VertexSet& s);

/// Exhaustive search for an induced x-y path with at least 3 edges.
/// Exponential; intended as an oracle on small graphs.
bool has_long_chordless_path(const Graph& g, Vertex x, Vertex y);

} // namespace reconf
