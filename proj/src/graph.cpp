#include "reconf/graph.hpp"

#include <algorithm>
#include <set>

namespace reconf {

namespace {

int word_count(int universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0)
{
    if (universe < 0) {
        throw PreconditionError("negative vertex-set universe");
    }
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) {
        const int remaining = universe - w * 64;
        s.words_[w] = remaining >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << remaining) - 1);
    }
    return s;
}

VertexSet VertexSet::from_vector(int universe, const std::vector<Vertex>& members)
{
    VertexSet s(universe);
    for (Vertex v : members) {
        s.insert(v);
    }
    return s;
}

void VertexSet::check(Vertex v) const
{
    if (v < 0 || v >= universe_) {
        throw PreconditionError("vertex id " + std::to_string(v) + " out of range 0.." +
                                std::to_string(universe_ - 1));
    }
}

void VertexSet::insert(Vertex v)
{
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::size() const
{
    int total = 0;
    for (auto w : words_) {
        total += __builtin_popcountll(w);
    }
    return total;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::first() const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) {
            return static_cast<Vertex>(w * 64 + __builtin_ctzll(words_[w]));
        }
    }
    return -1;
}

Vertex VertexSet::next(Vertex v) const
{
    int start = v + 1;
    if (start >= universe_) {
        return -1;
    }
    std::size_t w = start >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits) {
            return static_cast<Vertex>(w * 64 + __builtin_ctzll(bits));
        }
        if (++w >= words_.size()) {
            return -1;
        }
        bits = words_[w];
    }
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~other.words_[w]) {
            return false;
        }
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & other.words_[w]) {
            return true;
        }
    }
    return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

// ---------------------------------------------------------------------------

Graph::Graph(int n)
{
    if (n < 0) {
        throw PreconditionError("negative vertex count");
    }
    adjacency_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check(u);
        g.check(v);
        if (u == v) {
            throw PreconditionError("self-loop on vertex " + std::to_string(u));
        }
        if (g.adjacent(u, v)) {
            throw PreconditionError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check(Vertex v) const
{
    if (v < 0 || v >= size()) {
        throw PreconditionError("vertex id " + std::to_string(v) + " out of range for graph on " +
                                std::to_string(size()) + " vertices");
    }
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto& nb : adjacency_) {
        twice += nb.size();
    }
    return twice / 2;
}

VertexSet Graph::closed_neighbourhood(Vertex v) const
{
    VertexSet s = adjacency_[v];
    s.insert(v);
    return s;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& nb : adjacency_) {
        best = std::max(best, nb.size());
    }
    return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v = adjacency_[u].next(u); v != -1; v = adjacency_[u].next(v)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u == v) {
        throw PreconditionError("self-loop on vertex " + std::to_string(u));
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
}

void Graph::set_label(Vertex v, std::string label)
{
    check(v);
    labels_[v] = std::move(label);
}

std::string Graph::name(Vertex v) const
{
    auto it = labels_.find(v);
    return it == labels_.end() ? std::to_string(v) : it->second;
}

Vertex Graph::find_label(const std::string& label) const
{
    for (const auto& [v, l] : labels_) {
        if (l == label) {
            return v;
        }
    }
    return -1;
}

// ---------------------------------------------------------------------------

Graph complement(const Graph& g)
{
    const int n = g.size();
    Graph out(n);
    const VertexSet all = VertexSet::full(n);
    for (Vertex u = 0; u < n; ++u) {
        VertexSet nb = all - g.neighbours(u);
        nb.erase(u);
        nb.for_each([&](Vertex v) {
            if (v > u) {
                out.add_edge(u, v);
            }
        });
    }
    for (const auto& [v, l] : g.labels()) {
        out.set_label(v, l);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.size()) {
        if (s.universe() > g.size() && s.next(g.size() - 1) != -1) {
            throw PreconditionError("vertex set contains ids outside the graph");
        }
    }
    InducedSubgraph out;
    out.old_to_new.assign(g.size(), -1);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (s.contains(v)) {
            out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }
    const int m = static_cast<int>(out.new_to_old.size());
    out.graph = Graph(m);
    for (Vertex i = 0; i < m; ++i) {
        const Vertex u = out.new_to_old[i];
        for (Vertex j = i + 1; j < m; ++j) {
            if (g.adjacent(u, out.new_to_old[j])) {
                out.graph.add_edge(i, j);
            }
        }
    }
    for (const auto& [v, l] : g.labels()) {
        if (out.old_to_new[v] != -1) {
            out.graph.set_label(out.old_to_new[v], l);
        }
    }
    return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s)
{
    if (s.universe() > g.size() && s.next(g.size() - 1) != -1) {
        throw PreconditionError("vertex set contains ids outside the graph");
    }
    VertexSet keep = VertexSet::full(g.size());
    s.for_each([&](Vertex v) { keep.erase(v); });
    return induced_subgraph(g, keep);
}

VertexSet component_of(const Graph& g, const VertexSet& within, Vertex start)
{
    VertexSet seen(g.size());
    seen.insert(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet reach(g.size());
        frontier.for_each([&](Vertex v) { reach |= g.neighbours(v); });
        reach &= within;
        reach -= seen;
        seen |= reach;
        frontier = std::move(reach);
    }
    return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> parts;
    VertexSet left = within;
    for (Vertex v = left.first(); v != -1; v = left.first()) {
        VertexSet c = component_of(g, within, v);
        left -= c;
        parts.push_back(std::move(c));
    }
    return parts;
}

Partition connected_components(const Graph& g)
{
    Partition p;
    p.ground = g.vertices();
    p.parts = components_within(g, p.ground);
    return p;
}

bool is_connected(const Graph& g)
{
    if (g.size() == 0) {
        return true;
    }
    return component_of(g, g.vertices(), 0).size() == g.size();
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (!ok) {
            return;
        }
        VertexSet others = s;
        others.erase(v);
        ok = others.is_subset_of(g.neighbours(v));
    });
    return ok;
}

bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

bool is_anticonnected(const Graph& g, const VertexSet& s)
{
    if (s.empty()) {
        throw PreconditionError("is_anticonnected needs a nonempty vertex set");
    }
    // BFS in the complement restricted to s.
    VertexSet seen(g.size());
    const Vertex start = s.first();
    seen.insert(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet reach(g.size());
        frontier.for_each([&](Vertex v) { reach |= (s - g.neighbours(v)); });
        reach -= seen;
        seen |= reach;
        frontier = std::move(reach);
    }
    return seen.size() == s.size();
}

namespace {

bool extend_induced_path(const Graph& g, std::vector<Vertex>& path, VertexSet& blocked, Vertex target)
{
    const Vertex last = path.back();
    const VertexSet candidates = g.neighbours(last) - blocked;
    for (Vertex u = candidates.first(); u != -1; u = candidates.next(u)) {
        if (u == target) {
            if (path.size() >= 3) {
                return true;
            }
            continue;
        }
        // u must see no path vertex but `last`.
        bool induced = true;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (g.adjacent(u, path[i])) {
                induced = false;
                break;
            }
        }
        if (!induced) {
            continue;
        }
        if (g.adjacent(u, target)) {
            // Path must end right after u.
            if (path.size() + 1 >= 3) {
                return true;
            }
            continue;
        }
        path.push_back(u);
        blocked.insert(u);
        if (extend_induced_path(g, path, blocked, target)) {
            return true;
        }
        blocked.erase(u);
        path.pop_back();
    }
    return false;
}

} // namespace

bool has_long_chordless_path(const Graph& g, Vertex x, Vertex y)
{
    if (x < 0 || y < 0 || x >= g.size() || y >= g.size()) {
        throw PreconditionError("vertex id out of range");
    }
    if (x == y) {
        throw PreconditionError("has_long_chordless_path needs distinct endpoints");
    }
    if (g.adjacent(x, y)) {
        throw PreconditionError("has_long_chordless_path needs nonadjacent endpoints");
    }
    std::vector<Vertex> path{x};
    VertexSet blocked(g.size());
    blocked.insert(x);
    return extend_induced_path(g, path, blocked, y);
}

} // namespace reconf
