#include "reconf/recognition.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <numeric>

namespace reconf {

// ---------------------------------------------------------------------------
// 2-pairs

bool two_pair_within(const Graph& g, const VertexSet& within, Vertex x, Vertex y, TwoPair* out)
{
    if (x == y || g.adjacent(x, y)) {
        return false;
    }
    VertexSet separator = g.neighbours(x) & g.neighbours(y) & within;
    const VertexSet rest = within - separator;
    VertexSet cx = component_of(g, rest, x);
    if (cx.contains(y)) {
        return false;
    }
    if (out) {
        out->x = x;
        out->y = y;
        out->component_of_y = component_of(g, rest, y);
        out->component_of_x = std::move(cx);
        out->separator = std::move(separator);
    }
    return true;
}

std::vector<TwoPair> find_two_pairs(const Graph& g, const VertexSet& within)
{
    std::vector<TwoPair> pairs;
    for (Vertex x = within.first(); x != -1; x = within.next(x)) {
        const VertexSet candidates = within - g.neighbours(x);
        for (Vertex y = candidates.next(x); y != -1; y = candidates.next(y)) {
            TwoPair p;
            if (two_pair_within(g, within, x, y, &p)) {
                pairs.push_back(std::move(p));
            }
        }
    }
    return pairs;
}

std::vector<TwoPair> find_two_pairs(const Graph& g) { return find_two_pairs(g, g.vertices()); }

bool has_two_pair(const Graph& g, const VertexSet& within)
{
    for (Vertex x = within.first(); x != -1; x = within.next(x)) {
        const VertexSet candidates = within - g.neighbours(x);
        for (Vertex y = candidates.next(x); y != -1; y = candidates.next(y)) {
            if (two_pair_within(g, within, x, y)) {
                return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Holes

namespace {

// DFS over induced paths starting at `start`, using only larger ids, closing
// back to `start` once the cycle has at least `min_length` vertices.
bool extend_hole(const Graph& g, std::vector<Vertex>& path, VertexSet& on_path, int min_length)
{
    const Vertex start = path.front();
    const Vertex last = path.back();
    const VertexSet& nb = g.neighbours(last);
    for (Vertex u = nb.next(start); u != -1; u = nb.next(u)) {
        if (on_path.contains(u)) {
            continue;
        }
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (g.adjacent(u, path[i])) {
                chord = true;
                break;
            }
        }
        if (chord) {
            continue;
        }
        if (g.adjacent(u, start)) {
            if (static_cast<int>(path.size()) + 1 >= min_length) {
                path.push_back(u);
                return true;
            }
            continue;
        }
        path.push_back(u);
        on_path.insert(u);
        if (extend_hole(g, path, on_path, min_length)) {
            return true;
        }
        on_path.erase(u);
        path.pop_back();
    }
    return false;
}

std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int min_length)
{
    for (Vertex s = 0; s < g.size(); ++s) {
        const VertexSet& nb = g.neighbours(s);
        for (Vertex v = nb.next(s); v != -1; v = nb.next(v)) {
            std::vector<Vertex> path{s, v};
            VertexSet on_path(g.size(), {s, v});
            if (extend_hole(g, path, on_path, min_length)) {
                return path;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<HoleWitness> find_hole(const Graph& g)
{
    if (auto cycle = find_induced_cycle(g, 5)) {
        return HoleWitness{std::move(*cycle), HoleKind::hole};
    }
    return std::nullopt;
}

std::optional<HoleWitness> find_antihole(const Graph& g)
{
    if (auto cycle = find_induced_cycle(complement(g), 5)) {
        return HoleWitness{std::move(*cycle), HoleKind::antihole};
    }
    return std::nullopt;
}

bool is_weakly_chordal(const Graph& g) { return !find_hole(g) && !find_antihole(g); }

bool is_chordal(const Graph& g)
{
    const int n = g.size();
    // Maximum cardinality search; visit order reversed is a perfect elimination
    // ordering exactly when g is chordal.
    std::vector<int> weight(n, 0);
    std::vector<int> position(n, -1);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (position[v] == -1 && (best == -1 || weight[v] > weight[best])) {
                best = v;
            }
        }
        position[best] = step;
        order.push_back(best);
        g.neighbours(best).for_each([&](Vertex u) {
            if (position[u] == -1) {
                ++weight[u];
            }
        });
    }
    // For each v, its neighbours visited earlier must form a clique; checking
    // them against the latest-visited one of them suffices.
    for (Vertex v : order) {
        Vertex parent = -1;
        VertexSet earlier(n);
        g.neighbours(v).for_each([&](Vertex u) {
            if (position[u] < position[v]) {
                earlier.insert(u);
                if (parent == -1 || position[u] > position[parent]) {
                    parent = u;
                }
            }
        });
        if (parent == -1) {
            continue;
        }
        earlier.erase(parent);
        if (!earlier.is_subset_of(g.neighbours(parent))) {
            return false;
        }
    }
    return true;
}

bool is_co_chordal(const Graph& g) { return !contains_induced(g, Pattern::two_k2) && !find_antihole(g); }

bool is_co_chordal_via_complement(const Graph& g) { return is_chordal(complement(g)); }

// ---------------------------------------------------------------------------
// Fixed induced patterns

namespace {

struct PatternTable {
    int order = 0;
    std::bitset<1024> codes;
};

constexpr int pair_index(int i, int j, int order)
{
    // position of (i, j), i < j, in the lexicographic list of pairs of 0..order-1
    return i * (2 * order - i - 1) / 2 + (j - i - 1);
}

PatternTable make_table(int order, const std::vector<std::pair<int, int>>& edges)
{
    PatternTable t;
    t.order = order;
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        unsigned code = 0;
        for (auto [a, b] : edges) {
            int i = perm[a];
            int j = perm[b];
            if (i > j) {
                std::swap(i, j);
            }
            code |= 1u << pair_index(i, j, order);
        }
        t.codes.set(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return t;
}

const PatternTable& table_for(Pattern p)
{
    static const std::array<PatternTable, 6> tables = {
        make_table(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
        make_table(5, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}),
        make_table(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}),
        make_table(4, {{0, 1}, {2, 3}}),
        make_table(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
        make_table(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}),
    };
    return tables[static_cast<int>(p)];
}

bool search_combination(const Graph& g, const PatternTable& t, std::vector<Vertex>& chosen, Vertex from)
{
    const int depth = static_cast<int>(chosen.size());
    if (depth == t.order) {
        unsigned code = 0;
        for (int i = 0; i < t.order; ++i) {
            for (int j = i + 1; j < t.order; ++j) {
                if (g.adjacent(chosen[i], chosen[j])) {
                    code |= 1u << pair_index(i, j, t.order);
                }
            }
        }
        return t.codes.test(code);
    }
    for (Vertex v = from; v <= g.size() - (t.order - depth); ++v) {
        chosen.push_back(v);
        if (search_combination(g, t, chosen, v + 1)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

} // namespace

Pattern pattern_from_name(const std::string& name)
{
    if (name == "P5" || name == "p5") return Pattern::p5;
    if (name == "P5-complement" || name == "p5_complement" || name == "P5bar") return Pattern::p5_complement;
    if (name == "C5" || name == "c5") return Pattern::c5;
    if (name == "2K2" || name == "2k2") return Pattern::two_k2;
    if (name == "K4" || name == "k4") return Pattern::k4;
    if (name == "diamond") return Pattern::diamond;
    throw PreconditionError("unknown pattern '" + name + "'");
}

std::string pattern_name(Pattern p)
{
    switch (p) {
    case Pattern::p5: return "P5";
    case Pattern::p5_complement: return "P5-complement";
    case Pattern::c5: return "C5";
    case Pattern::two_k2: return "2K2";
    case Pattern::k4: return "K4";
    case Pattern::diamond: return "diamond";
    }
    return "?";
}

std::optional<VertexSet> contains_induced(const Graph& g, Pattern pattern)
{
    const PatternTable& t = table_for(pattern);
    if (g.size() < t.order) {
        return std::nullopt;
    }
    std::vector<Vertex> chosen;
    chosen.reserve(t.order);
    if (search_combination(g, t, chosen, 0)) {
        return VertexSet::from_vector(g.size(), chosen);
    }
    return std::nullopt;
}

bool is_p5_p5bar_c5_free(const Graph& g)
{
    return !contains_induced(g, Pattern::p5) && !contains_induced(g, Pattern::p5_complement) &&
           !contains_induced(g, Pattern::c5);
}

// ---------------------------------------------------------------------------
// Colouring (saturation-ordered backtracking)

namespace {

class Dsatur {
public:
    Dsatur(const Graph& g, int k) : g_(g), k_(k), colour_(g.size(), -1), seen_(g.size(), 0) {}

    bool solve() { return extend(0, 0); }
    std::vector<int> colouring() const { return colour_; }

private:
    bool extend(int coloured, int used)
    {
        if (coloured == g_.size()) {
            return true;
        }
        Vertex pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (Vertex v = 0; v < g_.size(); ++v) {
            if (colour_[v] != -1) {
                continue;
            }
            const int sat = __builtin_popcountll(seen_[v]);
            if (sat >= k_) {
                return false;
            }
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        // New colours are interchangeable; only try the first unused one.
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((seen_[pick] >> c) & 1u) {
                continue;
            }
            std::vector<std::pair<Vertex, std::uint64_t>> undo;
            colour_[pick] = c;
            g_.neighbours(pick).for_each([&](Vertex u) {
                if (colour_[u] == -1) {
                    undo.emplace_back(u, seen_[u]);
                    seen_[u] |= std::uint64_t{1} << c;
                }
            });
            if (extend(coloured + 1, std::max(used, c + 1))) {
                return true;
            }
            for (auto [u, mask] : undo) {
                seen_[u] = mask;
            }
            colour_[pick] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> seen_;
};

} // namespace

std::optional<std::vector<int>> find_colouring(const Graph& g, int k)
{
    if (k < 0) {
        throw PreconditionError("negative palette size");
    }
    if (k > 64) {
        throw PreconditionError("palette sizes above 64 are not supported");
    }
    if (g.size() == 0) {
        return std::vector<int>{};
    }
    if (k == 0) {
        return std::nullopt;
    }
    Dsatur solver(g, k);
    if (!solver.solve()) {
        return std::nullopt;
    }
    return solver.colouring();
}

int chromatic_number(const Graph& g, int upper_bound)
{
    if (upper_bound < 1) {
        throw PreconditionError("chromatic_number needs upper_bound >= 1");
    }
    if (g.size() == 0) {
        return 0;
    }
    for (int k = 1; k <= upper_bound; ++k) {
        if (find_colouring(g, k)) {
            return k;
        }
    }
    throw BoundExceededError("chromatic number exceeds " + std::to_string(upper_bound));
}

// ---------------------------------------------------------------------------
// Compactness

std::optional<QualifyingPair> qualifying_two_pair(const Graph& g, const VertexSet& within)
{
    if (is_clique(g, within)) {
        throw PreconditionError("qualifying_two_pair called on a complete graph");
    }
    // Case (ii): x nonadjacent to y with N(x) ⊆ N(y); such a pair is always a 2-pair
    // since the separator is all of N(x).
    for (Vertex x = within.first(); x != -1; x = within.next(x)) {
        const VertexSet nx = g.neighbours(x) & within;
        const VertexSet candidates = within - g.neighbours(x);
        for (Vertex y = candidates.first(); y != -1; y = candidates.next(y)) {
            if (y != x && nx.is_subset_of(g.neighbours(y))) {
                QualifyingPair q;
                two_pair_within(g, within, x, y, &q.pair);
                q.which = CompactCase::nested_neighbourhood;
                return q;
            }
        }
    }
    // Case (iii): C_x ∪ S(x, y) is a clique on at most three vertices.
    for (Vertex x = within.first(); x != -1; x = within.next(x)) {
        const VertexSet candidates = within - g.neighbours(x);
        for (Vertex y = candidates.first(); y != -1; y = candidates.next(y)) {
            if (y == x || (g.neighbours(x) & g.neighbours(y) & within).size() > 2) {
                continue;
            }
            TwoPair p;
            if (!two_pair_within(g, within, x, y, &p)) {
                continue;
            }
            const VertexSet side = p.component_of_x | p.separator;
            if (side.size() <= 3 && is_clique(g, side)) {
                return QualifyingPair{std::move(p), CompactCase::small_clique_side};
            }
        }
    }
    return std::nullopt;
}

std::optional<QualifyingPair> qualifying_two_pair(const Graph& g)
{
    return qualifying_two_pair(g, g.vertices());
}

namespace {

// Visits the k-subsets of 0..n-1 in lexicographic order until `f` returns false.
template <class F>
bool for_each_subset_of_size(int n, int k, F&& f)
{
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!f(idx)) {
            return false;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return true;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace

CompactnessVerdict is_compact_bruteforce(const Graph& g, int vertex_limit)
{
    const int n = g.size();
    if (n > vertex_limit) {
        throw CapacityError("is_compact_bruteforce: " + std::to_string(n) + " vertices exceeds limit " +
                            std::to_string(vertex_limit));
    }
    CompactnessVerdict verdict;
    // Subsets of size <= 2 are complete or a nonadjacent pair with empty neighbourhoods.
    for (int size = 3; size <= n && !verdict.failing_subgraph; ++size) {
        for_each_subset_of_size(n, size, [&](const std::vector<Vertex>& members) {
            const VertexSet s = VertexSet::from_vector(n, members);
            if (is_clique(g, s) || qualifying_two_pair(g, s)) {
                return true;
            }
            verdict.failing_subgraph = s;
            return false;
        });
    }
    if (verdict.failing_subgraph) {
        verdict.compact = false;
        return verdict;
    }
    verdict.compact = true;
    verdict.certificate = find_elimination_certificate(g);
    return verdict;
}

// ---------------------------------------------------------------------------
// Anticonnected-set route to a 2-pair

VertexSet t_complete_vertices(const Graph& g, const VertexSet& t)
{
    VertexSet d = VertexSet::full(g.size());
    t.for_each([&](Vertex v) { d &= g.neighbours(v); });
    return d - t;
}

AnticonnectedTwoPair two_pair_via_anticonnected_set(const Graph& g, Vertex a, Vertex m, Vertex b)
{
    const int n = g.size();
    for (Vertex v : {a, m, b}) {
        if (v < 0 || v >= n) {
            throw PreconditionError("vertex id out of range");
        }
    }
    if (a == b || !g.adjacent(a, m) || !g.adjacent(m, b) || g.adjacent(a, b)) {
        throw PreconditionError("a-m-b must be a chordless path of length 2");
    }
    if (!is_weakly_chordal(g)) {
        throw PreconditionError("two_pair_via_anticonnected_set needs a weakly chordal graph");
    }

    VertexSet t(n, {m});
    for (bool grown = true; grown;) {
        grown = false;
        for (Vertex v = 0; v < n; ++v) {
            if (t.contains(v)) {
                continue;
            }
            VertexSet bigger = t;
            bigger.insert(v);
            if (!is_anticonnected(g, bigger)) {
                continue;
            }
            if (is_clique(g, t_complete_vertices(g, bigger))) {
                continue;
            }
            t = std::move(bigger);
            grown = true;
            break;
        }
    }

    AnticonnectedTwoPair result;
    result.probe.t = t;
    result.probe.d_of_t = t_complete_vertices(g, t);
    for (const TwoPair& inner : find_two_pairs(g, result.probe.d_of_t)) {
        if (two_pair_within(g, g.vertices(), inner.x, inner.y, &result.pair)) {
            return result;
        }
    }
    throw std::logic_error("no 2-pair of the host graph inside D(T); input is not weakly chordal");
}

} // namespace reconf
