#include "reconf/recolour.hpp"

#include <algorithm>
#include <set>

#include "reconf/recognition.hpp"

namespace reconf {

bool EliminationCertificate::uses_triangle_removal() const
{
    return std::any_of(events.begin(), events.end(),
                       [](const EliminationEvent& e) { return std::holds_alternative<TriangleRemoval>(e); });
}

std::optional<EliminationCertificate> find_elimination_certificate(const Graph& g)
{
    EliminationCertificate cert;
    VertexSet alive = g.vertices();
    while (true) {
        if (is_clique(g, alive)) {
            cert.events.emplace_back(CompleteBase{alive});
            return cert;
        }
        auto q = qualifying_two_pair(g, alive);
        if (!q) {
            return std::nullopt;
        }
        const TwoPair& p = q->pair;
        const VertexSet nx = g.neighbours(p.x) & alive;
        if (nx.is_subset_of(g.neighbours(p.y))) {
            // Case (ii), or case (iii) with C_x = {x}, which is the same thing.
            cert.events.emplace_back(PairRemoval{p.x, p.y});
            alive.erase(p.x);
        } else if (p.separator.size() == 1) {
            const Vertex w = (p.component_of_x - VertexSet(g.size(), {p.x})).first();
            cert.events.emplace_back(TriangleRemoval{p.x, w, p.separator.first(), p.y});
            alive.erase(p.x);
            alive.erase(w);
        } else {
            cert.events.emplace_back(CliqueComponentRemoval{p.x, p.y, p.component_of_x});
            alive -= p.component_of_x;
        }
    }
}

std::optional<std::string> check_certificate(const Graph& g, const EliminationCertificate& cert)
{
    const int n = g.size();
    VertexSet alive = g.vertices();
    auto live = [&](Vertex v) { return v >= 0 && v < n && alive.contains(v); };
    for (std::size_t i = 0; i < cert.events.size(); ++i) {
        const std::string at = "event " + std::to_string(i) + ": ";
        const EliminationEvent& e = cert.events[i];
        if (const auto* pr = std::get_if<PairRemoval>(&e)) {
            if (!live(pr->x) || !live(pr->y) || pr->x == pr->y) {
                return at + "pair removal names a missing vertex";
            }
            if (g.adjacent(pr->x, pr->y)) {
                return at + "pair removal on adjacent vertices";
            }
            if (!(g.neighbours(pr->x) & alive).is_subset_of(g.neighbours(pr->y))) {
                return at + "N(x) is not contained in N(y)";
            }
            alive.erase(pr->x);
        } else if (const auto* tr = std::get_if<TriangleRemoval>(&e)) {
            const std::set<Vertex> distinct{tr->x, tr->w, tr->z, tr->y};
            if (distinct.size() != 4 || !live(tr->x) || !live(tr->w) || !live(tr->z) || !live(tr->y)) {
                return at + "triangle removal names missing or repeated vertices";
            }
            TwoPair p;
            if (!two_pair_within(g, alive, tr->x, tr->y, &p)) {
                return at + "{x, y} is not a 2-pair";
            }
            if (!(p.separator == VertexSet(n, {tr->z}))) {
                return at + "S(x, y) is not {z}";
            }
            if (!(p.component_of_x == VertexSet(n, {tr->x, tr->w}))) {
                return at + "C_x is not {x, w}";
            }
            if (!is_clique(g, VertexSet(n, {tr->x, tr->w, tr->z}))) {
                return at + "{x, w, z} is not a triangle";
            }
            alive.erase(tr->x);
            alive.erase(tr->w);
        } else if (const auto* cr = std::get_if<CliqueComponentRemoval>(&e)) {
            if (!live(cr->x) || !live(cr->y) || cr->clique.universe() != n) {
                return at + "clique component removal names a missing vertex";
            }
            TwoPair p;
            if (!two_pair_within(g, alive, cr->x, cr->y, &p) || !p.separator.empty()) {
                return at + "{x, y} is not a 2-pair with empty separator";
            }
            if (!(p.component_of_x == cr->clique) || cr->clique.size() > 3 || !is_clique(g, cr->clique)) {
                return at + "C_x is not the stated clique of at most three vertices";
            }
            alive -= cr->clique;
        } else {
            const auto& base = std::get<CompleteBase>(e);
            if (i + 1 != cert.events.size()) {
                return at + "complete base must be the last event";
            }
            if (!(base.remaining == alive)) {
                return at + "complete base does not list the remaining vertices";
            }
            if (!is_clique(g, alive)) {
                return at + "remaining vertices are not a clique";
            }
            return std::nullopt;
        }
    }
    return std::string("certificate does not end with a complete base");
}

// ---------------------------------------------------------------------------

std::vector<int> RecolourSequence::per_vertex_counts(int n) const
{
    std::vector<int> counts(n, 0);
    for (const auto& s : steps) {
        if (s.vertex >= 0 && s.vertex < n) {
            ++counts[s.vertex];
        }
    }
    return counts;
}

int RecolourSequence::max_per_vertex(int n) const
{
    const auto counts = per_vertex_counts(n);
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

namespace {

void check_injective(const Colouring& c, int n, int palette, const char* which)
{
    if (c.size() != n) {
        throw PreconditionError(std::string(which) + " colouring has the wrong length");
    }
    std::vector<bool> used(palette, false);
    for (int v = 0; v < n; ++v) {
        if (c[v] < 0 || c[v] >= palette) {
            throw PreconditionError(std::string(which) + " colouring uses a colour outside the palette");
        }
        if (used[c[v]]) {
            throw PreconditionError(std::string(which) + " colouring of a complete graph is not injective");
        }
        used[c[v]] = true;
    }
}

} // namespace

RecolourSequence recolour_complete(int n, int palette, const Colouring& a, const Colouring& b)
{
    if (n < 0) {
        throw PreconditionError("negative clique size");
    }
    if (palette < n + 1) {
        throw PreconditionError("recolouring K_" + std::to_string(n) + " needs at least " + std::to_string(n + 1) +
                                " colours, got " + std::to_string(palette));
    }
    check_injective(a, n, palette, "start");
    check_injective(b, n, palette, "target");

    RecolourSequence seq;
    seq.start = Colouring{a.assignment, palette};
    seq.end = Colouring{b.assignment, palette};
    std::vector<int> cur = a.assignment;
    std::vector<Vertex> owner(palette, -1);
    for (Vertex v = 0; v < n; ++v) {
        owner[cur[v]] = v;
    }
    auto move = [&](Vertex v, int c) {
        owner[cur[v]] = -1;
        cur[v] = c;
        owner[c] = v;
        seq.steps.push_back({v, c});
    };
    // A vertex fixed to b(v) is never a blocker again since b is injective.
    for (Vertex v = 0; v < n; ++v) {
        if (cur[v] == b[v]) {
            continue;
        }
        const Vertex blocker = owner[b[v]];
        if (blocker != -1) {
            int spare = -1;
            if (owner[b[blocker]] == -1) {
                spare = b[blocker];
            } else {
                for (int c = 0; c < palette && spare == -1; ++c) {
                    if (owner[c] == -1) {
                        spare = c;
                    }
                }
            }
            move(blocker, spare);
        }
        move(v, b[v]);
    }
    return seq;
}

namespace {

struct CompactRecolourer {
    const Graph& g;
    const EliminationCertificate& cert;
    int palette;

    // Steps taking `from` to `to` on the vertices alive when event i is reached.
    std::vector<RecolourStep> solve(std::size_t i, std::vector<int> from, const std::vector<int>& to) const
    {
        const EliminationEvent& e = cert.events[i];
        std::vector<RecolourStep> out;

        if (const auto* pr = std::get_if<PairRemoval>(&e)) {
            const Vertex x = pr->x;
            const Vertex y = pr->y;
            if (from[x] != from[y]) {
                out.push_back({x, from[y]});
                from[x] = from[y];
            }
            for (const RecolourStep& s : solve(i + 1, from, to)) {
                out.push_back(s);
                if (s.vertex == y) {
                    out.push_back({x, s.new_colour});
                }
            }
            if (to[x] != to[y]) {
                out.push_back({x, to[x]});
            }
            return out;
        }

        if (const auto* tr = std::get_if<TriangleRemoval>(&e)) {
            const Vertex x = tr->x;
            const Vertex w = tr->w;
            const Vertex z = tr->z;
            std::vector<int> state = from;
            auto least_outside = [&](std::initializer_list<int> banned) {
                for (int c = 0; c < palette; ++c) {
                    if (std::find(banned.begin(), banned.end(), c) == banned.end()) {
                        return c;
                    }
                }
                throw std::logic_error("no free colour in triangle removal");
            };
            auto apply = [&](Vertex v, int c) {
                out.push_back({v, c});
                state[v] = c;
            };
            for (const RecolourStep& s : solve(i + 1, from, to)) {
                if (s.vertex == z) {
                    if (state[x] == s.new_colour) {
                        apply(x, least_outside({state[w], state[z], s.new_colour}));
                    } else if (state[w] == s.new_colour) {
                        apply(w, least_outside({state[x], state[z], s.new_colour}));
                    }
                }
                apply(s.vertex, s.new_colour);
            }
            if (state[x] != to[x]) {
                if (state[w] == to[x]) {
                    const bool direct = to[w] != state[x];
                    apply(w, direct ? to[w] : least_outside({state[x], state[z], to[x]}));
                }
                apply(x, to[x]);
            }
            if (state[w] != to[w]) {
                apply(w, to[w]);
            }
            return out;
        }

        if (const auto* cr = std::get_if<CliqueComponentRemoval>(&e)) {
            out = solve(i + 1, from, to);
            append_clique(cr->clique.to_vector(), from, to, out);
            return out;
        }

        const auto& base = std::get<CompleteBase>(e);
        append_clique(base.remaining.to_vector(), from, to, out);
        return out;
    }

    void append_clique(const std::vector<Vertex>& members, const std::vector<int>& from, const std::vector<int>& to,
                       std::vector<RecolourStep>& out) const
    {
        const int r = static_cast<int>(members.size());
        Colouring a{std::vector<int>(r), palette};
        Colouring b{std::vector<int>(r), palette};
        for (int i = 0; i < r; ++i) {
            a.assignment[i] = from[members[i]];
            b.assignment[i] = to[members[i]];
        }
        for (const RecolourStep& s : recolour_complete(r, palette, a, b).steps) {
            out.push_back({members[s.vertex], s.new_colour});
        }
    }
};

} // namespace

RecolourSequence recolour_compact(const Graph& g, const EliminationCertificate& cert, const Colouring& a,
                                  const Colouring& b)
{
    if (a.palette != b.palette) {
        throw PreconditionError("start and target colourings use different palettes");
    }
    if (!is_proper(g, a) || !is_proper(g, b)) {
        throw PreconditionError("start and target must be proper colourings of the graph");
    }
    if (auto problem = check_certificate(g, cert)) {
        throw PreconditionError("certificate inconsistent with graph: " + *problem);
    }
    const int p = a.palette;
    for (const EliminationEvent& e : cert.events) {
        if (std::holds_alternative<TriangleRemoval>(e) && p < 4) {
            throw PreconditionError("triangle removals need a palette of at least 4 colours");
        }
        if (const auto* cr = std::get_if<CliqueComponentRemoval>(&e); cr && p < cr->clique.size() + 1) {
            throw PreconditionError("palette too small for a clique component of the certificate");
        }
        if (const auto* base = std::get_if<CompleteBase>(&e); base && p < base->remaining.size() + 1) {
            throw PreconditionError("palette too small: the residual clique has " +
                                    std::to_string(base->remaining.size()) + " vertices, palette is " +
                                    std::to_string(p));
        }
    }
    RecolourSequence seq;
    seq.start = a;
    seq.end = b;
    if (a == b) {
        return seq;
    }
    seq.steps = CompactRecolourer{g, cert, p}.solve(0, a.assignment, b.assignment);
    return seq;
}

ValidationReport validate_sequence(const Graph& g, const RecolourSequence& s)
{
    ValidationReport report;
    const int n = g.size();
    const int palette = s.start.palette;
    report.total_length = s.steps.size();
    report.per_vertex_counts.assign(n, 0);
    auto fail = [&](std::optional<long> index, std::string message) {
        report.ok = false;
        report.violation_index = index;
        report.message = std::move(message);
        return report;
    };
    if (!is_proper(g, s.start)) {
        return fail(-1, "start colouring is not proper");
    }
    std::vector<int> cur = s.start.assignment;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const auto& step = s.steps[i];
        const long at = static_cast<long>(i);
        if (step.vertex < 0 || step.vertex >= n) {
            return fail(at, "step names vertex " + std::to_string(step.vertex) + " outside the graph");
        }
        if (step.new_colour < 0 || step.new_colour >= palette) {
            return fail(at, "step uses colour " + std::to_string(step.new_colour) + " outside the palette");
        }
        if (cur[step.vertex] == step.new_colour) {
            return fail(at, "step does not change the colour of vertex " + std::to_string(step.vertex));
        }
        bool clash = false;
        g.neighbours(step.vertex).for_each([&](Vertex u) { clash = clash || cur[u] == step.new_colour; });
        if (clash) {
            return fail(at, "vertex " + std::to_string(step.vertex) + " recoloured to a neighbour's colour " +
                                std::to_string(step.new_colour));
        }
        cur[step.vertex] = step.new_colour;
        ++report.per_vertex_counts[step.vertex];
    }
    if (cur != s.end.assignment) {
        return fail(-1, "replay does not end at the stated final colouring");
    }
    report.ok = true;
    return report;
}

std::optional<long> bfs_distance(const Graph& g, int k, const Colouring& a, const Colouring& b, std::size_t cap)
{
    if (!is_proper(g, a) || !is_proper(g, b) || a.palette != k || b.palette != k) {
        throw PreconditionError("bfs_distance needs proper colourings on the stated palette");
    }
    if (a == b) {
        return 0;
    }
    const ReconfigGraph r(g, k, cap);
    const auto from = r.index_of(a);
    const auto to = r.index_of(b);
    const long d = r.bfs_from(*from)[*to];
    if (d < 0) {
        return std::nullopt;
    }
    return d;
}

} // namespace reconf
