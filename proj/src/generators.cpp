#include "reconf/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "reconf/recognition.hpp"

namespace reconf {

Graph gk_graph(int k)
{
    if (k < 3) {
        throw PreconditionError("G_k is defined for k >= 3");
    }
    const int m = k - 1;
    Graph g(4 * m + 2);
    const Vertex x = 0;
    const Vertex y = 1;
    auto u = [&](int i) { return 2 + (i - 1); };
    auto v = [&](int i) { return 2 + m + (i - 1); };
    auto w = [&](int i) { return 2 + 2 * m + (i - 1); };
    auto z = [&](int i) { return 2 + 3 * m + (i - 1); };

    g.set_label(x, "x");
    g.set_label(y, "y");
    for (int i = 1; i <= m; ++i) {
        g.set_label(u(i), "u" + std::to_string(i));
        g.set_label(v(i), "v" + std::to_string(i));
        g.set_label(w(i), "w" + std::to_string(i));
        g.set_label(z(i), "z" + std::to_string(i));
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            g.add_edge(u(i), u(j));
            g.add_edge(v(i), v(j));
            g.add_edge(w(i), w(j));
            g.add_edge(z(i), z(j));
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (Vertex hub : {x, y}) {
            g.add_edge(hub, u(i));
            g.add_edge(hub, v(i));
        }
        for (Vertex hub : {u(1), v(1)}) {
            g.add_edge(hub, w(i));
            g.add_edge(hub, z(i));
        }
    }
    g.add_edge(x, z(1));
    g.add_edge(y, w(1));
    return g;
}

GkBundle generate_gk(int k, std::chrono::milliseconds frozen_budget)
{
    GkBundle bundle;
    bundle.k = k;
    bundle.graph = gk_graph(k);
    auto base = find_colouring(bundle.graph, k);
    if (!base) {
        throw std::logic_error("G_k has no k-colouring");
    }
    bundle.base_colouring = Colouring{*base, k};
    auto frozen = find_frozen_colourings(bundle.graph, k + 1, frozen_budget, 1);
    if (!frozen.colourings.empty()) {
        bundle.frozen_colouring = frozen.colourings.front();
    }
    bundle.frozen_search_complete = frozen.complete || !frozen.colourings.empty();
    return bundle;
}

Graph generate_named(const std::string& name, int n)
{
    auto need = [&](int least) {
        if (n < least) {
            throw PreconditionError(name + " needs n >= " + std::to_string(least));
        }
    };
    if (name == "path") {
        need(0);
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) {
            g.add_edge(i, i + 1);
        }
        return g;
    }
    if (name == "cycle") {
        need(3);
        Graph g = generate_named("path", n);
        g.add_edge(0, n - 1);
        return g;
    }
    if (name == "complete") {
        need(0);
        Graph g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                g.add_edge(i, j);
            }
        }
        return g;
    }
    if (name == "complete_bipartite_minus_matching") {
        need(1);
        // Sides a_i = i and b_i = n + i; a_i b_i is the removed matching edge.
        Graph g(2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    g.add_edge(i, n + j);
                }
            }
        }
        return g;
    }
    if (name == "diamond") {
        return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "p5") {
        return generate_named("path", 5);
    }
    if (name == "p5_complement") {
        return complement(generate_named("path", 5));
    }
    if (name == "c5") {
        return generate_named("cycle", 5);
    }
    if (name == "2k2") {
        return Graph::from_edges(4, {{0, 1}, {2, 3}});
    }
    throw PreconditionError("unknown named graph '" + name + "'");
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
        throw PreconditionError("edge probability must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (unit(rng) < edge_probability) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Graph random_cochordal(int n, std::uint64_t seed)
{
    if (n < 1) {
        throw PreconditionError("random_cochordal needs n >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    // Each new vertex attaches to a subset of a clique, so the reversed insertion
    // order is a perfect elimination ordering.
    Graph chordal(n);
    for (int i = 1; i < n; ++i) {
        const Vertex fresh = order[i];
        std::uniform_int_distribution<int> pick(0, i - 1);
        const Vertex root = order[pick(rng)];
        std::vector<Vertex> clique{root};
        std::vector<Vertex> nb = chordal.neighbours(root).to_vector();
        std::shuffle(nb.begin(), nb.end(), rng);
        for (Vertex c : nb) {
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex m) { return chordal.adjacent(c, m); })) {
                clique.push_back(c);
            }
        }
        std::bernoulli_distribution keep(0.6);
        for (Vertex c : clique) {
            if (keep(rng)) {
                chordal.add_edge(fresh, c);
            }
        }
    }
    return complement(chordal);
}

std::string canonical_code(const Graph& g)
{
    const int n = g.size();
    if (n > 9) {
        throw PreconditionError("canonical_code is brute force and limited to 9 vertices");
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::string code(n * (n - 1) / 2, '0');
    do {
        int idx = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                code[idx++] = g.adjacent(perm[i], perm[j]) ? '1' : '0';
            }
        }
        if (code > best) {
            best = code;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

bool four_chromatic(const Graph& g) { return !find_colouring(g, 3) && find_colouring(g, 4).has_value(); }

} // namespace

SearchReport search_h(int n, std::chrono::milliseconds budget, std::uint64_t seed, int max_candidates)
{
    if (n < 1 || n > 9) {
        throw PreconditionError("search_h supports 1 <= n <= 9");
    }
    SearchReport report;
    report.n = n;
    report.seed = seed;
    const auto started = std::chrono::steady_clock::now();
    const auto deadline = started + budget;
    std::map<std::string, SearchCandidate> hits;

    auto consider = [&](const Graph& g) {
        ++report.graphs_examined;
        if (!is_p5_p5bar_c5_free(g) || !four_chromatic(g)) {
            return;
        }
        CompactnessVerdict verdict = is_compact_bruteforce(g, n);
        if (verdict.compact) {
            return;
        }
        std::string code = canonical_code(g);
        if (hits.count(code)) {
            return;
        }
        hits.emplace(code, SearchCandidate{g, 4, *verdict.failing_subgraph, code});
    };

    const int pairs = n * (n - 1) / 2;
    if (pairs <= 21) {
        const std::uint64_t total = std::uint64_t{1} << pairs;
        report.exhausted = true;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if ((mask & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline) {
                report.exhausted = false;
                break;
            }
            Graph g(n);
            int bit = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j, ++bit) {
                    if ((mask >> bit) & 1u) {
                        g.add_edge(i, j);
                    }
                }
            }
            consider(g);
        }
    } else {
        // Random walk over edge flips restricted to (P5, P5-complement, C5)-free,
        // 4-colourable graphs, restarting from fresh samples.
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> density(0.35, 0.8);
        std::uniform_int_distribution<int> vertex(0, n - 1);
        auto admissible = [](const Graph& g) { return is_p5_p5bar_c5_free(g) && find_colouring(g, 4).has_value(); };
        while (std::chrono::steady_clock::now() < deadline &&
               static_cast<int>(hits.size()) < max_candidates) {
            Graph g = random_graph(n, density(rng), rng());
            if (!admissible(g)) {
                ++report.graphs_examined;
                continue;
            }
            for (int step = 0; step < 400; ++step) {
                consider(g);
                Vertex a = vertex(rng);
                Vertex b = vertex(rng);
                if (a == b) {
                    continue;
                }
                Graph next = g;
                if (next.adjacent(a, b)) {
                    next.remove_edge(a, b);
                } else {
                    next.add_edge(a, b);
                }
                if (admissible(next)) {
                    g = std::move(next);
                }
            }
        }
    }
    for (auto& [code, candidate] : hits) {
        report.candidates.push_back(std::move(candidate));
        if (static_cast<int>(report.candidates.size()) >= max_candidates) {
            break;
        }
    }
    report.seconds_spent =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace reconf
