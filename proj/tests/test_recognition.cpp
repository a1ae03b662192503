#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reconf/generators.hpp"
#include "reconf/recognition.hpp"

using namespace reconf;

namespace {

std::set<std::pair<Vertex, Vertex>> pair_set(const std::vector<TwoPair>& pairs)
{
    std::set<std::pair<Vertex, Vertex>> out;
    for (const auto& p : pairs) {
        out.emplace(p.x, p.y);
    }
    return out;
}

std::set<std::pair<Vertex, Vertex>> path_oracle_pairs(const Graph& g)
{
    std::set<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < g.size(); ++x) {
        for (Vertex y = x + 1; y < g.size(); ++y) {
            if (!g.adjacent(x, y) && !has_long_chordless_path(g, x, y)) {
                out.emplace(x, y);
            }
        }
    }
    return out;
}

void expect_hole_witness(const Graph& g, const HoleWitness& w)
{
    const Graph& host = w.kind == HoleKind::hole ? g : complement(g);
    const int len = static_cast<int>(w.cycle.size());
    ASSERT_GE(len, 5);
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            EXPECT_EQ(host.adjacent(w.cycle[i], w.cycle[j]), consecutive);
        }
    }
}

// Triangle {0, 1, 2}, pendant edge 2-3 and triangle {3, 4, 5}.
Graph triangle_with_pendant_path()
{
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// Two K4 sharing the edge {0, 1}: (P5, P5-complement, C5)-free, 4-chromatic, not compact.
Graph two_k4_sharing_edge()
{
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}});
}

} // namespace

TEST(TwoPairs, C4OppositeVertices)
{
    const Graph c4 = generate_named("cycle", 4);
    const auto pairs = find_two_pairs(c4);
    EXPECT_EQ(pair_set(pairs), (std::set<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}}));
    EXPECT_EQ(pair_set(pairs), path_oracle_pairs(c4));
    EXPECT_EQ(pairs[0].separator.to_vector(), (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(pairs[0].component_of_x.to_vector(), (std::vector<Vertex>{0}));
    EXPECT_EQ(pairs[0].component_of_y.to_vector(), (std::vector<Vertex>{2}));
}

TEST(TwoPairs, CompleteGraphHasNone)
{
    for (int n = 0; n <= 6; ++n) {
        EXPECT_TRUE(find_two_pairs(generate_named("complete", n)).empty());
    }
}

TEST(TwoPairs, G3ContainsXYAndU1V1)
{
    const Graph g = gk_graph(3);
    const auto pairs = pair_set(find_two_pairs(g));
    EXPECT_TRUE(pairs.count({g.find_label("x"), g.find_label("y")}));
    EXPECT_TRUE(pairs.count({g.find_label("u1"), g.find_label("v1")}));
    EXPECT_EQ(pairs, path_oracle_pairs(g));
}

TEST(TwoPairs, SeparatorCriterionMatchesPathOracle)
{
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_labelled_graph(n, [](const Graph& g) { ASSERT_EQ(pair_set(find_two_pairs(g)), path_oracle_pairs(g)); });
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(7, 0.5, rng());
        ASSERT_EQ(pair_set(find_two_pairs(g)), path_oracle_pairs(g));
    }
}

TEST(TwoPairs, InvariantsOfReportedPairs)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(9, 0.4, rng());
        for (const auto& p : find_two_pairs(g)) {
            EXPECT_FALSE(g.adjacent(p.x, p.y));
            EXPECT_EQ(p.separator, g.neighbours(p.x) & g.neighbours(p.y));
            EXPECT_TRUE(p.component_of_x.contains(p.x));
            EXPECT_TRUE(p.component_of_y.contains(p.y));
            EXPECT_FALSE(p.component_of_x.intersects(p.component_of_y));
            EXPECT_FALSE(p.component_of_x.intersects(p.separator));
        }
    }
}

TEST(Holes, Examples)
{
    const Graph c5 = generate_named("cycle", 5);
    auto hole = find_hole(c5);
    ASSERT_TRUE(hole);
    EXPECT_EQ(hole->cycle.size(), 5u);
    expect_hole_witness(c5, *hole);

    EXPECT_FALSE(find_hole(generate_named("cycle", 4)));
    EXPECT_FALSE(find_hole(gk_graph(3)));
}

TEST(Antiholes, Examples)
{
    const Graph c6bar = complement(generate_named("cycle", 6));
    auto anti = find_antihole(c6bar);
    ASSERT_TRUE(anti);
    EXPECT_EQ(anti->kind, HoleKind::antihole);
    EXPECT_EQ(anti->cycle.size(), 6u);
    expect_hole_witness(c6bar, *anti);
    EXPECT_FALSE(find_hole(c6bar));

    const Graph c5 = generate_named("cycle", 5);
    auto c5anti = find_antihole(c5);
    ASSERT_TRUE(c5anti);
    EXPECT_EQ(c5anti->cycle.size(), 5u);
    expect_hole_witness(c5, *c5anti);

    EXPECT_FALSE(find_antihole(gk_graph(3)));
}

TEST(WeaklyChordal, Examples)
{
    EXPECT_TRUE(is_weakly_chordal(gk_graph(3)));
    EXPECT_FALSE(is_weakly_chordal(generate_named("cycle", 5)));
    // A tree: a star with a subdivided branch.
    EXPECT_TRUE(is_weakly_chordal(Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}})));
    EXPECT_TRUE(is_weakly_chordal(generate_named("path", 9)));
    EXPECT_FALSE(is_weakly_chordal(generate_named("cycle", 8)));
}

TEST(WeaklyChordal, MatchesSubsetOracleAndComplementDuality)
{
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labelled_graph(n, [](const Graph& g) {
            const bool wc = is_weakly_chordal(g);
            ASSERT_EQ(wc, oracle::weakly_chordal_by_subsets(g));
            ASSERT_EQ(wc, is_weakly_chordal(complement(g)));
        });
    }
}

TEST(CoChordal, Examples)
{
    for (int n = 0; n <= 5; ++n) {
        EXPECT_TRUE(is_co_chordal(generate_named("complete", n)));
    }
    EXPECT_FALSE(is_co_chordal(generate_named("2k2")));
    EXPECT_TRUE(is_co_chordal(generate_named("path", 4)));
    EXPECT_FALSE(is_co_chordal(generate_named("cycle", 5)));
}

TEST(CoChordal, BothRoutesAgreeWithBruteForce)
{
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labelled_graph(n, [](const Graph& g) {
            const bool a = is_co_chordal(g);
            ASSERT_EQ(a, is_co_chordal_via_complement(g));
            ASSERT_EQ(a, !oracle::has_induced_cycle_subsets(oracle::complement_of(g), 4));
        });
    }
}

TEST(Chordal, MatchesBruteForce)
{
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labelled_graph(n, [](const Graph& g) {
            ASSERT_EQ(is_chordal(g), !oracle::has_induced_cycle_subsets(g, 4));
        });
    }
}

TEST(Patterns, Examples)
{
    const auto p5 = contains_induced(generate_named("cycle", 6), Pattern::p5);
    ASSERT_TRUE(p5);
    EXPECT_EQ(p5->size(), 5);
    EXPECT_TRUE(oracle::isomorphic(induced_subgraph(generate_named("cycle", 6), *p5).graph, generate_named("p5")));

    EXPECT_FALSE(contains_induced(gk_graph(3), Pattern::k4));
    EXPECT_FALSE(contains_induced(generate_named("cycle", 7), Pattern::k4));
    EXPECT_FALSE(contains_induced(gk_graph(3), Pattern::c5));
    EXPECT_FALSE(contains_induced(complement(generate_named("cycle", 6)), Pattern::diamond));
    EXPECT_TRUE(contains_induced(generate_named("complete", 4), Pattern::k4));
    EXPECT_THROW(pattern_from_name("P6"), PreconditionError);
    EXPECT_EQ(pattern_from_name("2K2"), Pattern::two_k2);
}

TEST(Patterns, FoundSetsInduceThePattern)
{
    const std::vector<std::pair<Pattern, Graph>> patterns{
        {Pattern::p5, generate_named("p5")},          {Pattern::p5_complement, generate_named("p5_complement")},
        {Pattern::c5, generate_named("c5")},          {Pattern::two_k2, generate_named("2k2")},
        {Pattern::k4, generate_named("complete", 4)}, {Pattern::diamond, generate_named("diamond")}};
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_graph(7, 0.5, rng());
        for (const auto& [pattern, shape] : patterns) {
            const auto found = contains_induced(g, pattern);
            // Cross-check presence against all subsets of the right size.
            bool brute = false;
            for (std::uint64_t mask = 0; mask < (1u << 7) && !brute; ++mask) {
                if (__builtin_popcountll(mask) != shape.size()) {
                    continue;
                }
                VertexSet s(7);
                for (int v = 0; v < 7; ++v) {
                    if ((mask >> v) & 1u) {
                        s.insert(v);
                    }
                }
                brute = oracle::isomorphic(induced_subgraph(g, s).graph, shape);
            }
            ASSERT_EQ(found.has_value(), brute) << pattern_name(pattern);
            if (found) {
                EXPECT_TRUE(oracle::isomorphic(induced_subgraph(g, *found).graph, shape));
            }
        }
    }
}

TEST(ChromaticNumber, Examples)
{
    EXPECT_EQ(chromatic_number(generate_named("cycle", 5), 5), 3);
    EXPECT_EQ(chromatic_number(generate_named("complete", 4), 5), 4);
    EXPECT_EQ(chromatic_number(gk_graph(3), 10), 3);
    EXPECT_EQ(chromatic_number(gk_graph(4), 10), 4);
    EXPECT_EQ(chromatic_number(Graph(0), 1), 0);
    EXPECT_EQ(chromatic_number(Graph(3), 1), 1);
    EXPECT_THROW(chromatic_number(generate_named("complete", 4), 3), BoundExceededError);
    EXPECT_THROW(chromatic_number(generate_named("complete", 4), 0), PreconditionError);
}

TEST(ChromaticNumber, MatchesEnumeration)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(7, 0.55, rng());
        const int chi = chromatic_number(g, 7);
        EXPECT_FALSE(oracle::all_colourings(g, chi).empty());
        if (chi > 1) {
            EXPECT_TRUE(oracle::all_colourings(g, chi - 1).empty());
        }
    }
}

TEST(QualifyingPair, P4PicksNestedPair)
{
    const auto q = qualifying_two_pair(generate_named("path", 4));
    ASSERT_TRUE(q);
    EXPECT_EQ(q->pair.x, 0);
    EXPECT_EQ(q->pair.y, 2);
    EXPECT_EQ(q->which, CompactCase::nested_neighbourhood);
}

TEST(QualifyingPair, C4EqualNeighbourhoods)
{
    const auto q = qualifying_two_pair(generate_named("cycle", 4));
    ASSERT_TRUE(q);
    EXPECT_EQ(q->pair.x, 0);
    EXPECT_EQ(q->pair.y, 2);
    EXPECT_EQ(q->which, CompactCase::nested_neighbourhood);
}

TEST(QualifyingPair, SmallCliqueSide)
{
    const auto q = qualifying_two_pair(triangle_with_pendant_path());
    ASSERT_TRUE(q);
    EXPECT_EQ(q->which, CompactCase::small_clique_side);
    EXPECT_EQ(q->pair.x, 0);
    EXPECT_EQ(q->pair.y, 3);
    EXPECT_EQ(q->pair.separator.to_vector(), (std::vector<Vertex>{2}));
    EXPECT_EQ(q->pair.component_of_x.to_vector(), (std::vector<Vertex>{0, 1}));
}

TEST(QualifyingPair, TwoK4SharingAnEdgeHasNone)
{
    const Graph h = two_k4_sharing_edge();
    EXPECT_FALSE(find_two_pairs(h).empty());
    EXPECT_FALSE(qualifying_two_pair(h));
}

TEST(QualifyingPair, CompleteGraphIsAnError)
{
    EXPECT_THROW(qualifying_two_pair(generate_named("complete", 3)), PreconditionError);
}

TEST(Compactness, CompleteGraphsAreCompact)
{
    for (int n = 0; n <= 6; ++n) {
        const auto v = is_compact_bruteforce(generate_named("complete", n));
        EXPECT_TRUE(v.compact);
        ASSERT_TRUE(v.certificate);
        ASSERT_EQ(v.certificate->events.size(), 1u);
        EXPECT_TRUE(std::holds_alternative<CompleteBase>(v.certificate->events[0]));
    }
}

TEST(Compactness, C6FailsOnItself)
{
    // C6 has no 2-pair at all, and every proper induced subgraph is a linear forest.
    const auto v = is_compact_bruteforce(generate_named("cycle", 6));
    EXPECT_FALSE(v.compact);
    ASSERT_TRUE(v.failing_subgraph);
    EXPECT_EQ(v.failing_subgraph->size(), 6);
    EXPECT_FALSE(v.certificate);
}

TEST(Compactness, WitnessIsMinimumAndLexLeast)
{
    // C5 plus an isolated vertex 0: the failing subgraph is the C5 on 1..5.
    Graph g(6);
    for (int i = 1; i <= 5; ++i) {
        g.add_edge(i, i == 5 ? 1 : i + 1);
    }
    const auto v = is_compact_bruteforce(g);
    ASSERT_TRUE(v.failing_subgraph);
    EXPECT_EQ(v.failing_subgraph->to_vector(), (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(Compactness, FailingWitnessHasNoQualifyingPair)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(8, 0.5, rng());
        const auto v = is_compact_bruteforce(g);
        if (v.compact) {
            EXPECT_TRUE(v.certificate);
            continue;
        }
        EXPECT_FALSE(is_clique(g, *v.failing_subgraph));
        EXPECT_FALSE(qualifying_two_pair(g, *v.failing_subgraph));
    }
}

TEST(Compactness, SizeLimit)
{
    EXPECT_THROW(is_compact_bruteforce(generate_named("path", 13)), CapacityError);
    EXPECT_NO_THROW(is_compact_bruteforce(generate_named("path", 13), 13));
}

TEST(Compactness, SmallThreeColourableForbiddenFreeGraphsAreCompact)
{
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_labelled_graph(n, [](const Graph& g) {
            if (find_colouring(g, 3) && is_p5_p5bar_c5_free(g)) {
                ASSERT_TRUE(is_compact_bruteforce(g).compact);
            }
        });
    }
}

TEST(AnticonnectedProbe, C4)
{
    const Graph c4 = generate_named("cycle", 4);
    const auto r = two_pair_via_anticonnected_set(c4, 0, 1, 2);
    EXPECT_TRUE(r.probe.t.contains(1));
    EXPECT_TRUE(r.probe.d_of_t.contains(0));
    EXPECT_TRUE(r.probe.d_of_t.contains(2));
    EXPECT_EQ(r.pair.x, 0);
    EXPECT_EQ(r.pair.y, 2);
}

TEST(AnticonnectedProbe, G3PathCentredInsideCx)
{
    const Graph g = gk_graph(3);
    const Vertex x = g.find_label("x");
    const Vertex y = g.find_label("y");
    TwoPair xy;
    ASSERT_TRUE(two_pair_within(g, g.vertices(), x, y, &xy));
    const Vertex z1 = g.find_label("z1");
    ASSERT_TRUE(xy.component_of_x.contains(z1));
    const auto r = two_pair_via_anticonnected_set(g, g.find_label("u1"), z1, g.find_label("v1"));
    EXPECT_TRUE(pair_set(find_two_pairs(g)).count({r.pair.x, r.pair.y}));
}

TEST(AnticonnectedProbe, PreconditionsAreEnforced)
{
    EXPECT_THROW(two_pair_via_anticonnected_set(generate_named("complete", 3), 0, 1, 2), PreconditionError);
    EXPECT_THROW(two_pair_via_anticonnected_set(generate_named("cycle", 5), 0, 1, 2), PreconditionError);
}

TEST(AnticonnectedProbe, ResultIsAlwaysATwoPairOfTheGraph)
{
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = random_graph(8, 0.5, rng());
        if (!is_weakly_chordal(g)) {
            continue;
        }
        const auto pairs = pair_set(find_two_pairs(g));
        for (Vertex m = 0; m < g.size(); ++m) {
            const auto nb = g.neighbours(m).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i) {
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    if (g.adjacent(nb[i], nb[j])) {
                        continue;
                    }
                    const auto r = two_pair_via_anticonnected_set(g, nb[i], m, nb[j]);
                    ASSERT_TRUE(pairs.count({r.pair.x, r.pair.y}));
                    EXPECT_TRUE(is_anticonnected(g, r.probe.t));
                    EXPECT_TRUE(r.probe.t.contains(m));
                    EXPECT_EQ(r.probe.d_of_t, t_complete_vertices(g, r.probe.t));
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 100);
}
