#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reconf/explorer.hpp"
#include "reconf/generators.hpp"
#include "reconf/recognition.hpp"

using namespace reconf;
using namespace std::chrono_literals;

namespace {

// Frozen straight from the definition, with no pruning.
bool frozen_by_definition(const Graph& g, const std::vector<int>& c, int k)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        std::set<int> seen{c[v]};
        g.neighbours(v).for_each([&](Vertex u) { seen.insert(c[u]); });
        if (static_cast<int>(seen.size()) != k) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Enumeration, CountsMatchChromaticPolynomials)
{
    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(count_colourings(generate_named("complete", 3), k), static_cast<std::size_t>(oracle::falling_factorial(k, 3)));
        EXPECT_EQ(count_colourings(generate_named("path", 4), k), static_cast<std::size_t>(oracle::path_polynomial(4, k)));
        EXPECT_EQ(count_colourings(generate_named("cycle", 5), k), static_cast<std::size_t>(oracle::cycle_polynomial(5, k)));
    }
    EXPECT_EQ(count_colourings(generate_named("cycle", 5), 3), 30u);
    EXPECT_EQ(count_colourings(Graph(0), 3), 1u);
}

TEST(Enumeration, LexicographicAndMatchesOdometer)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(6, 0.4, rng());
        const auto ours = enumerate_colourings(g, 3);
        const auto ref = oracle::all_colourings(g, 3);
        ASSERT_EQ(ours.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            EXPECT_EQ(ours[i].assignment, ref[i]);
            EXPECT_EQ(ours[i].palette, 3);
        }
    }
}

TEST(Enumeration, CapIsEnforced)
{
    EXPECT_THROW(count_colourings(Graph(10), 3, 1000), CapacityError);
    EXPECT_THROW(enumerate_colourings(Graph(10), 3, 1000), CapacityError);
    EXPECT_EQ(count_colourings(Graph(2), 0), 0u);
    EXPECT_THROW(count_colourings(Graph(2), -1), PreconditionError);
    EXPECT_THROW(count_colourings(Graph(2), 256), PreconditionError);
}

TEST(ReconfigGraph, K1AndK2)
{
    const ReconfigGraph r1(Graph(1), 3);
    EXPECT_EQ(r1.node_count(), 3u);
    EXPECT_EQ(r1.edge_count(), 3u);
    EXPECT_EQ(r1.component_count(), 1u);

    const Graph k2 = generate_named("complete", 2);
    const ReconfigGraph two(k2, 2);
    EXPECT_EQ(two.node_count(), 2u);
    EXPECT_EQ(two.edge_count(), 0u);
    EXPECT_EQ(two.component_count(), 2u);

    const ReconfigGraph three(k2, 3);
    EXPECT_EQ(three.node_count(), 6u);
    EXPECT_EQ(three.edge_count(), 6u);  // a hexagon
    EXPECT_EQ(three.component_count(), 1u);
    for (std::size_t i = 0; i < three.node_count(); ++i) {
        EXPECT_EQ(three.degree(i), 2u);
    }
}

TEST(ReconfigGraph, EdgesAreSingleVertexRecolourings)
{
    const Graph g = generate_named("path", 4);
    const ReconfigGraph r(g, 3);
    std::size_t directed = 0;
    for (std::size_t i = 0; i < r.node_count(); ++i) {
        const auto a = r.colouring(i);
        EXPECT_TRUE(is_proper(g, a));
        EXPECT_EQ(r.index_of(a), i);
        for (std::uint32_t j : r.neighbours(i)) {
            const auto b = r.colouring(j);
            int diff = 0;
            for (int v = 0; v < g.size(); ++v) {
                diff += a[v] != b[v];
            }
            EXPECT_EQ(diff, 1);
            ++directed;
        }
    }
    EXPECT_EQ(directed, 2 * r.edge_count());
    EXPECT_FALSE(r.index_of(Colouring{{0, 0, 1, 2}, 3}));
}

TEST(ReconfigGraph, G3AtFourColoursIsDisconnected)
{
    const ReconfigGraph r(gk_graph(3), 4);
    EXPECT_GT(r.component_count(), 1u);
}

TEST(ReconfigGraph, BfsAgreesWithImplicitSearch)
{
    const Graph g = generate_named("cycle", 4);
    const ReconfigGraph r(g, 3);
    const auto dist = r.bfs_from(0);
    const auto start = r.colouring(0).assignment;
    for (std::size_t i = 0; i < r.node_count(); ++i) {
        const auto ref = oracle::implicit_distance(g, 3, start, r.colouring(i).assignment);
        EXPECT_EQ(dist[i], ref ? *ref : -1);
    }
}

TEST(Summary, KnownDiameters)
{
    EXPECT_EQ(summarize(ReconfigGraph(generate_named("complete", 3), 4)).diameter, 4);
    EXPECT_EQ(summarize(ReconfigGraph(generate_named("complete", 2), 3)).diameter, 3);
    const auto p4 = summarize(ReconfigGraph(generate_named("path", 4), 3));
    EXPECT_EQ(p4.colouring_count, 24u);
    EXPECT_EQ(p4.diameter, 6);
}

TEST(Summary, DisconnectedHasNoOverallDiameter)
{
    const auto s = summarize(ReconfigGraph(generate_named("complete", 2), 2));
    EXPECT_EQ(s.component_count, 2u);
    EXPECT_FALSE(s.diameter);
    ASSERT_EQ(s.component_diameters.size(), 2u);
    EXPECT_EQ(s.component_diameters[0], 0);
    EXPECT_EQ(s.frozen_indices.size(), 2u);
}

TEST(Summary, DiameterCapSkipsLargeComponents)
{
    const auto s = summarize(ReconfigGraph(generate_named("path", 4), 3), 10);
    ASSERT_EQ(s.component_diameters.size(), 1u);
    EXPECT_FALSE(s.component_diameters[0]);
    EXPECT_FALSE(s.diameter);
}

TEST(Summary, ThreadCountDoesNotChangeResults)
{
    const ReconfigGraph r(gk_graph(3), 4);
    const auto one = summarize(r, default_diameter_cap, 1);
    const auto four = summarize(r, default_diameter_cap, 4);
    EXPECT_EQ(one.component_sizes, four.component_sizes);
    EXPECT_EQ(one.component_diameters, four.component_diameters);
    EXPECT_EQ(one.frozen_indices, four.frozen_indices);
    EXPECT_EQ(one.diameter, four.diameter);
}

TEST(Frozen, IsolatedNodesAreExactlyFrozenColourings)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(6, 0.6, rng());
        for (int k = 2; k <= 4; ++k) {
            const ReconfigGraph r(g, k);
            for (std::size_t i = 0; i < r.node_count(); ++i) {
                const auto c = r.colouring(i);
                EXPECT_EQ(r.degree(i) == 0, is_frozen(g, c));
                EXPECT_EQ(is_frozen(g, c), frozen_by_definition(g, c.assignment, k));
            }
        }
    }
}

TEST(Frozen, ImproperInputIsRejected)
{
    EXPECT_THROW(is_frozen(generate_named("complete", 2), Colouring{{1, 1}, 2}), PreconditionError);
}

TEST(Frozen, CompleteBipartiteMinusMatching)
{
    const Graph g = generate_named("complete_bipartite_minus_matching", 3);
    const auto found = find_frozen_colourings(g, 3, 10s);
    EXPECT_TRUE(found.complete);
    EXPECT_FALSE(found.colourings.empty());
    for (const auto& c : found.colourings) {
        EXPECT_TRUE(is_frozen(g, c));
    }
}

TEST(Frozen, TreesHaveNoFrozenThreeColourings)
{
    const Graph tree = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    const auto found = find_frozen_colourings(tree, 3, 10s);
    EXPECT_TRUE(found.complete);
    EXPECT_TRUE(found.colourings.empty());
    EXPECT_TRUE(find_frozen_colourings(generate_named("path", 6), 3, 10s).colourings.empty());
}

TEST(Frozen, SearchMatchesExhaustiveFilter)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(7, 0.6, rng());
        for (int k = 3; k <= 4; ++k) {
            std::vector<std::vector<int>> expected;
            for (const auto& c : oracle::all_colourings(g, k)) {
                if (frozen_by_definition(g, c, k)) {
                    expected.push_back(c);
                }
            }
            const auto found = find_frozen_colourings(g, k, 10s);
            ASSERT_TRUE(found.complete);
            std::vector<std::vector<int>> got;
            for (const auto& c : found.colourings) {
                got.push_back(c.assignment);
            }
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, expected);
        }
    }
}

TEST(Frozen, MaxResultsStopsEarly)
{
    const auto found = find_frozen_colourings(generate_named("complete", 4), 4, 10s, 3);
    EXPECT_EQ(found.colourings.size(), 3u);
    EXPECT_FALSE(found.complete);
}
