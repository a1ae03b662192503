#include <sstream>

#include <gtest/gtest.h>

#include "reconf/generators.hpp"
#include "reconf/graph_io.hpp"

using namespace reconf;
using nlohmann::json;

TEST(GraphJson, RoundTripKeepsLabels)
{
    const Graph g = gk_graph(3);
    const json j = graph_to_json(g);
    EXPECT_EQ(j["n"], 10);
    EXPECT_EQ(j["edges"].size(), 22u);
    EXPECT_EQ(j["labels"]["0"], "x");
    const Graph back = graph_from_json(j);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.labels(), g.labels());
}

TEST(GraphJson, RejectsMalformedInput)
{
    EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 1]]})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1], [0, 1]]})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 3]]})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[2, 1]]})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"n": -1, "edges": []})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"n": 2, "edges": [], "labels": {"7": "a"}})")), ParseError);
}

TEST(GraphJson, ExtraFieldsAreIgnored)
{
    const Graph g = graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1]], "tool": {"name": "reconf"}})"));
    EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(Dimacs, ParsesOneBasedIds)
{
    std::istringstream in("c a triangle plus a pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\ne 4 3\n");
    const Graph g = graph_from_dimacs(in);
    EXPECT_EQ(g.size(), 4);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(g.adjacent(0, 2));
    EXPECT_TRUE(g.adjacent(2, 3));

    std::istringstream again(graph_to_dimacs(g));
    EXPECT_EQ(graph_from_dimacs(again), g);
}

TEST(Dimacs, RejectsBadLines)
{
    std::istringstream no_header("e 1 2\n");
    EXPECT_THROW(graph_from_dimacs(no_header), ParseError);
    std::istringstream range("p edge 2 1\ne 1 3\n");
    EXPECT_THROW(graph_from_dimacs(range), ParseError);
    std::istringstream loop("p edge 2 1\ne 2 2\n");
    EXPECT_THROW(graph_from_dimacs(loop), ParseError);
    std::istringstream junk("p edge 2 1\nq 1 2\n");
    EXPECT_THROW(graph_from_dimacs(junk), ParseError);
}

TEST(Dot, ListsLabelsAndEdges)
{
    const std::string dot = graph_to_dot(gk_graph(3));
    EXPECT_NE(dot.find("0 [label=\"x\"]"), std::string::npos);
    EXPECT_NE(dot.find("0 -- 8;"), std::string::npos);  // x -- z1
    EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
}
