#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "reconf/graph.hpp"

namespace reconf {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JSON graph: {"n": N, "edges": [[u, v], ...], "labels": {"0": "x", ...}}
// with u < v, no duplicates, no self-loops.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines with 1-based ids.
// Repeated edges (either orientation) are collapsed, as many published instances carry them.
Graph graph_from_dimacs(std::istream& in);
std::string graph_to_dimacs(const Graph& g);

std::string graph_to_dot(const Graph& g, const std::string& name = "G");

/// Reads a graph file, dispatching on extension (.col/.dimacs -> DIMACS, otherwise JSON).
Graph load_graph(const std::string& path);

} // namespace reconf
