#include "reconf/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace reconf {

using nlohmann::json;

Graph graph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ParseError("graph JSON needs fields \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
        throw ParseError("\"n\" must be a non-negative integer");
    }
    const int n = j["n"].get<int>();
    if (!j["edges"].is_array()) {
        throw ParseError("\"edges\" must be an array");
    }
    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ParseError("each edge must be a pair of integers");
        }
        const long long u = e[0].get<long long>();
        const long long v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge [" + std::to_string(u) + ", " + std::to_string(v) + "] out of range");
        }
        if (u == v) {
            throw ParseError("self-loop on vertex " + std::to_string(u));
        }
        if (u > v) {
            throw ParseError("edge [" + std::to_string(u) + ", " + std::to_string(v) + "] must list u < v");
        }
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
            throw ParseError("duplicate edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
        }
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) {
            throw ParseError("\"labels\" must be an object");
        }
        for (const auto& [key, value] : j["labels"].items()) {
            std::size_t used = 0;
            long long id = -1;
            try {
                id = std::stoll(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || id < 0 || id >= n) {
                throw ParseError("label key \"" + key + "\" is not a vertex id");
            }
            if (!value.is_string()) {
                throw ParseError("label values must be strings");
            }
            g.set_label(static_cast<Vertex>(id), value.get<std::string>());
        }
    }
    return g;
}

json graph_to_json(const Graph& g)
{
    json j;
    j["n"] = g.size();
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        json labels = json::object();
        for (const auto& [v, l] : g.labels()) {
            labels[std::to_string(v)] = l;
        }
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_dimacs(std::istream& in)
{
    std::string line;
    int n = -1;
    Graph g;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            std::string format;
            long long nn = -1;
            long long m = -1;
            if (n != -1 || !(ls >> format >> nn >> m) || nn < 0) {
                throw ParseError("bad problem line at line " + std::to_string(line_no));
            }
            n = static_cast<int>(nn);
            g = Graph(n);
        } else if (tag == "e") {
            long long u = 0;
            long long v = 0;
            if (n == -1 || !(ls >> u >> v)) {
                throw ParseError("bad edge line at line " + std::to_string(line_no));
            }
            if (u < 1 || v < 1 || u > n || v > n) {
                throw ParseError("edge id out of range at line " + std::to_string(line_no));
            }
            if (u == v) {
                throw ParseError("self-loop at line " + std::to_string(line_no));
            }
            g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("unknown line tag '" + tag + "' at line " + std::to_string(line_no));
        }
    }
    if (n == -1) {
        throw ParseError("missing 'p edge n m' line");
    }
    return g;
}

std::string graph_to_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

std::string graph_to_dot(const Graph& g, const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "  " << v;
        if (g.labels().count(v)) {
            out << " [label=\"" << g.name(v) << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    const auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".col") || ends_with(".dimacs")) {
        return graph_from_dimacs(in);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return graph_from_json(j);
}

} // namespace reconf
