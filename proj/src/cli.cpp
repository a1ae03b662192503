#include "reconf/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reconf/generators.hpp"
#include "reconf/graph_io.hpp"
#include "reconf/recognition.hpp"
#include "reconf/recolour.hpp"

namespace reconf::cli {

using nlohmann::json;

std::string digest(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path)
{
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json vertex_list(const VertexSet& s) { return s.to_vector(); }

json tool_block() { return {{"name", tool_name}, {"version", tool_version}}; }

json stamp(json j, const std::string& input_digest)
{
    j["tool"] = tool_block();
    j["input_digest"] = input_digest;
    return j;
}

void emit(const json& j, const std::string& path, std::ostream& out)
{
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

Colouring read_colouring(const std::string& path, int palette)
{
    const json j = read_json_file(path);
    const json* arr = &j;
    if (j.is_object()) {
        if (j.contains("colouring")) {
            arr = &j["colouring"];
        } else if (j.contains("assignment")) {
            arr = &j["assignment"];
        }
    }
    if (!arr->is_array()) {
        throw ParseError(path + ": expected an array of colours");
    }
    Colouring c;
    c.palette = palette;
    for (const auto& e : *arr) {
        if (!e.is_number_integer()) {
            throw ParseError(path + ": colours must be integers");
        }
        c.assignment.push_back(e.get<int>());
    }
    return c;
}

json certificate_to_json(const Graph& g, const EliminationCertificate& cert)
{
    json events = json::array();
    for (const auto& e : cert.events) {
        if (const auto* p = std::get_if<PairRemoval>(&e)) {
            events.push_back({{"type", "pair_removal"}, {"x", p->x}, {"y", p->y}});
        } else if (const auto* t = std::get_if<TriangleRemoval>(&e)) {
            events.push_back({{"type", "triangle_removal"}, {"x", t->x}, {"w", t->w}, {"z", t->z}, {"y", t->y}});
        } else if (const auto* c = std::get_if<CliqueComponentRemoval>(&e)) {
            events.push_back(
                {{"type", "clique_component_removal"}, {"x", c->x}, {"y", c->y}, {"clique", vertex_list(c->clique)}});
        } else {
            events.push_back({{"type", "complete_base"}, {"remaining", vertex_list(std::get<CompleteBase>(e).remaining)}});
        }
    }
    (void)g;
    return events;
}

json two_pair_to_json(const TwoPair& p)
{
    return {{"x", p.x},
            {"y", p.y},
            {"separator", vertex_list(p.separator)},
            {"component_of_x", vertex_list(p.component_of_x)},
            {"component_of_y", vertex_list(p.component_of_y)}};
}

json sequence_to_json(const RecolourSequence& s)
{
    json steps = json::array();
    for (const auto& st : s.steps) {
        steps.push_back({st.vertex, st.new_colour});
    }
    return {{"start", s.start.assignment}, {"steps", steps}, {"end", s.end.assignment}, {"palette", s.start.palette}};
}

RecolourSequence sequence_from_json(const json& j, int palette)
{
    if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !j.contains("end")) {
        throw ParseError("sequence JSON needs \"start\", \"steps\" and \"end\"");
    }
    RecolourSequence s;
    try {
        s.start = Colouring{j["start"].get<std::vector<int>>(), palette};
        s.end = Colouring{j["end"].get<std::vector<int>>(), palette};
        for (const auto& st : j["steps"]) {
            if (!st.is_array() || st.size() != 2) {
                throw ParseError("each step must be [vertex, new_colour]");
            }
            s.steps.push_back({st[0].get<int>(), st[1].get<int>()});
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed sequence: ") + e.what());
    }
    return s;
}

json validation_to_json(const ValidationReport& r, int n)
{
    json j;
    j["ok"] = r.ok;
    j["violation_index"] = r.violation_index ? json(*r.violation_index) : json(nullptr);
    j["message"] = r.message;
    j["per_vertex_counts"] = r.per_vertex_counts;
    j["total_length"] = r.total_length;
    j["max_per_vertex"] =
        r.per_vertex_counts.empty() ? 0 : *std::max_element(r.per_vertex_counts.begin(), r.per_vertex_counts.end());
    j["bound_per_vertex"] = 2 * n;
    j["bound_total"] = 2L * n * n;
    return j;
}

struct Options {
    std::string out;
    int threads = 1;

    // gen
    int k = 3;
    std::string name;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string graph_class = "any";
    double frozen_budget = 60;

    // graph-consuming commands
    std::string graph_path;
    int compact_limit = default_compact_limit;
    bool diameter = false;
    bool frozen = false;
    std::size_t cap = default_colouring_cap;
    std::size_t diameter_cap = default_diameter_cap;
    std::string dump_dot;
    std::size_t dot_limit = 10'000;
    std::string from_path;
    std::string to_path;
    std::string seq_path;
    int palette = 0;

    // search-h
    double budget = 600;
    int max_candidates = 4;
};

json gk_to_json(const GkBundle& b)
{
    json j = graph_to_json(b.graph);
    j["gk"] = {{"k", b.k},
               {"base_colouring", b.base_colouring.assignment},
               {"frozen_colouring", b.frozen_colouring ? json(b.frozen_colouring->assignment) : json(nullptr)},
               {"frozen_search_complete", b.frozen_search_complete}};
    return j;
}

std::chrono::milliseconds seconds_to_ms(double s)
{
    return std::chrono::milliseconds(static_cast<long long>(s * 1000.0));
}

int cmd_gen_gk(const Options& o, std::ostream& out)
{
    const GkBundle b = generate_gk(o.k, seconds_to_ms(o.frozen_budget));
    emit(stamp(gk_to_json(b), digest("gen gk --k " + std::to_string(o.k))), o.out, out);
    return ok;
}

int cmd_gen_named(const Options& o, std::ostream& out)
{
    const Graph g = generate_named(o.name, o.n);
    emit(stamp(graph_to_json(g), digest("gen named --name " + o.name + " --n " + std::to_string(o.n))), o.out, out);
    return ok;
}

int cmd_gen_random(const Options& o, std::ostream& out)
{
    Graph g;
    if (o.graph_class == "cochordal") {
        g = random_cochordal(o.n, o.seed);
    } else if (o.graph_class == "any") {
        g = random_graph(o.n, o.p, o.seed);
    } else {
        throw UsageError("unknown --class '" + o.graph_class + "' (expected any or cochordal)");
    }
    std::ostringstream params;
    params << "gen random --n " << o.n << " --p " << o.p << " --seed " << o.seed << " --class " << o.graph_class;
    emit(stamp(graph_to_json(g), digest(params.str())), o.out, out);
    return ok;
}

int cmd_recognize(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    json j;
    j["n"] = g.size();
    j["m"] = g.edge_count();
    j["weakly_chordal"] = is_weakly_chordal(g);
    j["co_chordal"] = is_co_chordal(g);
    j["p5_p5bar_c5_free"] = is_p5_p5bar_c5_free(g);
    json pairs = json::array();
    for (const auto& p : find_two_pairs(g)) {
        pairs.push_back(two_pair_to_json(p));
    }
    j["two_pairs"] = pairs;
    j["chromatic_number"] = chromatic_number(g, std::max(1, g.size()));
    json compact;
    if (g.size() > o.compact_limit) {
        compact["verdict"] = "not_checked";
        compact["witness"] = nullptr;
    } else {
        const CompactnessVerdict v = is_compact_bruteforce(g, o.compact_limit);
        compact["verdict"] = v.compact ? "compact" : "not_compact";
        if (v.compact) {
            compact["witness"] = {{"kind", "elimination_certificate"},
                                  {"events", certificate_to_json(g, *v.certificate)}};
        } else {
            compact["witness"] = {{"kind", "failing_subgraph"}, {"vertices", vertex_list(*v.failing_subgraph)}};
        }
    }
    j["compact"] = compact;
    emit(stamp(j, digest(slurp(o.graph_path))), o.out, out);
    return ok;
}

int cmd_reconfig(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const ReconfigGraph r(g, o.k, o.cap);
    const ExplorationSummary s = summarize(r, o.diameter ? o.diameter_cap : 0, o.threads);
    json j;
    j["n"] = g.size();
    j["k"] = o.k;
    j["colouring_count"] = s.colouring_count;
    j["edge_count"] = r.edge_count();
    j["component_count"] = s.component_count;
    j["component_sizes"] = s.component_sizes;
    j["frozen_count"] = s.frozen_indices.size();
    if (o.diameter) {
        json diam = json::array();
        for (const auto& d : s.component_diameters) {
            diam.push_back(d ? json(*d) : json("capped"));
        }
        j["component_diameters"] = diam;
        j["diameter"] = s.diameter ? json(*s.diameter) : json(nullptr);
    }
    if (o.frozen) {
        json frozen = json::array();
        for (std::size_t i : s.frozen_indices) {
            frozen.push_back(r.colouring(i).assignment);
        }
        j["frozen_colourings"] = frozen;
    }
    if (!o.dump_dot.empty()) {
        if (r.node_count() > o.dot_limit) {
            throw CapacityError("R has " + std::to_string(r.node_count()) + " nodes, above the DOT limit " +
                                std::to_string(o.dot_limit));
        }
        std::ostringstream dot;
        dot << "graph R {\n";
        for (std::size_t i = 0; i < r.node_count(); ++i) {
            dot << "  " << i << " [label=\"";
            for (auto c : r.assignment(i)) {
                dot << static_cast<int>(c);
            }
            dot << "\"];\n";
        }
        for (std::size_t i = 0; i < r.node_count(); ++i) {
            for (auto t : r.neighbours(i)) {
                if (t > i) {
                    dot << "  " << i << " -- " << t << ";\n";
                }
            }
        }
        dot << "}\n";
        emit_text(dot.str(), o.dump_dot, out);
    }
    emit(stamp(j, digest(slurp(o.graph_path))), o.out, out);
    return ok;
}

int cmd_recolour(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const Colouring a = read_colouring(o.from_path, o.k);
    const Colouring b = read_colouring(o.to_path, o.k);
    const auto cert = find_elimination_certificate(g);
    if (!cert) {
        throw PreconditionError("graph is not compact: no elimination certificate exists");
    }
    const RecolourSequence s = recolour_compact(g, *cert, a, b);
    const ValidationReport report = validate_sequence(g, s);
    json j = sequence_to_json(s);
    j["certificate"] = certificate_to_json(g, *cert);
    j["length"] = s.length();
    j["max_per_vertex"] = s.max_per_vertex(g.size());
    j["valid"] = report.ok;
    emit(stamp(j, digest(slurp(o.graph_path) + slurp(o.from_path) + slurp(o.to_path))), o.out, out);
    return report.ok ? ok : domain_error;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const json sj = read_json_file(o.seq_path);
    int palette = o.palette;
    if (palette == 0 && sj.is_object() && sj.contains("palette") && sj["palette"].is_number_integer()) {
        palette = sj["palette"].get<int>();
    }
    if (palette <= 0) {
        throw UsageError("palette unknown: pass --k or include \"palette\" in the sequence file");
    }
    RecolourSequence s = sequence_from_json(sj, palette);
    ValidationReport report;
    if (!o.from_path.empty() && read_colouring(o.from_path, palette) != s.start) {
        report.ok = false;
        report.violation_index = -1;
        report.message = "sequence start differs from --from colouring";
        report.total_length = s.steps.size();
        report.per_vertex_counts = s.per_vertex_counts(g.size());
    } else {
        report = validate_sequence(g, s);
    }
    std::string inputs = slurp(o.graph_path) + slurp(o.seq_path);
    if (!o.from_path.empty()) {
        inputs += slurp(o.from_path);
    }
    emit(stamp(validation_to_json(report, g.size()), digest(inputs)), o.out, out);
    return report.ok ? ok : domain_error;
}

int cmd_search_h(const Options& o, std::ostream& out)
{
    const SearchReport rep = search_h(o.n, seconds_to_ms(o.budget), o.seed, o.max_candidates);
    json j;
    j["n"] = rep.n;
    j["seed"] = rep.seed;
    j["exhausted"] = rep.exhausted;
    j["found"] = !rep.candidates.empty();
    json cands = json::array();
    for (const auto& c : rep.candidates) {
        // Re-verify each hit with the independent checkers before reporting it.
        const bool free = is_p5_p5bar_c5_free(c.graph);
        const int chi = chromatic_number(c.graph, c.graph.size());
        const bool compact = is_compact_bruteforce(c.graph, c.graph.size()).compact;
        cands.push_back({{"graph", graph_to_json(c.graph)},
                         {"canonical_code", c.canonical_code},
                         {"failing_subgraph", vertex_list(c.failing_subgraph)},
                         {"transcript",
                          {{"p5_p5bar_c5_free", free},
                           {"chromatic_number", chi},
                           {"weakly_chordal", is_weakly_chordal(c.graph)},
                           {"compact", compact}}}});
    }
    j["candidates"] = cands;
    // Work counters depend on wall-clock budget, so they are left out of the
    // deterministic report unless the space was exhausted.
    if (rep.exhausted) {
        j["graphs_examined"] = rep.graphs_examined;
    }
    std::ostringstream params;
    params << "search-h --n " << o.n << " --seed " << o.seed << " --max-candidates " << o.max_candidates;
    emit(stamp(j, digest(params.str())), o.out, out);
    return ok;
}

int cmd_export_dot(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    emit_text(graph_to_dot(g), o.out, out);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Reconfiguration graphs of colourings: generators, recognizers, explorer and recolouring"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker threads for diameter sweeps")->check(CLI::PositiveNumber);
    app.set_version_flag("--version", std::string(tool_version));

    auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", o.out, "output file (default stdout)"); };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", o.graph_path, "graph file (.json or DIMACS .col)")->required()->check(CLI::ExistingFile);
    };

    auto* gen = app.add_subcommand("gen", "generate graphs");
    gen->require_subcommand(1);
    auto* gen_gk = gen->add_subcommand("gk", "the counterexample graph G_k");
    gen_gk->add_option("--k", o.k, "k >= 3")->required();
    gen_gk->add_option("--frozen-budget", o.frozen_budget, "seconds for the frozen-colouring search")
        ->check(CLI::PositiveNumber);
    add_out(gen_gk);
    auto* gen_named = gen->add_subcommand("named", "a standard small graph");
    gen_named->add_option("--name", o.name, "path|cycle|complete|complete_bipartite_minus_matching|diamond|p5|"
                                            "p5_complement|c5|2k2")
        ->required();
    gen_named->add_option("--n", o.n, "size parameter");
    add_out(gen_named);
    auto* gen_random = gen->add_subcommand("random", "seeded random graph");
    gen_random->add_option("--n", o.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    gen_random->add_option("--p", o.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", o.seed, "random seed");
    gen_random->add_option("--class", o.graph_class, "any|cochordal");
    add_out(gen_random);

    auto* recognize = app.add_subcommand("recognize", "graph-class report");
    add_graph(recognize);
    recognize->add_option("--compact-limit", o.compact_limit, "largest n for the brute-force compactness check")
        ->check(CLI::PositiveNumber);
    add_out(recognize);

    auto* reconfig = app.add_subcommand("reconfig", "explore R_k(G)");
    add_graph(reconfig);
    reconfig->add_option("--k", o.k, "palette size")->required()->check(CLI::NonNegativeNumber);
    reconfig->add_flag("--diameter", o.diameter, "compute component diameters");
    reconfig->add_flag("--frozen", o.frozen, "list frozen colourings");
    reconfig->add_option("--cap", o.cap, "maximum number of colourings")->check(CLI::PositiveNumber);
    reconfig->add_option("--diameter-cap", o.diameter_cap, "largest component for exact diameter")
        ->check(CLI::PositiveNumber);
    reconfig->add_option("--dump-dot", o.dump_dot, "write R_k as DOT to this file");
    reconfig->add_option("--dot-limit", o.dot_limit, "node limit for --dump-dot")->check(CLI::PositiveNumber);
    add_out(reconfig);

    auto* recolour = app.add_subcommand("recolour", "recolouring sequence on a compact graph");
    add_graph(recolour);
    recolour->add_option("--k", o.k, "palette size")->required()->check(CLI::PositiveNumber);
    recolour->add_option("--from", o.from_path, "start colouring")->required()->check(CLI::ExistingFile);
    recolour->add_option("--to", o.to_path, "target colouring")->required()->check(CLI::ExistingFile);
    add_out(recolour);

    auto* validate = app.add_subcommand("validate", "replay and check a recolouring sequence");
    add_graph(validate);
    validate->add_option("--seq", o.seq_path, "sequence file")->required()->check(CLI::ExistingFile);
    validate->add_option("--from", o.from_path, "expected start colouring")->check(CLI::ExistingFile);
    validate->add_option("--k", o.palette, "palette size (default: from the sequence file)")
        ->check(CLI::PositiveNumber);
    add_out(validate);

    auto* search = app.add_subcommand("search-h", "search for non-compact (P5, P5-complement, C5)-free 4-chromatic graphs");
    search->add_option("--n", o.n, "vertex count (<= 9)")->required()->check(CLI::Range(1, 9));
    search->add_option("--budget", o.budget, "seconds")->check(CLI::PositiveNumber);
    search->add_option("--seed", o.seed, "random seed");
    search->add_option("--max-candidates", o.max_candidates, "stop after this many distinct hits")
        ->check(CLI::PositiveNumber);
    add_out(search);

    auto* export_dot = app.add_subcommand("export-dot", "write a graph as DOT");
    add_graph(export_dot);
    add_out(export_dot);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (gen_gk->parsed()) return cmd_gen_gk(o, out);
        if (gen_named->parsed()) return cmd_gen_named(o, out);
        if (gen_random->parsed()) return cmd_gen_random(o, out);
        if (recognize->parsed()) return cmd_recognize(o, out);
        if (reconfig->parsed()) return cmd_reconfig(o, out);
        if (recolour->parsed()) return cmd_recolour(o, out);
        if (validate->parsed()) return cmd_validate(o, out);
        if (search->parsed()) return cmd_search_h(o, out);
        if (export_dot->parsed()) return cmd_export_dot(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return domain_error;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return domain_error;
    } catch (const BoundExceededError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }
    err << "usage error: no subcommand\n";
    return usage_error;
}

} // namespace reconf::cli
