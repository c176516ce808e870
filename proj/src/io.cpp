#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

int require_int(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    const json& value = j.at(key);
    if (!value.is_number_integer()) {
        throw ParseError(std::string("field \"") + key + "\" must be an integer");
    }
    return value.get<int>();
}

const json& require_array(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
        throw ParseError(std::string("field \"") + key + "\" must be an array");
    }
    return j.at(key);
}

std::vector<int> int_array(const json& j, const char* key)
{
    std::vector<int> out;
    for (const json& x : require_array(j, key)) {
        if (!x.is_number_integer()) {
            throw ParseError(std::string("field \"") + key + "\" must hold integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

json pair_json(VertexPair p)
{
    return json::array({p.first, p.second});
}

json edges_json(const std::vector<Edge>& edges)
{
    json out = json::array();
    for (const Edge& e : edges) {
        out.push_back(json::array({e.u, e.v}));
    }
    return out;
}

} // namespace

json to_json(const Graph& g)
{
    return {{"n", g.vertex_count()}, {"edges", edges_json(g.edges())}};
}

Graph graph_from_json(const json& j)
{
    const int n = require_int(j, "n");
    std::vector<Edge> edges;
    for (const json& e : require_array(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ParseError("every edge must be a pair of integers");
        }
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidParameter& ex) {
        throw ParseError(std::string("invalid graph: ") + ex.what());
    }
}

json to_json(const WitnessGraph& wg)
{
    json out = to_json(wg.graph());
    out["labels"] = {
        {"cycle", wg.cycle_ids()},
        {"w", wg.w_id()},
        {"v", wg.v_id()},
        {"path", wg.path_ids()},
        {"a", wg.params().a},
        {"b", wg.params().b},
        {"cycle_n", wg.cycle_length()},
    };
    return out;
}

bool has_witness_labels(const json& j)
{
    return j.is_object() && j.contains("labels");
}

WitnessGraph witness_from_json(const json& j)
{
    if (!has_witness_labels(j) || !j.at("labels").is_object()) {
        throw ParseError("graph has no witness \"labels\" block");
    }
    const json& labels = j.at("labels");
    const WitnessParams params{require_int(labels, "a"), require_int(labels, "b")};
    const Graph stored = graph_from_json(j);
    WitnessGraph wg = [&] {
        try {
            return build_witness(params);
        } catch (const InvalidParameter& ex) {
            throw ParseError(std::string("invalid witness labels: ") + ex.what());
        }
    }();
    const bool labels_match = int_array(labels, "cycle") == wg.cycle_ids() && require_int(labels, "w") == wg.w_id()
                              && require_int(labels, "v") == wg.v_id() && int_array(labels, "path") == wg.path_ids()
                              && require_int(labels, "cycle_n") == wg.cycle_length();
    if (!labels_match || !(stored == wg.graph())) {
        throw ParseError("graph and labels do not describe the witness for a=" + std::to_string(params.a)
                         + ", b=" + std::to_string(params.b));
    }
    return wg;
}

json to_json(const EdgeColoring& c)
{
    return {{"k", c.palette_size()}, {"colors", std::vector<int>(c.colors().begin(), c.colors().end())}};
}

EdgeColoring coloring_from_json(const json& j)
{
    const int k = require_int(j, "k");
    auto colors = int_array(j, "colors");
    try {
        return EdgeColoring(k, std::move(colors));
    } catch (const InvalidParameter& ex) {
        throw ParseError(std::string("invalid coloring: ") + ex.what());
    }
}

json to_json(const VerificationReport& report)
{
    json out = {
        {"mode", std::string(to_string(report.mode))},
        {"passed", report.passed},
        {"violating_pair", report.violating_pair ? pair_json(*report.violating_pair) : json(nullptr)},
        {"checked_pairs", report.checked_pairs},
    };
    if (!report.witness_paths.empty()) {
        json paths = json::array();
        for (const auto& [pair, path] : report.witness_paths) {
            paths.push_back({{"pair", pair_json(pair)}, {"path", path}});
        }
        out["witness_paths"] = std::move(paths);
    }
    return out;
}

json to_json(const SolveResult& result)
{
    return {
        {"kind", std::string(to_string(result.kind))},
        {"value", result.value},
        {"certificate", to_json(result.certificate)},
        {"colorings_tested", result.colorings_tested},
        {"lower_bound_used", result.lower_bound_used},
    };
}

json to_json(const AuditOutcome& outcome)
{
    if (const auto* early = std::get_if<EarlyRefutation>(&outcome)) {
        return {
            {"outcome", "early_refutation"},
            {"pair", pair_json(early->pair)},
            {"geodesic", early->geodesic},
            {"repeated_color", early->repeated_color},
        };
    }
    const auto& trace = std::get<AuditTrace>(outcome);
    json failures = json::array();
    for (const auto& f : trace.geodesic_failures) {
        failures.push_back({{"path", f.path}, {"repeated_color", f.repeated_color}});
    }
    return {
        {"outcome", "trace"},
        {"forced_path_colors", trace.forced_path_colors},
        {"ceil_a", trace.margins.ceil_a},
        {"ceil_b", trace.margins.ceil_b},
        {"set_a_class", {{"color", trace.set_a_class.color}, {"edges", edges_json(trace.set_a_class.edges)}}},
        {"set_b_class", {{"color", trace.set_b_class.color}, {"edges", edges_json(trace.set_b_class.edges)}}},
        {"chosen_pair", pair_json(trace.chosen_pair)},
        {"geodesic_failures", std::move(failures)},
    };
}

std::string canonical_dump(const json& j)
{
    return j.dump() + "\n";
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& ex) {
        throw ParseError(path.string() + ": " + ex.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << contents;
        out.flush();
        if (!out) {
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::string> witness_vertex_names(const WitnessGraph& wg)
{
    std::vector<std::string> names(static_cast<std::size_t>(wg.graph().vertex_count()));
    for (int i = 1; i <= wg.cycle_length(); ++i) {
        names[wg.cycle_vertex(i)] = "v" + std::to_string(i);
    }
    names[wg.w_id()] = "w";
    names[wg.v_id()] = "v";
    for (int j = 1; j <= wg.params().a - 2; ++j) {
        names[wg.path_vertex(j)] = "u" + std::to_string(j);
    }
    return names;
}

const std::vector<std::string>& dot_palette()
{
    static const std::vector<std::string> palette{
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
        "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000000", "#f0027f",
    };
    return palette;
}

std::string to_dot(const Graph& g, const EdgeColoring* coloring, const std::vector<std::string>* vertex_names)
{
    if (coloring) {
        coloring->require_bound_to(g);
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        out << "  " << x;
        if (vertex_names && static_cast<std::size_t>(x) < vertex_names->size()) {
            out << " [label=\"" << (*vertex_names)[x] << "\"]";
        }
        out << ";\n";
    }
    const auto& palette = dot_palette();
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        out << "  " << e.u << " -- " << e.v;
        if (coloring) {
            const int color = coloring->color(id);
            out << " [label=\"" << color << "\", color=\""
                << palette[static_cast<std::size_t>(color - 1) % palette.size()] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rainbow
