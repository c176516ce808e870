#include "rainbow/cli.hpp"

#include <CLI11.hpp>
#include <functional>

#include "rainbow/audit.hpp"
#include "rainbow/error.hpp"
#include "rainbow/io.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/sweep.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/witness.hpp"

namespace rainbow::cli {

namespace {

struct Config {
    int a = 0;
    int b = 0;
    std::string graph_path;
    std::string coloring_path;
    std::string out_path;
    std::string scheme;
    std::string mode;
    std::string kind;
    std::string format = "dot";
    std::optional<int> k_max;
    std::size_t max_edges = default_max_edges;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    int a_max = 6;
    int b_max = 6;
};

void write_json(const std::string& path, const json& j)
{
    write_file_atomic(path, canonical_dump(j));
}

int cmd_construct(const Config& cfg, std::ostream& out)
{
    const auto wg = build_witness({cfg.a, cfg.b});
    write_json(cfg.out_path, to_json(wg));
    out << "G(" << cfg.a << "," << cfg.b << "): " << wg.graph().vertex_count() << " vertices, "
        << wg.graph().edge_count() << " edges, cycle length " << wg.cycle_length() << "\n";
    return exit_code::ok;
}

int cmd_color(const Config& cfg, std::ostream& out)
{
    const auto j = read_json_file(cfg.graph_path);
    if (!has_witness_labels(j)) {
        throw InvalidParameter("color needs a witness graph with a \"labels\" block");
    }
    const auto wg = witness_from_json(j);
    const auto coloring = cfg.scheme == "rc" ? rc_coloring(wg) : src_coloring(wg);
    write_json(cfg.out_path, to_json(coloring));
    out << cfg.scheme << " coloring: " << used_colors(coloring).size() << " colors on "
        << coloring.edge_count() << " edges\n";
    return exit_code::ok;
}

int cmd_verify(const Config& cfg, std::ostream& out)
{
    const Graph g = graph_from_json(read_json_file(cfg.graph_path));
    const EdgeColoring c = coloring_from_json(read_json_file(cfg.coloring_path));
    const auto report = verify(g, c, cfg.mode == "rainbow" ? Mode::rainbow : Mode::strong);
    write_json(cfg.out_path, to_json(report));
    out << to_string(report.mode) << ": " << (report.passed ? "passed" : "failed");
    if (report.violating_pair) {
        out << " at pair (" << report.violating_pair->first << ", " << report.violating_pair->second << ")";
    }
    out << "\n";
    return report.passed ? exit_code::ok : exit_code::check_failed;
}

int cmd_solve(const Config& cfg, std::ostream& out)
{
    const Graph g = graph_from_json(read_json_file(cfg.graph_path));
    SolveOptions options;
    options.k_max = cfg.k_max;
    options.max_edges = cfg.max_edges;
    const auto result = solve_exact(g, cfg.kind == "rc" ? SolveKind::rc : SolveKind::src, options);
    write_json(cfg.out_path, to_json(result));
    out << cfg.kind << " = " << result.value << " (" << result.colorings_tested << " colorings tested)\n";
    return exit_code::ok;
}

int cmd_audit(const Config& cfg, std::ostream& out)
{
    const auto wg = build_witness({cfg.a, cfg.b});
    const EdgeColoring c = coloring_from_json(read_json_file(cfg.coloring_path));
    const auto outcome = audit_lower_bound(wg, c);
    write_json(cfg.out_path, to_json(outcome));
    const auto [x, y] = refuted_pair(outcome);
    out << (std::holds_alternative<EarlyRefutation>(outcome) ? "early refutation" : "pigeonhole trace")
        << ": pair (" << x << ", " << y << ") has no rainbow geodesic\n";
    return exit_code::ok;
}

int cmd_sweep(const Config& cfg, std::ostream& out)
{
    const auto report = run_sweep(cfg.a_max, cfg.b_max, cfg.seed, cfg.samples);
    write_json(cfg.out_path, to_json(report));
    for (const auto& p : report.points) {
        out << "G(" << p.params.a << "," << p.params.b << ") " << (p.ok() ? "ok" : "FAILED") << "  diam=" << p.diameter
            << " rc=" << p.rc_colors << (p.rc_passed ? "" : "!") << " src=" << p.src_colors
            << (p.src_passed ? "" : "!") << " refuted=" << p.refuted << "/" << p.samples << "\n";
    }
    return report.all_passed() ? exit_code::ok : exit_code::check_failed;
}

int cmd_export(const Config& cfg, std::ostream&)
{
    const auto j = read_json_file(cfg.graph_path);
    const bool witness = has_witness_labels(j);
    const Graph g = witness ? witness_from_json(j).graph() : graph_from_json(j);
    if (cfg.format == "json") {
        write_json(cfg.out_path, witness ? to_json(witness_from_json(j)) : to_json(g));
        return exit_code::ok;
    }
    std::optional<EdgeColoring> coloring;
    if (!cfg.coloring_path.empty()) {
        coloring = coloring_from_json(read_json_file(cfg.coloring_path));
    }
    std::vector<std::string> names;
    if (witness) {
        names = witness_vertex_names(witness_from_json(j));
    }
    write_file_atomic(cfg.out_path, to_dot(g, coloring ? &*coloring : nullptr, witness ? &names : nullptr));
    return exit_code::ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rainbow connection toolkit: witness graphs G(a,b), their colorings, exact rc/src, and the "
                 "src >= b audit",
                 "rainbow"};
    app.require_subcommand(1);
    Config cfg;
    std::function<int(const Config&, std::ostream&)> action;

    auto* construct = app.add_subcommand("construct", "Build the witness graph G(a,b)");
    construct->add_option("--a", cfg.a, "target rc (>= 3)")->required();
    construct->add_option("--b", cfg.b, "target src (>= a)")->required();
    construct->add_option("--out", cfg.out_path, "witness JSON output")->required();
    construct->callback([&] { action = cmd_construct; });

    auto* color = app.add_subcommand("color", "Generate the rc or src coloring of a witness graph");
    color->add_option("--graph", cfg.graph_path)->required();
    color->add_option("--scheme", cfg.scheme)->required()->check(CLI::IsMember({"rc", "src"}));
    color->add_option("--out", cfg.out_path)->required();
    color->callback([&] { action = cmd_color; });

    auto* verify_cmd = app.add_subcommand("verify", "Check (strong) rainbow connectivity; exit 1 on failure");
    verify_cmd->add_option("--graph", cfg.graph_path)->required();
    verify_cmd->add_option("--coloring", cfg.coloring_path)->required();
    verify_cmd->add_option("--mode", cfg.mode)->required()->check(CLI::IsMember({"rainbow", "strong"}));
    verify_cmd->add_option("--report", cfg.out_path)->required();
    verify_cmd->callback([&] { action = cmd_verify; });

    auto* solve = app.add_subcommand("solve", "Exact rc or src of a small graph");
    solve->add_option("--graph", cfg.graph_path)->required();
    solve->add_option("--kind", cfg.kind)->required()->check(CLI::IsMember({"rc", "src"}));
    solve->add_option("--k-max", cfg.k_max, "largest palette to try");
    solve->add_option("--max-edges", cfg.max_edges, "feasibility bound on the edge count")
        ->capture_default_str();
    solve->add_option("--out", cfg.out_path)->required();
    solve->callback([&] { action = cmd_solve; });

    auto* audit = app.add_subcommand("audit", "Refute a (b-1)-coloring of G(a,b) as a strong rainbow coloring");
    audit->add_option("--a", cfg.a)->required();
    audit->add_option("--b", cfg.b)->required();
    audit->add_option("--coloring", cfg.coloring_path)->required();
    audit->add_option("--out", cfg.out_path)->required();
    audit->callback([&] { action = cmd_audit; });

    auto* sweep = app.add_subcommand("sweep", "Run every witness check over 3 <= a <= b");
    sweep->add_option("--a-max", cfg.a_max)->capture_default_str();
    sweep->add_option("--b-max", cfg.b_max)->capture_default_str();
    sweep->add_option("--seed", cfg.seed)->capture_default_str();
    sweep->add_option("--samples", cfg.samples, "sampled (b-1)-colorings per grid point")->capture_default_str();
    sweep->add_option("--report", cfg.out_path)->required();
    sweep->callback([&] { action = cmd_sweep; });

    auto* export_cmd = app.add_subcommand("export", "Write a graph as Graphviz DOT or canonical JSON");
    export_cmd->add_option("--graph", cfg.graph_path)->required();
    export_cmd->add_option("--coloring", cfg.coloring_path);
    export_cmd->add_option("--format", cfg.format)->capture_default_str()->check(CLI::IsMember({"dot", "json"}));
    export_cmd->add_option("--out", cfg.out_path)->required();
    export_cmd->callback([&] { action = cmd_export; });

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::parse_failure;
    }

    try {
        return action(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::parse_failure;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::parse_failure;
    } catch (const InvalidParameter& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_code::precondition;
    } catch (const BindingError& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_code::precondition;
    } catch (const SizeLimitError& e) {
        err << "search limit: " << e.what() << "\n";
        return exit_code::search_limit;
    } catch (const BoundTooSmall& e) {
        err << "search limit: " << e.what() << "\n";
        return exit_code::search_limit;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
}

} // namespace rainbow::cli
