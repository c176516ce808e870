#include "rainbow/sweep.hpp"

#include <random>

#include "rainbow/error.hpp"

namespace rainbow {

bool GridPointResult::ok() const noexcept
{
    return diameter == params.a && rc_passed && rc_colors == params.a && src_passed && src_colors == params.b
           && refuted == samples;
}

bool SweepReport::all_passed() const noexcept
{
    for (const auto& p : points) {
        if (!p.ok()) {
            return false;
        }
    }
    return true;
}

GridPointResult check_grid_point(const WitnessParams& params, std::uint64_t seed, std::size_t samples)
{
    const WitnessGraph wg = build_witness(params);
    const Graph& g = wg.graph();

    GridPointResult out;
    out.params = params;
    out.cycle_length = wg.cycle_length();
    out.vertex_count = g.vertex_count();
    out.edge_count = g.edge_count();
    out.diameter = diameter(g);

    const auto rc = rc_coloring(wg);
    out.rc_colors = static_cast<int>(used_colors(rc).size());
    out.rc_passed = is_rainbow_connected(g, rc).passed;

    const auto src = src_coloring(wg);
    out.src_colors = static_cast<int>(used_colors(src).size());
    out.src_passed = is_strong_rainbow_connected(g, src).passed;

    out.margins = pigeonhole_margins(params);

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(params.a), static_cast<std::uint32_t>(params.b)};
    std::mt19937_64 rng(seq);
    out.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto coloring = sample_subcritical_coloring(wg, sample_family(i), rng);
        const auto outcome = audit_lower_bound(wg, coloring);
        if (std::holds_alternative<EarlyRefutation>(outcome)) {
            ++out.early_refutations;
        }
        const auto [x, y] = refuted_pair(outcome);
        if (!exists_rainbow_geodesic(g, coloring, x, y)) {
            ++out.refuted;
        }
    }
    return out;
}

SweepReport run_sweep(int a_max, int b_max, std::uint64_t seed, std::size_t samples)
{
    if (a_max < 3 || b_max < 3) {
        throw InvalidParameter("sweep needs a_max >= 3 and b_max >= 3");
    }
    SweepReport report;
    report.seed = seed;
    for (int a = 3; a <= a_max; ++a) {
        for (int b = a; b <= b_max; ++b) {
            report.points.push_back(check_grid_point({a, b}, seed, samples));
        }
    }
    return report;
}

json to_json(const GridPointResult& p)
{
    return {
        {"a", p.params.a},
        {"b", p.params.b},
        {"cycle_n", p.cycle_length},
        {"vertices", p.vertex_count},
        {"edges", p.edge_count},
        {"diameter", p.diameter},
        {"rc_passed", p.rc_passed},
        {"rc_colors", p.rc_colors},
        {"src_passed", p.src_passed},
        {"src_colors", p.src_colors},
        {"ceil_a", p.margins.ceil_a},
        {"ceil_b", p.margins.ceil_b},
        {"samples", p.samples},
        {"refuted", p.refuted},
        {"early_refutations", p.early_refutations},
        {"ok", p.ok()},
    };
}

json to_json(const SweepReport& report)
{
    json points = json::array();
    for (const auto& p : report.points) {
        points.push_back(to_json(p));
    }
    return {{"seed", report.seed}, {"points", std::move(points)}, {"passed", report.all_passed()}};
}

} // namespace rainbow
