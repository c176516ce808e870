#include "rainbow/audit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

int ceil_div(int num, int den)
{
    return (num + den - 1) / den;
}

// Color -> members, with the winner being the largest class and ties going
// to the smallest color.
template <class Member>
std::pair<int, std::vector<Member>> largest_class(const std::map<int, std::vector<Member>>& classes)
{
    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it) {
        if (it->second.size() > best->second.size()) {
            best = it;
        }
    }
    return {best->first, best->second};
}

void cross_check_refuted(const WitnessGraph& wg, const EdgeColoring& c, VertexPair pair)
{
    if (exists_rainbow_geodesic(wg.graph(), c, pair.first, pair.second)) {
        throw AuditInconsistency("audit emitted pair (" + std::to_string(pair.first) + ", "
                                 + std::to_string(pair.second) + ") but it has a rainbow geodesic");
    }
}

std::optional<EarlyRefutation> check_pendant_path(const WitnessGraph& wg, const EdgeColoring& c,
                                                  const std::vector<int>& path_colors)
{
    const auto& g = wg.graph();
    const int a = wg.params().a;
    const Vertex u1 = wg.path_vertex(1);

    auto refute = [&](int i, int color) {
        const Vertex vi = wg.cycle_vertex(i);
        Path geodesic{vi};
        for (int j = a - 1; j >= 1; --j) {
            geodesic.push_back(wg.path_vertex(j));
        }
        const auto dag = geodesic_dag(g, vi);
        if (dag.dist[u1] != a - 1 || dag.count_geodesics(u1) != 1) {
            throw AuditInconsistency("geodesic from v_" + std::to_string(i) + " to u_1 is not the unique path of length a-1");
        }
        EarlyRefutation out{{std::min(vi, u1), std::max(vi, u1)}, std::move(geodesic), color};
        cross_check_refuted(wg, c, out.pair);
        return out;
    };

    std::set<int> seen;
    for (int color : path_colors) {
        if (!seen.insert(color).second) {
            return refute(1, color);
        }
    }
    for (int i = 1; i <= wg.cycle_length(); ++i) {
        const int color = c.color(g.edge_id(wg.cycle_vertex(i), wg.v_id()));
        if (seen.contains(color)) {
            return refute(i, color);
        }
    }
    return std::nullopt;
}

} // namespace

PigeonholeMargins pigeonhole_margins(const WitnessParams& params)
{
    const int n = witness_cycle_length(params);
    const int a = params.a;
    const int b = params.b;
    PigeonholeMargins margins{ceil_div(n, b - a + 1), ceil_div(3 * b + 1, b - 1)};
    if (margins.ceil_a < 3 * b + 1) {
        throw ArithmeticInconsistency("ceil(n/(b-a+1)) = " + std::to_string(margins.ceil_a) + " < 3b+1 for a="
                                      + std::to_string(a) + ", b=" + std::to_string(b));
    }
    if (margins.ceil_b < 4) {
        throw ArithmeticInconsistency("ceil((3b+1)/(b-1)) = " + std::to_string(margins.ceil_b) + " < 4 for b="
                                      + std::to_string(b));
    }
    return margins;
}

int cyclic_distance(int i, int j, int n)
{
    const int d = std::abs(i - j) % n;
    return std::min(d, n - d);
}

std::pair<int, int> separated_pair(const std::vector<int>& positions, int n)
{
    std::vector<int> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 4 || n < 18) {
        throw InvalidParameter("separated_pair needs at least 4 distinct positions on a cycle of length >= 18");
    }
    for (std::size_t x = 0; x < sorted.size(); ++x) {
        for (std::size_t y = x + 1; y < sorted.size(); ++y) {
            if (cyclic_distance(sorted[x], sorted[y], n) > 3) {
                return {sorted[x], sorted[y]};
            }
        }
    }
    throw InvalidParameter("no two positions are more than 3 apart on the cycle");
}

VertexPair refuted_pair(const AuditOutcome& outcome)
{
    return std::visit(
        [](const auto& o) {
            if constexpr (std::is_same_v<std::decay_t<decltype(o)>, EarlyRefutation>) {
                return o.pair;
            } else {
                return o.chosen_pair;
            }
        },
        outcome);
}

AuditOutcome audit_lower_bound(const WitnessGraph& wg, const EdgeColoring& c)
{
    const auto& g = wg.graph();
    const int a = wg.params().a;
    const int b = wg.params().b;
    c.require_bound_to(g);
    if (!restrict_palette_check(c, b - 1)) {
        throw InvalidParameter("audit needs a coloring with at most b-1 = " + std::to_string(b - 1) + " colors, got "
                               + std::to_string(used_colors(c).size()));
    }
    const PigeonholeMargins margins = pigeonhole_margins(wg.params());

    // Step 1: the pendant path and every v-hub edge see pairwise distinct colors.
    std::vector<int> path_colors;
    for (int j = 1; j <= a - 2; ++j) {
        path_colors.push_back(c.color(g.edge_id(wg.path_vertex(j), wg.path_vertex(j + 1))));
    }
    if (auto early = check_pendant_path(wg, c, path_colors)) {
        return *early;
    }

    // Step 2: pigeonhole over A = { v_i v }.
    std::map<int, std::vector<int>> v_hub_classes;
    for (int i = 1; i <= wg.cycle_length(); ++i) {
        v_hub_classes[c.color(g.edge_id(wg.cycle_vertex(i), wg.v_id()))].push_back(i);
    }
    const auto [a_color, a_members] = largest_class(v_hub_classes);
    if (static_cast<int>(a_members.size()) < margins.ceil_a) {
        throw AuditInconsistency("largest v-hub color class has " + std::to_string(a_members.size())
                                 + " edges, below the pigeonhole bound " + std::to_string(margins.ceil_a));
    }

    // Step 3: pigeonhole over B = { v_j w : v_j v in the class above }.
    std::map<int, std::vector<int>> w_hub_classes;
    for (int i : a_members) {
        w_hub_classes[c.color(g.edge_id(wg.cycle_vertex(i), wg.w_id()))].push_back(i);
    }
    const auto [b_color, b_members] = largest_class(w_hub_classes);
    if (static_cast<int>(b_members.size()) < margins.ceil_b) {
        throw AuditInconsistency("largest w-hub color class has " + std::to_string(b_members.size())
                                 + " edges, below the pigeonhole bound " + std::to_string(margins.ceil_b));
    }

    // Step 4: two of those cycle vertices far apart on the cycle.
    const auto [p1, p2] = separated_pair(b_members, wg.cycle_length());
    const Vertex x1 = wg.cycle_vertex(p1);
    const Vertex x2 = wg.cycle_vertex(p2);

    const auto dag = geodesic_dag(g, x1);
    std::vector<Vertex> middles = dag.predecessors[x2];
    std::sort(middles.begin(), middles.end());
    const std::vector<Vertex> hubs{std::min(wg.w_id(), wg.v_id()), std::max(wg.w_id(), wg.v_id())};
    if (dag.dist[x2] != 2 || middles != hubs) {
        throw AuditInconsistency("v_" + std::to_string(p1) + " and v_" + std::to_string(p2)
                                 + " are not joined exactly by the two hub geodesics");
    }

    AuditTrace trace;
    trace.forced_path_colors = std::move(path_colors);
    trace.margins = margins;
    trace.set_a_class.color = a_color;
    for (int i : a_members) {
        trace.set_a_class.edges.push_back({wg.cycle_vertex(i), wg.v_id()});
    }
    trace.set_b_class.color = b_color;
    for (int i : b_members) {
        trace.set_b_class.edges.push_back({wg.cycle_vertex(i), wg.w_id()});
    }
    trace.chosen_pair = {x1, x2};
    for (Vertex hub : {wg.w_id(), wg.v_id()}) {
        const int first = c.color(g.edge_id(x1, hub));
        const int second = c.color(g.edge_id(hub, x2));
        if (first != second) {
            throw AuditInconsistency("hub geodesic through " + std::to_string(hub) + " is rainbow");
        }
        trace.geodesic_failures.push_back({{x1, hub, x2}, first});
    }
    cross_check_refuted(wg, c, trace.chosen_pair);
    return trace;
}

SampleFamily sample_family(std::size_t index) noexcept
{
    switch (index % 3) {
    case 0:
        return SampleFamily::uniform;
    case 1:
        return SampleFamily::path_respecting;
    default:
        return SampleFamily::merged_src;
    }
}

EdgeColoring sample_subcritical_coloring(const WitnessGraph& wg, SampleFamily family, std::mt19937_64& rng)
{
    const auto& g = wg.graph();
    const int a = wg.params().a;
    const int b = wg.params().b;
    const int palette = b - 1;
    std::uniform_int_distribution<int> any_color(1, palette);
    std::vector<int> colors(g.edge_count());

    switch (family) {
    case SampleFamily::uniform:
        for (int& color : colors) {
            color = any_color(rng);
        }
        break;
    case SampleFamily::path_respecting: {
        for (int& color : colors) {
            color = any_color(rng);
        }
        std::vector<int> order(static_cast<std::size_t>(palette));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        // first a-2 shuffled colors go to the path, the rest feed the v-hub
        for (int j = 1; j <= a - 2; ++j) {
            colors[g.edge_id(wg.path_vertex(j), wg.path_vertex(j + 1))] = order[j - 1];
        }
        std::uniform_int_distribution<int> rest(a - 2, palette - 1);
        for (int i = 1; i <= wg.cycle_length(); ++i) {
            colors[g.edge_id(wg.cycle_vertex(i), wg.v_id())] = order[rest(rng)];
        }
        break;
    }
    case SampleFamily::merged_src: {
        const auto base = src_coloring(wg);
        std::uniform_int_distribution<int> pick(1, b);
        int x = pick(rng);
        int y = pick(rng);
        while (y == x) {
            y = pick(rng);
        }
        if (x > y) {
            std::swap(x, y);
        }
        // y folds into x; colors above y shift down to keep 1..b-1
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const int color = base.color(id);
            colors[id] = color == y ? x : (color > y ? color - 1 : color);
        }
        break;
    }
    }
    return EdgeColoring(palette, std::move(colors));
}

} // namespace rainbow
