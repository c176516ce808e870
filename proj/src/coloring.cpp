#include "rainbow/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

EdgeColoring::EdgeColoring(int palette_size, std::vector<int> colors)
    : palette_size_(palette_size), colors_(std::move(colors))
{
    if (palette_size_ < 1) {
        throw InvalidParameter("palette size must be positive, got " + std::to_string(palette_size_));
    }
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > palette_size_) {
            throw InvalidParameter("color " + std::to_string(colors_[i]) + " of edge " + std::to_string(i)
                                   + " outside 1.." + std::to_string(palette_size_));
        }
    }
}

EdgeColoring EdgeColoring::constant(std::size_t edge_count, int color)
{
    return EdgeColoring(color, std::vector<int>(edge_count, color));
}

EdgeColoring EdgeColoring::injective(std::size_t edge_count)
{
    std::vector<int> colors(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        colors[i] = static_cast<int>(i) + 1;
    }
    return EdgeColoring(std::max(1, static_cast<int>(edge_count)), std::move(colors));
}

void EdgeColoring::require_bound_to(const Graph& g) const
{
    if (colors_.size() != g.edge_count()) {
        throw BindingError("coloring has " + std::to_string(colors_.size()) + " entries but the graph has "
                           + std::to_string(g.edge_count()) + " edges");
    }
}

EdgeColoring EdgeColoring::relabeled(std::span<const int> mapping) const
{
    std::vector<int> out(colors_.size());
    int top = 1;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        const auto c = static_cast<std::size_t>(colors_[i]);
        if (c > mapping.size()) {
            throw InvalidParameter("relabeling has no image for color " + std::to_string(c));
        }
        out[i] = mapping[c - 1];
        top = std::max(top, out[i]);
    }
    return EdgeColoring(top, std::move(out));
}

std::set<int> used_colors(const EdgeColoring& c)
{
    return {c.colors().begin(), c.colors().end()};
}

bool restrict_palette_check(const EdgeColoring& c, int limit)
{
    return static_cast<int>(used_colors(c).size()) <= limit;
}

EdgeColoring rc_coloring(const WitnessGraph& wg)
{
    const int a = wg.params().a;
    const auto& g = wg.graph();
    std::vector<int> colors(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const EdgeRole role = wg.classify(id);
        switch (role.family) {
        case EdgeFamily::path:
            colors[id] = role.index;
            break;
        case EdgeFamily::v_hub:
            colors[id] = role.index % 2 == 1 ? a - 1 : a;
            break;
        case EdgeFamily::w_hub:
            colors[id] = a;
            break;
        case EdgeFamily::cycle:
        case EdgeFamily::closing:
            // the "otherwise" bucket: must be exactly the cycle edges
            colors[id] = 1;
            break;
        }
    }
    return EdgeColoring(a, std::move(colors));
}

EdgeColoring src_coloring(const WitnessGraph& wg)
{
    const int a = wg.params().a;
    const int b = wg.params().b;
    const int n = wg.cycle_length();
    if (n % (3 * b) != 0) {
        throw std::logic_error("cycle length " + std::to_string(n) + " is not a multiple of 3b");
    }
    const auto& g = wg.graph();
    std::vector<int> colors(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const EdgeRole role = wg.classify(id);
        const int i0 = role.index - 1;
        switch (role.family) {
        case EdgeFamily::path:
            colors[id] = role.index;
            break;
        case EdgeFamily::v_hub:
            colors[id] = a - 1 + i0 / (3 * b);
            break;
        case EdgeFamily::w_hub:
            colors[id] = (i0 % (3 * b)) / 3 + 1;
            break;
        case EdgeFamily::cycle:
            colors[id] = i0 % 3 + 1;
            break;
        case EdgeFamily::closing:
            colors[id] = 3;
            break;
        }
    }
    return EdgeColoring(b, std::move(colors));
}

} // namespace rainbow
