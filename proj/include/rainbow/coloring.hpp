#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/witness.hpp"

namespace rainbow {

/// Colors in 1..k, one per edge id of the graph the coloring was made for.
///
/// palette_size is only an upper bound; the verifier and the solver care
/// about the colors actually used.
class EdgeColoring {
public:
    /// Throws InvalidParameter if k < 1 or a color is outside 1..k.
    EdgeColoring(int palette_size, std::vector<int> colors);

    static EdgeColoring constant(std::size_t edge_count, int color = 1);
    /// Edge i gets color i + 1.
    static EdgeColoring injective(std::size_t edge_count);

    int palette_size() const noexcept { return palette_size_; }
    std::size_t edge_count() const noexcept { return colors_.size(); }
    int color(EdgeId id) const { return colors_.at(id); }
    std::span<const int> colors() const noexcept { return colors_; }

    /// Throws BindingError unless the coloring has one entry per edge of g.
    void require_bound_to(const Graph& g) const;

    /// Applies `mapping[c - 1]` to every color c. The new palette size is
    /// the largest image.
    EdgeColoring relabeled(std::span<const int> mapping) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int palette_size_;
    std::vector<int> colors_;
};

std::set<int> used_colors(const EdgeColoring& c);

/// True iff at most `limit` distinct colors are used.
bool restrict_palette_check(const EdgeColoring& c, int limit);

/// Rainbow a-coloring of G(a, b): path edge u_i u_{i+1} -> i, v_i v -> a-1
/// for odd i and a for even i, v_i w -> a, cycle edges -> 1.
EdgeColoring rc_coloring(const WitnessGraph& wg);

/// Strong rainbow b-coloring of G(a, b).
///
/// Path edges u_i u_{i+1} -> i. The v-hub edges are split into b - a + 2
/// runs of 3b consecutive cycle vertices; run i gets color a - 2 + i. The
/// w-hub edges cycle through colors 1..b in runs of three, restarting at
/// every multiple of 3b. Cycle edges follow 1, 2, 3 per consecutive triple,
/// with v_{3t} v_{3t+1} and the closing edge v_n v_1 colored 3.
EdgeColoring src_coloring(const WitnessGraph& wg);

} // namespace rainbow
