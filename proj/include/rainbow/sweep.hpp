#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rainbow/audit.hpp"
#include "rainbow/io.hpp"
#include "rainbow/witness.hpp"

namespace rainbow {

/// Every check of the witness grid for one (a, b).
struct GridPointResult {
    WitnessParams params{};
    int cycle_length = 0;
    int vertex_count = 0;
    std::size_t edge_count = 0;
    int diameter = 0;
    bool rc_passed = false;
    int rc_colors = 0;
    bool src_passed = false;
    int src_colors = 0;
    PigeonholeMargins margins{};
    std::size_t samples = 0;
    /// Sampled colorings whose emitted pair independently failed the geodesic check.
    std::size_t refuted = 0;
    std::size_t early_refutations = 0;

    /// diam = a, rc coloring with a colors, src coloring with b colors, and
    /// every sample refuted.
    bool ok() const noexcept;
};

struct SweepReport {
    std::uint64_t seed = 0;
    std::vector<GridPointResult> points;

    bool all_passed() const noexcept;
};

/// Checks one grid point; samples are drawn from a generator seeded by
/// (seed, a, b), so results do not depend on which other points run.
GridPointResult check_grid_point(const WitnessParams& params, std::uint64_t seed, std::size_t samples);

/// All 3 <= a <= b with a <= a_max and b <= b_max.
SweepReport run_sweep(int a_max, int b_max, std::uint64_t seed, std::size_t samples);

json to_json(const GridPointResult& point);
json to_json(const SweepReport& report);

} // namespace rainbow
