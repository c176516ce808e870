#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/witness.hpp"

namespace rainbow {

/// Pigeonhole bounds of the src >= b argument for G(a, b).
struct PigeonholeMargins {
    /// ceil(n / (b - a + 1)): guaranteed size of the largest v-hub color class.
    int ceil_a;
    /// ceil((3b + 1) / (b - 1)): guaranteed size of the largest w-hub class
    /// among the endpoints of that v-hub class.
    int ceil_b;
};

/// Throws ArithmeticInconsistency if ceil_a < 3b + 1 or ceil_b < 4.
PigeonholeMargins pigeonhole_margins(const WitnessParams& params);

/// Minimal distance between positions i and j on a cycle of length n.
int cyclic_distance(int i, int j, int n);

/// Lexicographically first pair (i < j) of positions with cyclic distance
/// greater than 3. Requires at least 4 distinct positions and n >= 18;
/// throws InvalidParameter otherwise or when no such pair exists.
std::pair<int, int> separated_pair(const std::vector<int>& positions, int n);

/// A set of hub edges sharing one color.
struct ColorClass {
    int color;
    std::vector<Edge> edges;
};

/// One of the two hub geodesics between the chosen pair, with the color
/// its two edges share.
struct GeodesicFailure {
    Path path;
    int repeated_color;
};

/// Full replay of the pigeonhole argument.
struct AuditTrace {
    /// Colors of u_1 u_2, ..., u_{a-2} u_{a-1}.
    std::vector<int> forced_path_colors;
    PigeonholeMargins margins;
    /// Largest v-hub color class (size >= ceil_a >= 3b + 1).
    ColorClass set_a_class;
    /// Largest w-hub color class over the endpoints of set_a_class (size >= 4).
    ColorClass set_b_class;
    /// Cycle vertices at cycle distance > 3, hence graph distance 2.
    VertexPair chosen_pair;
    std::vector<GeodesicFailure> geodesic_failures;
};

/// Step 1 failed: the unique geodesic from a cycle vertex to u_1 (through v
/// and the pendant path) is not rainbow.
struct EarlyRefutation {
    VertexPair pair;
    Path geodesic;
    /// A color appearing twice on the geodesic.
    int repeated_color;
};

using AuditOutcome = std::variant<EarlyRefutation, AuditTrace>;

/// The pair the outcome proves has no rainbow geodesic.
VertexPair refuted_pair(const AuditOutcome& outcome);

/// Replays the lower-bound argument on a coloring of G(a, b) with at most
/// b - 1 colors and returns a concrete pair with no rainbow geodesic.
///
/// Throws InvalidParameter if the coloring uses b or more colors, and
/// AuditInconsistency if the emitted pair turns out to have a rainbow
/// geodesic after all.
AuditOutcome audit_lower_bound(const WitnessGraph& wg, const EdgeColoring& c);

/// How a sampled sub-critical coloring was generated.
enum class SampleFamily {
    /// Every edge uniform over 1..b-1.
    uniform,
    /// Path edges get distinct colors and v-hub edges avoid them, so the
    /// audit must go through the pigeonhole steps.
    path_respecting,
    /// src_coloring with two of its colors merged.
    merged_src,
};

/// Pseudorandom coloring of G(a, b) using at most b - 1 colors.
EdgeColoring sample_subcritical_coloring(const WitnessGraph& wg, SampleFamily family, std::mt19937_64& rng);

/// Family used for the i-th sample of a sweep (round robin).
SampleFamily sample_family(std::size_t index) noexcept;

} // namespace rainbow
