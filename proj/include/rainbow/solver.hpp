#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Streams the surjective colorings of m edges onto exactly k colors, one
/// per color-permutation class, as restricted-growth sequences in
/// lexicographic order: edge 0 gets color 1 and every later edge gets at
/// most one more than the largest color before it.
///
///     CanonicalColorings gen(m, k);
///     while (gen.next()) use(gen.current());
class CanonicalColorings {
public:
    CanonicalColorings(std::size_t edge_count, int colors);

    /// Advances to the next coloring; false once the stream is exhausted.
    bool next();

    /// Colors (1-based) of the current coloring.
    std::span<const int> current() const noexcept { return colors_; }

    EdgeColoring coloring() const { return EdgeColoring(k_, colors_); }

private:
    bool advance();

    std::size_t m_;
    int k_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> colors_;
};

/// Collects the whole stream; for tests and small inputs.
std::vector<EdgeColoring> canonical_colorings(std::size_t edge_count, int colors);

enum class SolveKind { rc, src };

std::string_view to_string(SolveKind kind) noexcept;

struct SolveResult {
    SolveKind kind;
    int value;
    EdgeColoring certificate;
    std::uint64_t colorings_tested;
    int lower_bound_used;
};

inline constexpr std::size_t default_max_edges = 16;

struct SolveOptions {
    /// Largest palette to try; defaults to the edge count.
    std::optional<int> k_max;
    /// Graphs with more edges are refused with SizeLimitError.
    std::size_t max_edges = default_max_edges;
};

struct Bounds {
    int lower;
    int upper;
};

/// diam(G) <= rc(G) <= src(G) <= |E(G)|.
Bounds bounds(const Graph& g);

SolveResult rc_exact(const Graph& g, SolveOptions options = {});
SolveResult src_exact(const Graph& g, SolveOptions options = {});
SolveResult solve_exact(const Graph& g, SolveKind kind, SolveOptions options = {});

} // namespace rainbow
