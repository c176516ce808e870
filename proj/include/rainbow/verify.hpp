#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class Mode { rainbow, strong };

std::string_view to_string(Mode mode) noexcept;

using VertexPair = std::pair<Vertex, Vertex>;

struct VerificationReport {
    Mode mode = Mode::rainbow;
    bool passed = false;
    /// Lexicographically first pair (u < v) without a rainbow path/geodesic.
    std::optional<VertexPair> violating_pair;
    /// Pairs examined, including the violating one. C(n, 2) on success.
    std::uint64_t checked_pairs = 0;
    /// One certificate path per pair; filled only when requested.
    std::map<VertexPair, Path> witness_paths;
};

struct VerifyOptions {
    bool collect_paths = false;
};

/// A shortest rainbow u-v path (fewest edges among rainbow paths), if any.
std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

/// A u-v geodesic with pairwise distinct colors, if any.
std::optional<Path> exists_rainbow_geodesic(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

VerificationReport is_rainbow_connected(const Graph& g, const EdgeColoring& c, VerifyOptions options = {});

VerificationReport is_strong_rainbow_connected(const Graph& g, const EdgeColoring& c, VerifyOptions options = {});

VerificationReport verify(const Graph& g, const EdgeColoring& c, Mode mode, VerifyOptions options = {});

/// True iff consecutive vertices of `path` are adjacent, no vertex repeats,
/// and the traversed edges carry pairwise distinct colors.
bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const Path& path);

} // namespace rainbow
