#include "rainbow/solver.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

CanonicalColorings::CanonicalColorings(std::size_t edge_count, int colors) : m_(edge_count), k_(colors)
{
    if (k_ < 1 || m_ < 1 || static_cast<std::size_t>(k_) > m_) {
        done_ = true;
        return;
    }
    // Lexicographically smallest: 1, ..., 1, 2, 3, ..., k.
    colors_.assign(m_, 1);
    for (int c = 2; c <= k_; ++c) {
        colors_[m_ - static_cast<std::size_t>(k_ - c) - 1] = c;
    }
}

bool CanonicalColorings::next()
{
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        return true;
    }
    if (!advance()) {
        done_ = true;
        return false;
    }
    return true;
}

bool CanonicalColorings::advance()
{
    std::vector<int> prefix_max(m_);
    prefix_max[0] = colors_[0];
    for (std::size_t i = 1; i < m_; ++i) {
        prefix_max[i] = std::max(prefix_max[i - 1], colors_[i]);
    }
    for (std::size_t i = m_ - 1; i >= 1; --i) {
        const int limit = std::min(k_, prefix_max[i - 1] + 1);
        for (int value = colors_[i] + 1; value <= limit; ++value) {
            const int top = std::max(prefix_max[i - 1], value);
            const std::size_t slots = m_ - 1 - i;
            const auto missing = static_cast<std::size_t>(k_ - top);
            if (slots < missing) {
                continue;
            }
            colors_[i] = value;
            // Smallest completion: 1s, then the missing colors in order.
            std::size_t j = i + 1;
            for (; j < m_ - missing; ++j) {
                colors_[j] = 1;
            }
            for (int c = top + 1; j < m_; ++j, ++c) {
                colors_[j] = c;
            }
            return true;
        }
    }
    return false;
}

std::vector<EdgeColoring> canonical_colorings(std::size_t edge_count, int colors)
{
    std::vector<EdgeColoring> out;
    CanonicalColorings gen(edge_count, colors);
    while (gen.next()) {
        out.push_back(gen.coloring());
    }
    return out;
}

std::string_view to_string(SolveKind kind) noexcept
{
    return kind == SolveKind::rc ? "rc" : "src";
}

Bounds bounds(const Graph& g)
{
    return {diameter(g), static_cast<int>(g.edge_count())};
}

SolveResult solve_exact(const Graph& g, SolveKind kind, SolveOptions options)
{
    if (g.vertex_count() < 2) {
        throw InvalidParameter("rc and src are defined for graphs with at least two vertices");
    }
    if (g.edge_count() > options.max_edges) {
        throw SizeLimitError("graph has " + std::to_string(g.edge_count()) + " edges; the exact solver is limited to "
                             + std::to_string(options.max_edges));
    }
    const Bounds range = bounds(g);
    const int upper = std::min(options.k_max.value_or(range.upper), range.upper);
    const Mode mode = kind == SolveKind::rc ? Mode::rainbow : Mode::strong;

    std::uint64_t tested = 0;
    for (int k = range.lower; k <= upper; ++k) {
        CanonicalColorings gen(g.edge_count(), k);
        while (gen.next()) {
            ++tested;
            // Per-coloring boundary: a partial-assignment pruning rule would
            // hook in here before the full verification.
            EdgeColoring candidate = gen.coloring();
            if (verify(g, candidate, mode).passed) {
                return {kind, k, std::move(candidate), tested, range.lower};
            }
        }
    }
    throw BoundTooSmall("no " + std::string(to_string(kind)) + " coloring with at most "
                        + std::to_string(upper) + " colors (lower bound " + std::to_string(range.lower) + ")");
}

SolveResult rc_exact(const Graph& g, SolveOptions options)
{
    return solve_exact(g, SolveKind::rc, options);
}

SolveResult src_exact(const Graph& g, SolveOptions options)
{
    return solve_exact(g, SolveKind::src, options);
}

} // namespace rainbow
