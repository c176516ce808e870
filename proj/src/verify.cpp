#include "rainbow/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Dense renumbering of the colors actually used: palette size is irrelevant
// to both predicates.
class ColorIndex {
public:
    ColorIndex(const Graph& g, const EdgeColoring& c)
    {
        c.require_bound_to(g);
        const auto used = used_colors(c);
        std::unordered_map<int, int> slot;
        for (int color : used) {
            slot.emplace(color, static_cast<int>(slot.size()));
        }
        width_ = static_cast<int>(used.size());
        bits_.reserve(g.edge_count());
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            bits_.push_back(slot.at(c.color(id)));
        }
    }

    int width() const noexcept { return width_; }
    int bit(EdgeId id) const noexcept { return bits_[id]; }

private:
    int width_ = 0;
    std::vector<int> bits_;
};

struct NarrowMask {
    std::uint64_t bits = 0;

    static NarrowMask empty(int) { return {}; }
    bool test(int b) const noexcept { return (bits >> b) & 1U; }
    NarrowMask with(int b) const noexcept { return {bits | (std::uint64_t{1} << b)}; }
    std::size_t hash() const noexcept { return std::hash<std::uint64_t>{}(bits * 0x9E3779B97F4A7C15ULL); }
    friend bool operator==(const NarrowMask&, const NarrowMask&) = default;
};

// Used when more than 64 distinct colors appear (e.g. injective colorings).
struct WideMask {
    std::vector<std::uint64_t> words;

    static WideMask empty(int width) { return {std::vector<std::uint64_t>((static_cast<std::size_t>(width) + 63) / 64)}; }
    bool test(int b) const noexcept { return (words[b / 64] >> (b % 64)) & 1U; }
    WideMask with(int b) const
    {
        WideMask copy = *this;
        copy.words[b / 64] |= std::uint64_t{1} << (b % 64);
        return copy;
    }
    std::size_t hash() const noexcept
    {
        std::size_t h = 0;
        for (auto w : words) {
            h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001B3ULL;
        }
        return h;
    }
    friend bool operator==(const WideMask&, const WideMask&) = default;
};

struct MaskHash {
    template <class Mask>
    std::size_t operator()(const Mask& m) const noexcept
    {
        return m.hash();
    }
};

template <class Mask>
struct StateKey {
    Vertex at;
    Mask used;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    template <class Mask>
    std::size_t operator()(const StateKey<Mask>& k) const noexcept
    {
        return k.used.hash() ^ (static_cast<std::size_t>(k.at) * 0xC2B2AE3D27D4EB4FULL);
    }
};

template <class F>
decltype(auto) with_mask_type(int width, F&& f)
{
    if (width <= 64) {
        return f(NarrowMask{});
    }
    return f(WideMask{});
}

// Breadth-first search over (vertex, colors used so far). A rainbow walk
// shortcuts to a rainbow path, so no visited-vertex set is needed, and the
// depth is bounded by the number of colors. The first state reaching a
// vertex lies on a shortest rainbow walk, which is therefore a simple path.
template <class Mask>
class RainbowExplorer {
public:
    RainbowExplorer(const Graph& g, const ColorIndex& colors, Vertex source)
        : g_(g), colors_(colors), first_hit_(static_cast<std::size_t>(g.vertex_count()), npos)
    {
        Mask start = Mask::empty(colors.width());
        states_.push_back({source, start, npos});
        seen_.insert({source, start});
        first_hit_[source] = 0;
    }

    // Explores until every wanted vertex is reached or the space is exhausted.
    void run(const std::vector<char>& wanted)
    {
        auto remaining = static_cast<std::size_t>(std::count(wanted.begin(), wanted.end(), 1));
        for (Vertex t = 0; t < g_.vertex_count(); ++t) {
            if (wanted[t] && first_hit_[t] != npos) {
                --remaining;
            }
        }
        for (std::size_t head = 0; remaining > 0 && head < states_.size(); ++head) {
            const Vertex at = states_[head].at;
            for (const Neighbor& nb : g_.neighbors(at)) {
                const int bit = colors_.bit(nb.edge);
                if (states_[head].used.test(bit)) {
                    continue;
                }
                StateKey<Mask> key{nb.vertex, states_[head].used.with(bit)};
                if (!seen_.insert(key).second) {
                    continue;
                }
                states_.push_back({nb.vertex, std::move(key.used), head});
                if (first_hit_[nb.vertex] == npos) {
                    first_hit_[nb.vertex] = states_.size() - 1;
                    if (wanted[nb.vertex] && --remaining == 0) {
                        return;
                    }
                }
            }
        }
    }

    bool reached(Vertex t) const noexcept { return first_hit_[t] != npos; }

    Path path_to(Vertex t) const
    {
        Path path;
        for (std::size_t s = first_hit_[t]; s != npos; s = states_[s].parent) {
            path.push_back(states_[s].at);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    struct State {
        Vertex at;
        Mask used;
        std::size_t parent;
    };

    const Graph& g_;
    const ColorIndex& colors_;
    std::vector<State> states_;
    std::unordered_set<StateKey<Mask>, StateKeyHash> seen_;
    std::vector<std::size_t> first_hit_;
};

// Dynamic program over the geodesic DAG: for every vertex, the distinct
// color sets of rainbow geodesics from the source ending there.
template <class Mask>
class GeodesicExplorer {
public:
    // With `only_target`, vertices that are not on any source-target
    // geodesic are skipped.
    GeodesicExplorer(const Graph& g, const ColorIndex& colors, const GeodesicDag& dag,
                     std::optional<Vertex> only_target = std::nullopt)
        : entries_(static_cast<std::size_t>(g.vertex_count()))
    {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        std::vector<char> relevant(n, only_target ? 0 : 1);
        if (only_target) {
            std::vector<Vertex> stack{*only_target};
            relevant[*only_target] = 1;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex p : dag.predecessors[x]) {
                    if (!relevant[p]) {
                        relevant[p] = 1;
                        stack.push_back(p);
                    }
                }
            }
        }

        std::vector<Vertex> order;
        for (Vertex t = 0; t < g.vertex_count(); ++t) {
            if (relevant[t]) {
                order.push_back(t);
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](Vertex l, Vertex r) { return dag.dist[l] < dag.dist[r]; });

        entries_[dag.source].push_back({Mask::empty(colors.width()), dag.source, npos});
        for (Vertex t : order) {
            if (t == dag.source) {
                continue;
            }
            std::unordered_set<Mask, MaskHash> seen;
            for (Vertex p : dag.predecessors[t]) {
                if (!relevant[p]) {
                    continue;
                }
                const int bit = colors.bit(g.edge_id(p, t));
                const auto& from = entries_[p];
                for (std::size_t i = 0; i < from.size(); ++i) {
                    if (from[i].used.test(bit)) {
                        continue;
                    }
                    Mask next = from[i].used.with(bit);
                    if (seen.insert(next).second) {
                        entries_[t].push_back({std::move(next), p, i});
                    }
                }
            }
        }
    }

    bool reached(Vertex t) const noexcept { return !entries_[t].empty(); }

    Path path_to(Vertex t) const
    {
        Path path{t};
        std::size_t index = 0;
        Vertex at = t;
        while (entries_[at][index].parent != npos) {
            const Entry& e = entries_[at][index];
            at = e.pred;
            index = e.parent;
            path.push_back(at);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    struct Entry {
        Mask used;
        Vertex pred;
        std::size_t parent;
    };

    std::vector<std::vector<Entry>> entries_;
};

void require_nontrivial(const Graph& g)
{
    if (g.vertex_count() < 2) {
        throw InvalidParameter("rainbow connectivity is defined for graphs with at least two vertices");
    }
}

void require_pair(const Graph& g, Vertex u, Vertex v)
{
    require_nontrivial(g);
    if (!g.contains(u) || !g.contains(v)) {
        throw InvalidParameter("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    if (u == v) {
        throw InvalidParameter("vertex pair must consist of distinct vertices");
    }
}

// Shared pair loop: sources ascending, targets above the source ascending,
// stop at the first failure.
template <class Explore>
VerificationReport check_all_pairs(const Graph& g, Mode mode, VerifyOptions options, Explore&& explore)
{
    VerificationReport report;
    report.mode = mode;
    const int n = g.vertex_count();
    for (Vertex u = 0; u + 1 < n; ++u) {
        const bool ok = explore(u, [&](Vertex v, bool reached, auto&& path_of) {
            ++report.checked_pairs;
            if (!reached) {
                report.violating_pair = VertexPair{u, v};
                return false;
            }
            if (options.collect_paths) {
                report.witness_paths.emplace(VertexPair{u, v}, path_of());
            }
            return true;
        });
        if (!ok) {
            report.passed = false;
            return report;
        }
    }
    report.passed = true;
    return report;
}

} // namespace

std::string_view to_string(Mode mode) noexcept
{
    return mode == Mode::rainbow ? "rainbow" : "strong";
}

std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v)
{
    require_pair(g, u, v);
    const ColorIndex colors(g, c);
    return with_mask_type(colors.width(), [&](auto tag) -> std::optional<Path> {
        using Mask = decltype(tag);
        RainbowExplorer<Mask> explorer(g, colors, u);
        std::vector<char> wanted(static_cast<std::size_t>(g.vertex_count()), 0);
        wanted[v] = 1;
        explorer.run(wanted);
        if (!explorer.reached(v)) {
            return std::nullopt;
        }
        return explorer.path_to(v);
    });
}

std::optional<Path> exists_rainbow_geodesic(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v)
{
    require_pair(g, u, v);
    const ColorIndex colors(g, c);
    const auto dag = geodesic_dag(g, u);
    return with_mask_type(colors.width(), [&](auto tag) -> std::optional<Path> {
        using Mask = decltype(tag);
        GeodesicExplorer<Mask> explorer(g, colors, dag, v);
        if (!explorer.reached(v)) {
            return std::nullopt;
        }
        return explorer.path_to(v);
    });
}

VerificationReport is_rainbow_connected(const Graph& g, const EdgeColoring& c, VerifyOptions options)
{
    require_nontrivial(g);
    const ColorIndex colors(g, c);
    return with_mask_type(colors.width(), [&](auto tag) {
        using Mask = decltype(tag);
        return check_all_pairs(g, Mode::rainbow, options, [&](Vertex u, auto&& visit) {
            RainbowExplorer<Mask> explorer(g, colors, u);
            std::vector<char> wanted(static_cast<std::size_t>(g.vertex_count()), 0);
            std::fill(wanted.begin() + u + 1, wanted.end(), 1);
            explorer.run(wanted);
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                if (!visit(v, explorer.reached(v), [&] { return explorer.path_to(v); })) {
                    return false;
                }
            }
            return true;
        });
    });
}

VerificationReport is_strong_rainbow_connected(const Graph& g, const EdgeColoring& c, VerifyOptions options)
{
    require_nontrivial(g);
    const ColorIndex colors(g, c);
    return with_mask_type(colors.width(), [&](auto tag) {
        using Mask = decltype(tag);
        return check_all_pairs(g, Mode::strong, options, [&](Vertex u, auto&& visit) {
            const auto dag = geodesic_dag(g, u);
            GeodesicExplorer<Mask> explorer(g, colors, dag);
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                if (!visit(v, explorer.reached(v), [&] { return explorer.path_to(v); })) {
                    return false;
                }
            }
            return true;
        });
    });
}

VerificationReport verify(const Graph& g, const EdgeColoring& c, Mode mode, VerifyOptions options)
{
    return mode == Mode::rainbow ? is_rainbow_connected(g, c, options) : is_strong_rainbow_connected(g, c, options);
}

bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const Path& path)
{
    c.require_bound_to(g);
    if (path.empty()) {
        return false;
    }
    std::set<Vertex> vertices;
    std::set<int> colors;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.contains(path[i]) || !vertices.insert(path[i]).second) {
            return false;
        }
        if (i > 0) {
            const EdgeId id = g.find_edge(path[i - 1], path[i]);
            if (id == g.edge_count() || !colors.insert(c.color(id)).second) {
                return false;
            }
        }
    }
    return true;
}

} // namespace rainbow
