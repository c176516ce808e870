#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = int;
using EdgeId = std::size_t;
using Path = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex;
    EdgeId edge;
};

/// Undirected simple connected graph on vertices 0..n-1.
///
/// The edge list is kept in canonical form: every edge has u < v and the
/// list is strictly increasing in lexicographic order. An edge's position
/// in that list is its identity everywhere else in the library (colorings
/// are indexed by it).
class Graph {
public:
    /// Validates canonical order and connectivity; throws InvalidParameter
    /// on any violation. Nothing is normalized.
    Graph(int vertex_count, std::vector<Edge> edges);

    /// Sorts and orients the given pairs before validating. Duplicates and
    /// loops are still rejected.
    static Graph from_pairs(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    std::span<const Neighbor> neighbors(Vertex x) const;
    int degree(Vertex x) const { return static_cast<int>(neighbors(x).size()); }

    /// Index of edge {x, y} in the canonical list, or edge_count() if absent.
    EdgeId find_edge(Vertex x, Vertex y) const noexcept;
    bool has_edge(Vertex x, Vertex y) const noexcept { return find_edge(x, y) != edge_count(); }

    /// Edge id of {x, y}; throws InvalidParameter if the edge is absent.
    EdgeId edge_id(Vertex x, Vertex y) const;

    bool contains(Vertex x) const noexcept { return x >= 0 && x < vertex_count_; }

    friend bool operator==(const Graph& lhs, const Graph& rhs) noexcept
    {
        return lhs.vertex_count_ == rhs.vertex_count_ && lhs.edges_ == rhs.edges_;
    }

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    // CSR adjacency
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
};

/// True if the (not necessarily canonical) edge set spans a connected graph.
/// Endpoints must already be in range.
bool is_connected(int vertex_count, std::span<const Edge> edges);

Graph build_cycle(int n);
Graph build_path(int n);
Graph build_complete(int n);
/// K_{1,leaves}, center 0.
Graph build_star(int leaves);

struct DistanceTable {
    Vertex source;
    std::vector<int> dist;
};

DistanceTable bfs_distances(const Graph& g, Vertex source);

int diameter(const Graph& g);

/// Shortest-path DAG rooted at a source: for every vertex t, the neighbors
/// one step closer to the source. Every source-to-t walk through the
/// predecessor sets is a geodesic and every geodesic appears.
struct GeodesicDag {
    Vertex source;
    std::vector<int> dist;
    std::vector<std::vector<Vertex>> predecessors;

    /// Number of distinct geodesics from source to target (saturating at
    /// UINT64_MAX).
    std::uint64_t count_geodesics(Vertex target) const;

    /// Every geodesic from source to target, each listed source first.
    /// Intended for small graphs or targets with few geodesics.
    std::vector<Path> geodesics(Vertex target) const;
};

GeodesicDag geodesic_dag(const Graph& g, Vertex source);

} // namespace rainbow
