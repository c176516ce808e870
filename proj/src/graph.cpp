#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void validate_canonical(int vertex_count, const std::vector<Edge>& edges)
{
    if (vertex_count < 1) {
        throw InvalidParameter("graph must have at least one vertex, got " + std::to_string(vertex_count));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.v >= vertex_count || e.u >= vertex_count || e.v < 0) {
            throw InvalidParameter("edge " + std::to_string(i) + " has an endpoint outside 0.."
                                   + std::to_string(vertex_count - 1));
        }
        if (e.u >= e.v) {
            throw InvalidParameter("edge " + std::to_string(i) + " is not oriented u < v (loop or reversed pair)");
        }
        if (i > 0 && !(edges[i - 1] < e)) {
            throw InvalidParameter("edge list is not strictly increasing at index " + std::to_string(i));
        }
    }
}

} // namespace

bool is_connected(int vertex_count, std::span<const Edge> edges)
{
    if (vertex_count <= 1) {
        return vertex_count == 1;
    }
    std::vector<int> parent(static_cast<std::size_t>(vertex_count));
    for (int i = 0; i < vertex_count; ++i) {
        parent[i] = i;
    }
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = vertex_count;
    for (const Edge& e : edges) {
        int ru = find(e.u);
        int rv = find(e.v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components == 1;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges))
{
    validate_canonical(vertex_count_, edges_);
    if (!is_connected(vertex_count_, edges_)) {
        throw InvalidParameter("graph is disconnected");
    }

    std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count_), 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (int x = 0; x < vertex_count_; ++x) {
        offsets_[x + 1] = offsets_[x] + degree[x];
    }
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adjacency_[fill[e.u]++] = {e.v, id};
        adjacency_[fill[e.v]++] = {e.u, id};
    }
    for (int x = 0; x < vertex_count_; ++x) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x + 1]),
                  [](const Neighbor& l, const Neighbor& r) { return l.vertex < r.vertex; });
    }
}

Graph Graph::from_pairs(int vertex_count, std::vector<Edge> edges)
{
    for (Edge& e : edges) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges.begin(), edges.end());
    return Graph(vertex_count, std::move(edges));
}

std::span<const Neighbor> Graph::neighbors(Vertex x) const
{
    if (!contains(x)) {
        throw InvalidParameter("vertex " + std::to_string(x) + " out of range");
    }
    return {adjacency_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
}

EdgeId Graph::find_edge(Vertex x, Vertex y) const noexcept
{
    Edge key = x < y ? Edge{x, y} : Edge{y, x};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return edges_.size();
    }
    return static_cast<EdgeId>(it - edges_.begin());
}

EdgeId Graph::edge_id(Vertex x, Vertex y) const
{
    EdgeId id = find_edge(x, y);
    if (id == edges_.size()) {
        throw InvalidParameter("no edge between " + std::to_string(x) + " and " + std::to_string(y));
    }
    return id;
}

Graph build_cycle(int n)
{
    if (n < 3) {
        throw InvalidParameter("cycle needs n >= 3, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return Graph::from_pairs(n, std::move(edges));
}

Graph build_path(int n)
{
    if (n < 1) {
        throw InvalidParameter("path needs n >= 1, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, std::move(edges));
}

Graph build_complete(int n)
{
    if (n < 1) {
        throw InvalidParameter("complete graph needs n >= 1, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

Graph build_star(int leaves)
{
    if (leaves < 1) {
        throw InvalidParameter("star needs at least one leaf, got " + std::to_string(leaves));
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.push_back({0, i});
    }
    return Graph(leaves + 1, std::move(edges));
}

DistanceTable bfs_distances(const Graph& g, Vertex source)
{
    if (!g.contains(source)) {
        throw InvalidParameter("BFS source " + std::to_string(source) + " out of range");
    }
    DistanceTable table{source, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1)};
    std::deque<Vertex> queue{source};
    table.dist[source] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.neighbors(x)) {
            if (table.dist[nb.vertex] < 0) {
                table.dist[nb.vertex] = table.dist[x] + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    return table;
}

int diameter(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto table = bfs_distances(g, s);
        best = std::max(best, *std::max_element(table.dist.begin(), table.dist.end()));
    }
    return best;
}

GeodesicDag geodesic_dag(const Graph& g, Vertex source)
{
    auto table = bfs_distances(g, source);
    GeodesicDag dag{source, std::move(table.dist), {}};
    dag.predecessors.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
        for (const Neighbor& nb : g.neighbors(t)) {
            if (dag.dist[nb.vertex] == dag.dist[t] - 1) {
                dag.predecessors[t].push_back(nb.vertex);
            }
        }
    }
    return dag;
}

std::uint64_t GeodesicDag::count_geodesics(Vertex target) const
{
    const auto n = dist.size();
    if (target < 0 || static_cast<std::size_t>(target) >= n) {
        throw InvalidParameter("geodesic target " + std::to_string(target) + " out of range");
    }
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<Vertex>(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex l, Vertex r) { return dist[l] < dist[r]; });
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> count(n, 0);
    count[source] = 1;
    for (Vertex t : order) {
        for (Vertex p : predecessors[t]) {
            count[t] = count[p] > cap - count[t] ? cap : count[t] + count[p];
        }
    }
    return count[target];
}

std::vector<Path> GeodesicDag::geodesics(Vertex target) const
{
    if (target < 0 || static_cast<std::size_t>(target) >= dist.size()) {
        throw InvalidParameter("geodesic target " + std::to_string(target) + " out of range");
    }
    std::vector<Path> out;
    Path reversed{target};
    // Walk predecessor sets back to the source.
    auto walk = [&](auto&& self, Vertex at) -> void {
        if (at == source) {
            out.emplace_back(reversed.rbegin(), reversed.rend());
            return;
        }
        for (Vertex p : predecessors[at]) {
            reversed.push_back(p);
            self(self, p);
            reversed.pop_back();
        }
    };
    walk(walk, target);
    return out;
}

} // namespace rainbow
