#include "rainbow/witness.hpp"

#include <stdexcept>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void check_params(const WitnessParams& p)
{
    if (p.a < 3 || p.b < p.a) {
        throw InvalidParameter("witness construction requires 3 <= a <= b, got a=" + std::to_string(p.a)
                               + ", b=" + std::to_string(p.b)
                               + " (a = b in {1, 2} is covered by build_small_witness)");
    }
}

} // namespace

int witness_cycle_length(const WitnessParams& params)
{
    check_params(params);
    return 3 * params.b * (params.b - params.a + 2);
}

WitnessGraph::WitnessGraph(Graph graph, WitnessParams params, int n)
    : graph_(std::move(graph)), params_(params), n_(n), w_id_(n), v_id_(n + 1)
{
    cycle_ids_.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        cycle_ids_.push_back(i - 1);
    }
    for (int j = 1; j <= params.a - 2; ++j) {
        path_ids_.push_back(n + params.a - j);
    }
}

Vertex WitnessGraph::cycle_vertex(int i) const
{
    if (i < 1 || i > n_) {
        throw InvalidParameter("cycle label v_" + std::to_string(i) + " out of range 1.." + std::to_string(n_));
    }
    return i - 1;
}

Vertex WitnessGraph::path_vertex(int j) const
{
    if (j < 1 || j > params_.a - 1) {
        throw InvalidParameter("path label u_" + std::to_string(j) + " out of range 1.."
                               + std::to_string(params_.a - 1));
    }
    return j == params_.a - 1 ? v_id_ : n_ + params_.a - j;
}

int WitnessGraph::cycle_position(Vertex x) const noexcept
{
    return x >= 0 && x < n_ ? x + 1 : 0;
}

EdgeRole WitnessGraph::classify(EdgeId id) const
{
    const Edge& e = graph_.edge(id);
    if (e.v < n_) {
        if (e.v == e.u + 1) {
            return {EdgeFamily::cycle, e.u + 1};
        }
        if (e.u == 0 && e.v == n_ - 1) {
            return {EdgeFamily::closing, n_};
        }
    } else if (e.u < n_) {
        if (e.v == w_id_) {
            return {EdgeFamily::w_hub, e.u + 1};
        }
        if (e.v == v_id_) {
            return {EdgeFamily::v_hub, e.u + 1};
        }
    } else if (e.u == v_id_ && e.v == n_ + 2) {
        // u_{a-2} u_{a-1}
        return {EdgeFamily::path, params_.a - 2};
    } else if (e.u > v_id_ && e.v == e.u + 1) {
        // ids descend along the path: u_j = n + a - j
        return {EdgeFamily::path, n_ + params_.a - e.v};
    }
    throw std::logic_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v)
                           + ") fits no witness edge family");
}

WitnessGraph build_witness(const WitnessParams& params)
{
    const int n = witness_cycle_length(params);
    const Vertex w = n;
    const Vertex v = n + 1;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * n + params.a - 2));
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({i, w});
        edges.push_back({i, v});
    }
    // u_{a-1} = v, u_{a-2} = n + 2, ..., u_1 = n + a - 1
    Vertex previous = v;
    for (int j = params.a - 2; j >= 1; --j) {
        Vertex u = n + params.a - j;
        edges.push_back({previous, u});
        previous = u;
    }
    return WitnessGraph(Graph::from_pairs(n + params.a, std::move(edges)), params, n);
}

Graph build_small_witness(int t)
{
    switch (t) {
    case 1:
        return build_complete(3);
    case 2:
        return build_cycle(4);
    default:
        throw InvalidParameter("small witness exists only for t in {1, 2}, got " + std::to_string(t));
    }
}

} // namespace rainbow
