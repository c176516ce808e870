#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Target pair (rc, src) for the witness construction; requires 3 <= a <= b.
struct WitnessParams {
    int a;
    int b;

    friend bool operator==(const WitnessParams&, const WitnessParams&) = default;
};

/// Cycle length of the witness for (a, b): 3b(b - a + 2).
int witness_cycle_length(const WitnessParams& params);

/// Which structural family an edge of a witness graph belongs to.
///
/// Indices are 1-based to line up with the construction's labels: for
/// `cycle` the edge is v_i v_{i+1} (i < n), for `closing` it is v_n v_1,
/// for hub edges it is v_i, and for `path` it is u_i u_{i+1} with
/// u_{a-1} being the hub v.
enum class EdgeFamily { path, v_hub, w_hub, cycle, closing };

struct EdgeRole {
    EdgeFamily family;
    int index;
};

/// The cycle C_n with two universal hubs w and v plus a pendant path of
/// a - 2 extra vertices hanging off v.
///
/// Vertex ids: v_i -> i - 1, w -> n, v -> n + 1, u_j -> n + a - j for
/// j = 1..a-2 (so u_{a-2} = n + 2 sits next to v).
class WitnessGraph {
public:
    const Graph& graph() const noexcept { return graph_; }
    const WitnessParams& params() const noexcept { return params_; }
    int cycle_length() const noexcept { return n_; }

    const std::vector<Vertex>& cycle_ids() const noexcept { return cycle_ids_; }
    Vertex w_id() const noexcept { return w_id_; }
    Vertex v_id() const noexcept { return v_id_; }
    /// u_1..u_{a-2}, in that order.
    const std::vector<Vertex>& path_ids() const noexcept { return path_ids_; }

    /// Id of v_i, 1 <= i <= n.
    Vertex cycle_vertex(int i) const;
    /// Id of u_j, 1 <= j <= a - 1 (u_{a-1} is v).
    Vertex path_vertex(int j) const;
    /// Position i (1-based) of a cycle vertex id, or 0 if the id is not on the cycle.
    int cycle_position(Vertex x) const noexcept;

    /// Classifies every edge; throws std::logic_error if an edge fits no
    /// family (which would mean the labels and the graph disagree).
    EdgeRole classify(EdgeId id) const;

    friend WitnessGraph build_witness(const WitnessParams& params);

private:
    WitnessGraph(Graph graph, WitnessParams params, int n);

    Graph graph_;
    WitnessParams params_;
    int n_;
    std::vector<Vertex> cycle_ids_;
    Vertex w_id_;
    Vertex v_id_;
    std::vector<Vertex> path_ids_;
};

WitnessGraph build_witness(const WitnessParams& params);

/// Representatives for rc = src = t with t in {1, 2}: K_3 and C_4.
Graph build_small_witness(int t);

} // namespace rainbow
