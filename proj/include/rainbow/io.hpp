#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/audit.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/witness.hpp"

namespace rainbow {

using json = nlohmann::json;

// Graph: {"n": N, "edges": [[u, v], ...]}, canonical order required on load.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Witness: the graph format plus
// "labels": {"cycle": [...], "w": id, "v": id, "path": [...], "a": a, "b": b, "cycle_n": n}.
json to_json(const WitnessGraph& wg);
bool has_witness_labels(const json& j);
/// Rebuilds G(a, b) from the labels and requires the stored graph and
/// labels to match it exactly.
WitnessGraph witness_from_json(const json& j);

// Coloring: {"k": k, "colors": [...]}.
json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const json& j);

// {"mode": "rainbow"|"strong", "passed": bool, "violating_pair": [u, v]|null, "checked_pairs": int}
json to_json(const VerificationReport& report);

// {"kind": "rc"|"src", "value": int, "certificate": <coloring>, "colorings_tested": int, "lower_bound_used": int}
json to_json(const SolveResult& result);

json to_json(const AuditOutcome& outcome);

/// Compact serialization with a trailing newline. Keys are sorted, so equal
/// values always produce identical bytes.
std::string canonical_dump(const json& j);

/// Throws ParseError if the file cannot be read or is not JSON.
json read_json_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Human-readable names for witness vertices: v1..vn, w, v, u1..u{a-2}.
std::vector<std::string> witness_vertex_names(const WitnessGraph& wg);

/// Graphviz rendering. With a coloring, every edge carries label="<color>"
/// and a pen color from a fixed 12-entry palette cycled by color id.
std::string to_dot(const Graph& g, const EdgeColoring* coloring = nullptr,
                   const std::vector<std::string>* vertex_names = nullptr);

/// The fixed edge palette used by to_dot.
const std::vector<std::string>& dot_palette();

} // namespace rainbow
