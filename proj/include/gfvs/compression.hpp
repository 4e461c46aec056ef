#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gfvs/instance.hpp"
#include "gfvs/multiway_cut.hpp"

namespace gfvs {

/// Relabels around x: arcs leaving x become g * label, arcs entering x
/// become label * inv(g). Cycle values are unchanged.
LabeledGraph untangle_around(const LabeledGraph& graph, Vertex x, const Element& g);

/// Untangles around every vertex outside the current solution with its value
/// in a consistent labeling of graph \ current_solution, after which every
/// arc between two such vertices carries the identity. Throws UsageError if
/// graph \ current_solution has a non-null cycle.
CompressionInstance untangle_instance(const CompressionInstance& instance);

/// Undirected graph on the vertices outside the current solution plus one
/// vertex per distinct label on arcs from a solution vertex z into the rest.
/// Local ids: graph_vertices first, then labels.
struct FlowGraph {
  std::vector<Vertex> graph_vertices;
  std::vector<Element> labels;
  std::vector<std::vector<int>> adjacency;

  int label_id(std::size_t index) const { return static_cast<int>(graph_vertices.size() + index); }
  /// Local id of graph vertex v, or -1.
  int local_id(Vertex v) const;
};

FlowGraph build_flow_graph(const CompressionInstance& untangled, Vertex z);

/// Number of paths from graph vertex v to distinct label vertices of `flow`,
/// pairwise disjoint apart from v, counted up to `limit`.
int count_label_paths(const FlowGraph& flow, Vertex v, int limit);

/// A vertex outside the current solution joined to budget+2 label vertices
/// of some flow graph by paths disjoint apart from itself. Any solution must
/// delete it. Scans z, then v, in ascending id order.
std::optional<Vertex> reduction_rule_scan(const CompressionInstance& untangled);

/// k^3 (k+1)^2 + 2: with no reducible vertex, a pair of solution vertices
/// joined by this many distinct external-path values rules out a solution.
std::int64_t no_instance_threshold(int budget);

/// Distinct values of external paths from z1 to z2 (internal vertices all
/// outside the current solution, possibly none). Stops once `cap` values
/// are found; cap < 0 means no cap.
std::vector<Element> compute_sigma_pair(const CompressionInstance& untangled, Vertex z1,
                                        Vertex z2, std::int64_t cap = -1);

/// True when some pair of solution vertices reaches no_instance_threshold.
bool no_instance_check(const CompressionInstance& untangled);

/// Streams candidate labelings of the current solution: for every forest on
/// it (over pairs with an external path, edge sets in lexicographic order),
/// roots get the identity and each child gets parent * g for g in the
/// parent-child external values. Duplicates are suppressed. `visit` returns
/// true to stop. Returns the number of labelings emitted.
std::size_t enumerate_boundary_labelings(const CompressionInstance& untangled,
                                         const std::function<bool(const Labeling&)>& visit);

struct FixedLabelingResult {
  VertexSet deletion;
  /// Consistent labeling of graph \ deletion that agrees with the boundary.
  Labeling labeling;
};

/// Deletion set of size <= budget, outside the current solution, after which
/// a consistent labeling extends `boundary`; found through Multiway Cut with
/// one terminal per distinct value boundary(z) * label(z,v).
std::optional<FixedLabelingResult> solve_fixed_labeling(const CompressionInstance& untangled,
                                                        const Labeling& boundary,
                                                        MwcStats* stats = nullptr);

struct CompressionStats {
  std::int64_t labelings_tried = 0;
  std::int64_t forced_vertices = 0;
  std::int64_t mwc_search_nodes = 0;
};

struct CompressionOptions {
  /// Worker threads for boundary-labeling trials; 0 or 1 runs sequentially.
  int threads = 0;
  CompressionStats* stats = nullptr;
};

/// Solves the compression problem. The result is the one reached first in
/// the sequential labeling stream regardless of `threads`.
std::optional<VertexSet> solve_compression(const CompressionInstance& instance,
                                           const CompressionOptions& options = {});

}  // namespace gfvs
