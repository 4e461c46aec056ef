#pragma once

#include <utility>
#include <vector>

#include "gfvs/labeled_graph.hpp"

namespace gfvs {

/// Plain undirected multigraph on vertices 0..vertex_count()-1. Parallel
/// edges are allowed (they matter for feedback-set inputs); self-loops are not.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int vertex_count);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  /// Neighbour lists with parallel edges collapsed, ascending.
  std::vector<std::vector<Vertex>> adjacency() const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace gfvs
