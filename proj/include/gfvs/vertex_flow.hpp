#pragma once

#include <span>
#include <vector>

#include "gfvs/labeled_graph.hpp"
#include "gfvs/undirected_graph.hpp"

namespace gfvs {

inline constexpr int kUnboundedCapacity = 1 << 28;

/// Max flow with vertex capacities on an undirected graph, by unit
/// augmenting paths. Each vertex v is split into in(v) -> out(v) carrying
/// its capacity; edges get unbounded capacity both ways. Sources always get
/// unbounded capacity, every other vertex (sinks included) keeps its own.
class VertexFlow {
 public:
  /// `capacity[v] == 0` removes v from the network.
  VertexFlow(const std::vector<std::vector<Vertex>>& adjacency, std::vector<int> capacity,
             std::span<const Vertex> sources, std::span<const Vertex> sinks);

  /// Augments until the flow reaches `limit` or no augmenting path remains.
  int run(int limit);
  int value() const noexcept { return flow_; }

  /// After a full run: vertices entirely on the source side of the minimum
  /// vertex cut that lies closest to the sinks.
  std::vector<char> far_source_side() const;
  /// After a full run: the minimum vertex cut closest to the sinks.
  std::vector<Vertex> far_cut() const;

 private:
  struct Edge {
    int to;
    int residual;
  };

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }
  void add_arc(int from, int to, int cap);
  bool augment();
  std::vector<char> reaches_sink() const;

  int vertex_count_;
  int source_;
  int sink_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  int flow_ = 0;
};

/// Minimum number of vertices outside `a` and `b` whose removal separates
/// every vertex of `a` from every vertex of `b`, or `cap + 1` if that exceeds
/// `cap` (including when some vertex of `a` is adjacent to one of `b`).
int min_vertex_cut(const std::vector<std::vector<Vertex>>& adjacency, std::span<const Vertex> a,
                   std::span<const Vertex> b, int cap);
int min_vertex_cut(const UndirectedGraph& graph, std::span<const Vertex> a,
                   std::span<const Vertex> b, int cap);

}  // namespace gfvs
