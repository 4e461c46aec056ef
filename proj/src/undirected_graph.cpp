#include "gfvs/undirected_graph.hpp"

#include <algorithm>
#include <string>

namespace gfvs {

UndirectedGraph::UndirectedGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw UsageError("negative vertex count");
}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw UsageError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  edges_.emplace_back(u, v);
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  return std::ranges::any_of(edges_, [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

std::vector<std::vector<Vertex>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::ranges::sort(list);
    auto dup = std::ranges::unique(list);
    list.erase(dup.begin(), dup.end());
  }
  return adj;
}

}  // namespace gfvs
