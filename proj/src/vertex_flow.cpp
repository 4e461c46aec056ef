#include "gfvs/vertex_flow.hpp"

#include <deque>

namespace gfvs {

VertexFlow::VertexFlow(const std::vector<std::vector<Vertex>>& adjacency,
                       std::vector<int> capacity, std::span<const Vertex> sources,
                       std::span<const Vertex> sinks)
    : vertex_count_(static_cast<int>(adjacency.size())),
      source_(2 * vertex_count_),
      sink_(2 * vertex_count_ + 1),
      incident_(2 * vertex_count_ + 2) {
  if (static_cast<int>(capacity.size()) != vertex_count_) {
    throw UsageError("capacity vector does not match graph size");
  }
  std::vector<char> role(vertex_count_, 0);
  for (Vertex s : sources) {
    if (s < 0 || s >= vertex_count_) throw UsageError("source out of range");
    role[s] |= 1;
  }
  for (Vertex t : sinks) {
    if (t < 0 || t >= vertex_count_) throw UsageError("sink out of range");
    if (role[t] & 1) throw UsageError("vertex is both source and sink");
    role[t] |= 2;
  }
  for (Vertex s : sources) {
    if (capacity[s] > 0) capacity[s] = kUnboundedCapacity;
  }
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (capacity[v] <= 0) continue;
    add_arc(in(v), out(v), capacity[v]);
    if (role[v] & 1) add_arc(source_, in(v), kUnboundedCapacity);
    if (role[v] & 2) add_arc(out(v), sink_, kUnboundedCapacity);
    for (Vertex w : adjacency[v]) {
      if (capacity[w] > 0) add_arc(out(v), in(w), kUnboundedCapacity);
    }
  }
}

void VertexFlow::add_arc(int from, int to, int cap) {
  incident_[from].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({to, cap});
  incident_[to].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({from, 0});
}

bool VertexFlow::augment() {
  std::vector<int> via(incident_.size(), -1);
  std::vector<char> seen(incident_.size(), 0);
  std::deque<int> queue{source_};
  seen[source_] = 1;
  while (!queue.empty() && !seen[sink_]) {
    int x = queue.front();
    queue.pop_front();
    for (int e : incident_[x]) {
      int y = edges_[e].to;
      if (edges_[e].residual <= 0 || seen[y]) continue;
      seen[y] = 1;
      via[y] = e;
      queue.push_back(y);
    }
  }
  if (!seen[sink_]) return false;
  for (int y = sink_; y != source_;) {
    int e = via[y];
    edges_[e].residual -= 1;
    edges_[e ^ 1].residual += 1;
    y = edges_[e ^ 1].to;
  }
  return true;
}

int VertexFlow::run(int limit) {
  while (flow_ < limit && augment()) ++flow_;
  return flow_;
}

std::vector<char> VertexFlow::reaches_sink() const {
  std::vector<char> reach(incident_.size(), 0);
  std::deque<int> queue{sink_};
  reach[sink_] = 1;
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop_front();
    for (int e : incident_[y]) {
      // edges_[e ^ 1] runs from edges_[e].to into y.
      int x = edges_[e].to;
      if (reach[x] || edges_[e ^ 1].residual <= 0) continue;
      reach[x] = 1;
      queue.push_back(x);
    }
  }
  return reach;
}

std::vector<char> VertexFlow::far_source_side() const {
  auto reach = reaches_sink();
  std::vector<char> side(vertex_count_, 0);
  for (Vertex v = 0; v < vertex_count_; ++v) {
    side[v] = (!reach[in(v)] && !reach[out(v)] && !incident_[in(v)].empty()) ? 1 : 0;
  }
  return side;
}

std::vector<Vertex> VertexFlow::far_cut() const {
  auto reach = reaches_sink();
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (!incident_[in(v)].empty() && !reach[in(v)] && reach[out(v)]) cut.push_back(v);
  }
  return cut;
}

int min_vertex_cut(const std::vector<std::vector<Vertex>>& adjacency, std::span<const Vertex> a,
                   std::span<const Vertex> b, int cap) {
  std::vector<int> capacity(adjacency.size(), 1);
  for (Vertex t : b) capacity.at(t) = kUnboundedCapacity;
  VertexFlow flow(adjacency, std::move(capacity), a, b);
  return flow.run(cap + 1);
}

int min_vertex_cut(const UndirectedGraph& graph, std::span<const Vertex> a,
                   std::span<const Vertex> b, int cap) {
  return min_vertex_cut(graph.adjacency(), a, b, cap);
}

}  // namespace gfvs
