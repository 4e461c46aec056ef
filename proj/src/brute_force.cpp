#include "gfvs/brute_force.hpp"

#include <algorithm>
#include <string>

#include "gfvs/combinations.hpp"

namespace gfvs {
namespace {

void guard(int vertex_count) {
  if (vertex_count > kBruteForceLimit) {
    throw UsageError("brute force refuses " + std::to_string(vertex_count) + " vertices (limit " +
                     std::to_string(kBruteForceLimit) + ")");
  }
}

template <typename Accept>
std::optional<VertexSet> smallest_subset(const std::vector<Vertex>& candidates, int budget,
                                         Accept&& accept) {
  const int n = static_cast<int>(candidates.size());
  for (int size = 0; size <= std::min(budget, n); ++size) {
    std::optional<VertexSet> hit;
    for_each_combination(n, size, [&](const std::vector<int>& pick) {
      VertexSet set;
      for (int i : pick) set.push_back(candidates[i]);
      if (!accept(set)) return false;
      hit = std::move(set);
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> brute_gfvs(const GfvsInstance& instance) {
  guard(instance.graph.vertex_count());
  return smallest_subset(instance.graph.vertices(), instance.budget,
                         [&](const VertexSet& x) { return is_solution(instance.graph, x); });
}

std::optional<VertexSet> brute_restricted_gfvs(const CompressionInstance& instance) {
  guard(instance.graph.vertex_count());
  std::vector<Vertex> candidates;
  for (Vertex v : instance.graph.vertices()) {
    if (!std::ranges::binary_search(instance.current_solution, v)) candidates.push_back(v);
  }
  return smallest_subset(candidates, instance.budget,
                         [&](const VertexSet& x) { return is_solution(instance.graph, x); });
}

std::optional<VertexSet> brute_mwc(const MwcInstance& instance) {
  guard(instance.graph.vertex_count());
  VertexSet terminals = make_vertex_set(instance.terminals);
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < instance.graph.vertex_count(); ++v) {
    if (!std::ranges::binary_search(terminals, v)) candidates.push_back(v);
  }
  return smallest_subset(candidates, instance.budget, [&](const VertexSet& x) {
    return separates_terminals(instance.graph, terminals, x);
  });
}

}  // namespace gfvs
