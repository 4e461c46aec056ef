#include "gfvs/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace gfvs {

VertexSet random_vertex_subset(int vertices, int count, std::mt19937_64& rng) {
  std::vector<Vertex> all(vertices);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::clamp(count, 0, vertices));
  return make_vertex_set(std::move(all));
}

UndirectedGraph random_simple_graph(int vertices, int edges, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min<std::size_t>(pairs.size(), static_cast<std::size_t>(std::max(edges, 0))));
  std::ranges::sort(pairs);
  UndirectedGraph graph(vertices);
  for (auto [u, v] : pairs) graph.add_edge(u, v);
  return graph;
}

LabeledGraph random_labeled_graph(std::shared_ptr<const Group> group, int vertices, int edges,
                                  std::mt19937_64& rng) {
  auto shape = random_simple_graph(vertices, edges, rng);
  LabeledGraph graph(group, vertices);
  for (auto [u, v] : shape.edges()) graph.add_edge(u, v, group->random_element(rng));
  return graph;
}

LabeledGraph random_planted_graph(std::shared_ptr<const Group> group, int vertices, int edges,
                                  const VertexSet& planted, std::mt19937_64& rng) {
  auto shape = random_simple_graph(vertices, edges, rng);
  std::vector<Element> potential;
  for (int v = 0; v < vertices; ++v) potential.push_back(group->random_element(rng));
  LabeledGraph graph(group, vertices);
  for (auto [u, v] : shape.edges()) {
    bool touches = std::ranges::binary_search(planted, u) || std::ranges::binary_search(planted, v);
    graph.add_edge(u, v,
                   touches ? group->random_element(rng)
                           : group->mul(group->inv(potential[u]), potential[v]));
  }
  return graph;
}

CompressionInstance random_compression_instance(std::shared_ptr<const Group> group, int vertices,
                                                int edges, int solution_size, int budget,
                                                std::mt19937_64& rng) {
  auto solution = random_vertex_subset(vertices, solution_size, rng);
  auto graph = random_planted_graph(group, vertices, edges, solution, rng);
  return CompressionInstance{std::move(graph), budget, std::move(solution)};
}

MwcInstance random_mwc_instance(int vertices, int edges, int terminal_count, int budget,
                                std::mt19937_64& rng) {
  return MwcInstance{random_simple_graph(vertices, edges, rng),
                     random_vertex_subset(vertices, terminal_count, rng), budget};
}

}  // namespace gfvs
