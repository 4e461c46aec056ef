#include "gfvs/compression.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <string>
#include <thread>

#include "gfvs/multiway_cut.hpp"
#include "gfvs/vertex_flow.hpp"

namespace gfvs {
namespace {

std::vector<char> membership(const LabeledGraph& graph, const VertexSet& set) {
  std::vector<char> in(graph.slot_count(), 0);
  for (Vertex v : set) {
    if (!graph.contains(v)) throw UsageError("vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  return in;
}

// Component ids of graph[V \ excluded]; -1 on excluded or missing slots.
std::vector<int> outside_components(const LabeledGraph& graph, const std::vector<char>& excluded) {
  std::vector<int> comp(graph.slot_count(), -1);
  int next = 0;
  for (Vertex s : graph.vertices()) {
    if (excluded[s] || comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const auto& a : graph.arcs_from(u)) {
        if (excluded[a.head] || comp[a.head] >= 0) continue;
        comp[a.head] = next;
        queue.push_back(a.head);
      }
    }
    ++next;
  }
  return comp;
}

// Appends g unless an equal element is already listed.
bool insert_unique(const Group& group, std::vector<Element>& list, const Element& g) {
  for (const auto& h : list) {
    if (group.eq(h, g)) return false;
  }
  list.push_back(g);
  return true;
}

int find_element(const Group& group, const std::vector<Element>& list, const Element& g) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (group.eq(list[i], g)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<const Arc*> arcs_by_head(const LabeledGraph& graph, Vertex u) {
  std::vector<const Arc*> arcs;
  for (const auto& a : graph.arcs_from(u)) arcs.push_back(&a);
  std::ranges::sort(arcs, {}, &Arc::head);
  return arcs;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

LabeledGraph untangle_around(const LabeledGraph& graph, Vertex x, const Element& g) {
  if (!graph.contains(x)) throw UsageError("vertex " + std::to_string(x) + " not in graph");
  LabeledGraph out = graph;
  const Group& group = graph.group();
  for (const auto& a : graph.arcs_from(x)) out.set_label(x, a.head, group.mul(g, a.label));
  return out;
}

CompressionInstance untangle_instance(const CompressionInstance& instance) {
  const LabeledGraph& graph = instance.graph;
  const Group& group = graph.group();
  auto in_solution = membership(graph, instance.current_solution);
  auto rest = graph.delete_vertices(instance.current_solution);
  auto result = find_consistent_labeling(rest);
  if (auto* witness = std::get_if<NonNullWitness>(&result)) {
    std::string cycle;
    for (Vertex v : witness->cycle) cycle += " " + std::to_string(v);
    throw UsageError("current solution misses the non-null cycle" + cycle);
  }
  const auto& potential = std::get<Labeling>(result);
  auto shift = [&](Vertex v) { return in_solution[v] ? group.identity() : potential.at(v); };

  CompressionInstance out = instance;
  for (Vertex u : graph.vertices()) {
    for (const auto& a : graph.arcs_from(u)) {
      if (a.head < u) continue;
      out.graph.set_label(u, a.head, group.mul(group.mul(shift(u), a.label), group.inv(shift(a.head))));
    }
  }
  return out;
}

int FlowGraph::local_id(Vertex v) const {
  auto it = std::ranges::lower_bound(graph_vertices, v);
  if (it == graph_vertices.end() || *it != v) return -1;
  return static_cast<int>(it - graph_vertices.begin());
}

FlowGraph build_flow_graph(const CompressionInstance& untangled, Vertex z) {
  const LabeledGraph& graph = untangled.graph;
  const Group& group = graph.group();
  auto in_solution = membership(graph, untangled.current_solution);
  if (!in_solution.at(z)) throw UsageError("flow graph root must lie in the current solution");

  FlowGraph flow;
  for (Vertex v : graph.vertices()) {
    if (!in_solution[v]) flow.graph_vertices.push_back(v);
  }
  std::vector<std::pair<Vertex, int>> label_links;
  for (const Arc* a : arcs_by_head(graph, z)) {
    if (in_solution[a->head]) continue;
    insert_unique(group, flow.labels, a->label);
    label_links.emplace_back(a->head, find_element(group, flow.labels, a->label));
  }
  flow.adjacency.resize(flow.graph_vertices.size() + flow.labels.size());
  for (std::size_t i = 0; i < flow.graph_vertices.size(); ++i) {
    for (const Arc* a : arcs_by_head(graph, flow.graph_vertices[i])) {
      if (!in_solution[a->head]) flow.adjacency[i].push_back(flow.local_id(a->head));
    }
  }
  for (auto [v, label] : label_links) {
    int lv = flow.local_id(v);
    int lg = flow.label_id(label);
    flow.adjacency[lv].push_back(lg);
    flow.adjacency[lg].push_back(lv);
  }
  return flow;
}

int count_label_paths(const FlowGraph& flow, Vertex v, int limit) {
  int source = flow.local_id(v);
  if (source < 0) throw UsageError("vertex " + std::to_string(v) + " not in flow graph");
  std::vector<int> sinks;
  for (std::size_t j = 0; j < flow.labels.size(); ++j) sinks.push_back(flow.label_id(j));
  std::vector<int> capacity(flow.adjacency.size(), 1);
  VertexFlow network(flow.adjacency, std::move(capacity), std::span<const Vertex>(&source, 1),
                     sinks);
  return network.run(limit);
}

std::optional<Vertex> reduction_rule_scan(const CompressionInstance& untangled) {
  const int needed = untangled.budget + 2;
  for (Vertex z : untangled.current_solution) {
    FlowGraph flow = build_flow_graph(untangled, z);
    if (static_cast<int>(flow.labels.size()) < needed) continue;
    for (Vertex v : flow.graph_vertices) {
      if (count_label_paths(flow, v, needed) >= needed) return v;
    }
  }
  return std::nullopt;
}

std::int64_t no_instance_threshold(int budget) {
  std::int64_t k = budget;
  return k * k * k * (k + 1) * (k + 1) + 2;
}

std::vector<Element> compute_sigma_pair(const CompressionInstance& untangled, Vertex z1,
                                        Vertex z2, std::int64_t cap) {
  const LabeledGraph& graph = untangled.graph;
  const Group& group = graph.group();
  auto in_solution = membership(graph, untangled.current_solution);
  if (z1 == z2 || !in_solution.at(z1) || !in_solution.at(z2)) {
    throw UsageError("external path ends must be distinct solution vertices");
  }
  auto comp = outside_components(graph, in_solution);
  auto full = [&](const std::vector<Element>& list) {
    return cap >= 0 && static_cast<std::int64_t>(list.size()) >= cap;
  };

  std::vector<Element> values;
  if (const Element* direct = graph.label(z1, z2)) values.push_back(*direct);
  auto leaving = arcs_by_head(graph, z1);
  auto entering = arcs_by_head(graph, z2);
  for (const Arc* first : leaving) {
    if (in_solution[first->head]) continue;
    for (const Arc* last : entering) {
      if (full(values)) return values;
      if (in_solution[last->head] || comp[last->head] != comp[first->head]) continue;
      // entering holds arcs z2 -> v; the path uses v -> z2, its inverse.
      insert_unique(group, values, group.mul(first->label, group.inv(last->label)));
    }
  }
  return values;
}

bool no_instance_check(const CompressionInstance& untangled) {
  const auto& z = untangled.current_solution;
  const std::int64_t threshold = no_instance_threshold(untangled.budget);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      auto values = compute_sigma_pair(untangled, z[i], z[j], threshold);
      if (static_cast<std::int64_t>(values.size()) >= threshold) return true;
    }
  }
  return false;
}

std::size_t enumerate_boundary_labelings(const CompressionInstance& untangled,
                                         const std::function<bool(const Labeling&)>& visit) {
  const auto& z = untangled.current_solution;
  const Group& group = untangled.graph.group();
  const int r = static_cast<int>(z.size());
  std::vector<std::vector<std::vector<Element>>> sigma(r, std::vector<std::vector<Element>>(r));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i != j) sigma[i][j] = compute_sigma_pair(untangled, z[i], z[j]);
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (!sigma[i][j].empty()) pairs.emplace_back(i, j);
    }
  }

  std::vector<std::vector<Element>> emitted;
  bool stopped = false;

  auto emit = [&](const std::vector<Element>& values) {
    for (const auto& seen : emitted) {
      bool same = true;
      for (int i = 0; i < r && same; ++i) same = group.eq(seen[i], values[i]);
      if (same) return;
    }
    emitted.push_back(values);
    Labeling boundary(untangled.graph.slot_count());
    for (int i = 0; i < r; ++i) boundary.set(z[i], values[i]);
    stopped = visit(boundary);
  };

  auto expand_forest = [&](const std::vector<std::pair<int, int>>& forest) {
    std::vector<std::vector<int>> adj(r);
    for (auto [a, b] : forest) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    // (child, parent) in BFS order from each tree's lowest member.
    std::vector<std::pair<int, int>> order;
    std::vector<char> reached(r, 0);
    for (int root = 0; root < r; ++root) {
      if (reached[root]) continue;
      reached[root] = 1;
      std::deque<int> queue{root};
      while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int c : adj[p]) {
          if (reached[c]) continue;
          reached[c] = 1;
          order.emplace_back(c, p);
          queue.push_back(c);
        }
      }
    }
    std::vector<Element> values(r, group.identity());
    std::function<void(std::size_t)> assign = [&](std::size_t step) {
      if (stopped) return;
      if (step == order.size()) {
        emit(values);
        return;
      }
      auto [child, parent] = order[step];
      for (const auto& g : sigma[parent][child]) {
        values[child] = group.mul(values[parent], g);
        assign(step + 1);
        if (stopped) return;
      }
    };
    assign(0);
  };

  std::vector<std::pair<int, int>> forest;
  std::function<void(std::size_t, DisjointSets)> grow = [&](std::size_t next, DisjointSets sets) {
    expand_forest(forest);
    for (std::size_t e = next; e < pairs.size() && !stopped; ++e) {
      auto [a, b] = pairs[e];
      int ra = sets.find(a);
      int rb = sets.find(b);
      if (ra == rb) continue;
      DisjointSets joined = sets;
      joined.parent[ra] = rb;
      forest.push_back(pairs[e]);
      grow(e + 1, std::move(joined));
      forest.pop_back();
    }
  };
  grow(0, DisjointSets(r));
  return emitted.size();
}

std::optional<FixedLabelingResult> solve_fixed_labeling(const CompressionInstance& untangled,
                                                        const Labeling& boundary,
                                                        MwcStats* stats) {
  const LabeledGraph& graph = untangled.graph;
  const Group& group = graph.group();
  auto in_solution = membership(graph, untangled.current_solution);

  for (Vertex z : untangled.current_solution) {
    for (const auto& a : graph.arcs_from(z)) {
      if (!in_solution[a.head]) continue;
      if (!group.eq(boundary.at(a.head), group.mul(boundary.at(z), a.label))) return std::nullopt;
    }
  }
  if (untangled.budget < 0) return std::nullopt;

  std::vector<Vertex> outside;
  std::vector<int> local(graph.slot_count(), -1);
  for (Vertex v : graph.vertices()) {
    if (in_solution[v]) continue;
    local[v] = static_cast<int>(outside.size());
    outside.push_back(v);
  }
  std::vector<Element> terminal_values;
  std::vector<std::pair<int, Vertex>> terminal_links;
  for (Vertex z : untangled.current_solution) {
    for (const Arc* a : arcs_by_head(graph, z)) {
      if (in_solution[a->head]) continue;
      Element g = group.mul(boundary.at(z), a->label);
      insert_unique(group, terminal_values, g);
      terminal_links.emplace_back(find_element(group, terminal_values, g), a->head);
    }
  }

  const int base = static_cast<int>(outside.size());
  UndirectedGraph cut_graph(base + static_cast<int>(terminal_values.size()));
  for (Vertex u : outside) {
    for (const auto& a : graph.arcs_from(u)) {
      if (!in_solution[a.head] && u < a.head) cut_graph.add_edge(local[u], local[a.head]);
    }
  }
  for (auto [t, v] : terminal_links) cut_graph.add_edge(base + t, local[v]);
  VertexSet terminals;
  for (int t = 0; t < static_cast<int>(terminal_values.size()); ++t) terminals.push_back(base + t);

  auto cut = solve_mwc(MwcInstance{cut_graph, terminals, untangled.budget}, stats);
  if (!cut) return std::nullopt;

  FixedLabelingResult result;
  std::vector<char> deleted(cut_graph.vertex_count(), 0);
  for (int x : *cut) {
    deleted[x] = 1;
    result.deletion.push_back(outside[x]);
  }
  result.deletion = make_vertex_set(std::move(result.deletion));

  // Vertices reached from terminal g get g; unreached ones get the identity.
  result.labeling = Labeling(graph.slot_count());
  for (Vertex z : untangled.current_solution) result.labeling.set(z, boundary.at(z));
  auto adj = cut_graph.adjacency();
  std::vector<char> seen(cut_graph.vertex_count(), 0);
  for (int t = 0; t < static_cast<int>(terminal_values.size()); ++t) {
    std::deque<int> queue{base + t};
    seen[base + t] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x]) {
        if (seen[y] || deleted[y]) continue;
        seen[y] = 1;
        if (y < base) result.labeling.set(outside[y], terminal_values[t]);
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < base; ++x) {
    if (!seen[x] && !deleted[x]) result.labeling.set(outside[x], group.identity());
  }
  return result;
}

std::optional<VertexSet> solve_compression(const CompressionInstance& instance,
                                           const CompressionOptions& options) {
  CompressionStats local_stats;
  CompressionStats& stats = options.stats ? *options.stats : local_stats;

  CompressionInstance current = untangle_instance(instance);
  std::vector<Vertex> forced;
  while (true) {
    if (current.budget < 0) return std::nullopt;
    auto v = reduction_rule_scan(current);
    if (!v) break;
    forced.push_back(*v);
    ++stats.forced_vertices;
    // Deleting a vertex cannot give an arc outside the solution a non-identity label.
    current.graph = current.graph.delete_vertices(std::span<const Vertex>(&*v, 1));
    --current.budget;
  }
  if (no_instance_check(current)) return std::nullopt;

  std::optional<FixedLabelingResult> found;
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    enumerate_boundary_labelings(current, [&](const Labeling& boundary) {
      ++stats.labelings_tried;
      MwcStats mwc;
      found = solve_fixed_labeling(current, boundary, &mwc);
      stats.mwc_search_nodes += mwc.search_nodes;
      return found.has_value();
    });
  } else {
    // Batches are evaluated concurrently; the earliest success in stream order wins.
    const std::size_t batch_size = static_cast<std::size_t>(threads) * 8;
    std::vector<Labeling> batch;
    auto flush = [&] {
      std::vector<std::optional<FixedLabelingResult>> results(batch.size());
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> best{batch.size()};
      std::atomic<long long> nodes{0};
      {
        std::vector<std::jthread> workers;
        for (int w = 0; w < threads; ++w) {
          workers.emplace_back([&] {
            for (std::size_t i = next++; i < batch.size(); i = next++) {
              if (i > best.load()) continue;
              MwcStats mwc;
              results[i] = solve_fixed_labeling(current, batch[i], &mwc);
              nodes += mwc.search_nodes;
              if (!results[i]) continue;
              std::size_t seen = best.load();
              while (i < seen && !best.compare_exchange_weak(seen, i)) {
              }
            }
          });
        }
      }
      stats.labelings_tried += static_cast<std::int64_t>(batch.size());
      stats.mwc_search_nodes += nodes.load();
      batch.clear();
      if (best.load() < results.size()) found = std::move(results[best.load()]);
      return found.has_value();
    };
    enumerate_boundary_labelings(current, [&](const Labeling& boundary) {
      batch.push_back(boundary);
      return batch.size() >= batch_size && flush();
    });
    if (!found && !batch.empty()) flush();
  }
  if (!found) return std::nullopt;
  std::vector<Vertex> answer = found->deletion;
  answer.insert(answer.end(), forced.begin(), forced.end());
  return make_vertex_set(std::move(answer));
}

}  // namespace gfvs
