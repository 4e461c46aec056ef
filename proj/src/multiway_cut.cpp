#include "gfvs/multiway_cut.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gfvs/vertex_flow.hpp"

namespace gfvs {
namespace {

// Component id per vertex of the graph with `deleted` vertices removed.
std::vector<int> components(const std::vector<std::vector<Vertex>>& adj,
                            const std::vector<char>& deleted) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (deleted[s] || comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : adj[u]) {
        if (deleted[w] || comp[w] >= 0) continue;
        comp[w] = next;
        queue.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

class CutSearch {
 public:
  CutSearch(const std::vector<std::vector<Vertex>>& adj, const VertexSet& terminals)
      : adj_(adj), terminals_(terminals), is_terminal_(adj.size(), 0), deleted_(adj.size(), 0) {
    for (Vertex t : terminals) is_terminal_[t] = 1;
  }

  long long nodes() const noexcept { return nodes_; }
  VertexSet chosen() const { return make_vertex_set(chosen_); }

  // Picks the lowest terminal still sharing a component with another one.
  bool separate(int budget) {
    ++nodes_;
    auto comp = components(adj_, deleted_);
    std::vector<int> count(adj_.size(), 0);
    for (Vertex t : terminals_) ++count[comp[t]];
    for (Vertex t : terminals_) {
      if (count[comp[t]] < 2) continue;
      std::vector<char> side(adj_.size(), 0);
      side[t] = 1;
      return grow(t, std::move(side), budget);
    }
    return true;
  }

 private:
  // `side` holds t plus vertices already committed to t's component.
  bool grow(Vertex t, std::vector<char> side, int budget) {
    ++nodes_;
    const int n = static_cast<int>(adj_.size());
    std::vector<int> capacity(n, 1);
    std::vector<Vertex> sources;
    std::vector<Vertex> sinks;
    for (Vertex v = 0; v < n; ++v) {
      if (deleted_[v]) {
        capacity[v] = 0;
      } else if (side[v]) {
        sources.push_back(v);
      } else if (is_terminal_[v]) {
        capacity[v] = kUnboundedCapacity;
        sinks.push_back(v);
      }
    }
    VertexFlow flow(adj_, std::move(capacity), sources, sinks);
    const int cut = flow.run(budget + 1);
    if (cut > budget) return false;
    if (cut == 0) return separate(budget);

    auto far_side = flow.far_source_side();
    for (Vertex v = 0; v < n; ++v) {
      if (far_side[v]) side[v] = 1;
    }
    const Vertex pivot = flow.far_cut().front();

    deleted_[pivot] = 1;
    chosen_.push_back(pivot);
    if (grow(t, side, budget - 1)) return true;
    deleted_[pivot] = 0;
    chosen_.pop_back();

    side[pivot] = 1;
    return grow(t, std::move(side), budget);
  }

  const std::vector<std::vector<Vertex>>& adj_;
  const VertexSet& terminals_;
  std::vector<char> is_terminal_;
  std::vector<char> deleted_;
  std::vector<Vertex> chosen_;
  long long nodes_ = 0;
};

}  // namespace

std::optional<VertexSet> solve_mwc(const MwcInstance& instance, MwcStats* stats) {
  const auto& graph = instance.graph;
  VertexSet terminals = make_vertex_set(instance.terminals);
  if (terminals.size() != instance.terminals.size()) throw UsageError("duplicate terminal");
  for (Vertex t : terminals) {
    if (t < 0 || t >= graph.vertex_count()) {
      throw UsageError("terminal " + std::to_string(t) + " out of range");
    }
  }
  if (instance.budget < 0) return std::nullopt;
  auto adj = graph.adjacency();
  for (Vertex t : terminals) {
    for (Vertex w : adj[t]) {
      if (std::ranges::binary_search(terminals, w)) return std::nullopt;
    }
  }
  for (int budget = 0; budget <= instance.budget; ++budget) {
    CutSearch search(adj, terminals);
    bool found = search.separate(budget);
    if (stats != nullptr) stats->search_nodes += search.nodes();
    if (found) return search.chosen();
  }
  return std::nullopt;
}

bool separates_terminals(const UndirectedGraph& graph, std::span<const Vertex> terminals,
                         std::span<const Vertex> removed) {
  auto adj = graph.adjacency();
  std::vector<char> deleted(adj.size(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= graph.vertex_count()) return false;
    deleted[v] = 1;
  }
  for (Vertex t : terminals) {
    if (deleted[t]) return false;
  }
  auto comp = components(adj, deleted);
  std::vector<char> used(adj.size(), 0);
  for (Vertex t : terminals) {
    if (used[comp[t]]) return false;
    used[comp[t]] = 1;
  }
  return true;
}

}  // namespace gfvs
