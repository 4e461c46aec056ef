#include "gfvs/encoders.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gfvs {
namespace {

// Adds u–v labeled g, subdividing when the pair is already joined.
void add_or_subdivide(LabeledGraph& graph, Vertex u, Vertex v, const Element& g) {
  if (!graph.has_arc(u, v)) {
    graph.add_edge(u, v, g);
    return;
  }
  Vertex middle = graph.add_vertex();
  graph.add_edge(u, middle, g);
  graph.add_edge(middle, v, graph.group().identity());
}

}  // namespace

GfvsInstance encode_esfvs(const EsfvsInstance& instance) {
  const auto& edges = instance.graph.edges();
  std::vector<int> basis_index(edges.size(), -1);
  int next = 0;
  for (int e : instance.special_edges) {
    if (e < 0 || e >= static_cast<int>(edges.size())) {
      throw UsageError("special edge index " + std::to_string(e) + " out of range");
    }
    if (basis_index[e] >= 0) throw UsageError("special edge listed twice");
    basis_index[e] = next++;
  }
  auto group = std::make_shared<BitVectorGroup>(std::max(1, next));
  LabeledGraph graph(group, instance.graph.vertex_count());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Element g = basis_index[e] >= 0 ? group->basis(basis_index[e]) : group->identity();
    add_or_subdivide(graph, edges[e].first, edges[e].second, g);
  }
  return GfvsInstance{std::move(graph), instance.budget};
}

GfvsInstance encode_fvs(const UndirectedGraph& graph, int budget) {
  EsfvsInstance esfvs{graph, {}, budget};
  for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) esfvs.special_edges.push_back(e);
  return encode_esfvs(esfvs);
}

GfvsInstance encode_oct(const UndirectedGraph& graph, int budget) {
  auto group = std::make_shared<CyclicGroup>(2);
  LabeledGraph out(group, graph.vertex_count());
  for (auto [u, v] : graph.edges()) add_or_subdivide(out, u, v, group->element(1));
  return GfvsInstance{std::move(out), budget};
}

GfvsInstance encode_mwc(const UndirectedGraph& graph, std::span<const Vertex> terminals,
                        int budget) {
  VertexSet sorted = make_vertex_set({terminals.begin(), terminals.end()});
  if (sorted.size() != terminals.size()) throw UsageError("duplicate terminal");
  if (sorted.size() < 2) throw UsageError("multiway cut needs at least two terminals");
  const int n = graph.vertex_count();
  std::vector<int> terminal_index(n, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n) throw UsageError("terminal out of range");
    terminal_index[sorted[i]] = static_cast<int>(i);
  }

  auto group = std::make_shared<CyclicGroup>(static_cast<int>(sorted.size()));
  LabeledGraph out(group, n + 1);
  const Vertex hub = n;
  std::vector<Vertex> undeletable{hub};
  std::set<std::pair<Vertex, int>> hub_links;
  std::set<std::pair<int, int>> terminal_links;

  for (auto [u, v] : graph.edges()) {
    int tu = terminal_index[u];
    int tv = terminal_index[v];
    if (tu < 0 && tv < 0) {
      if (!out.has_arc(u, v)) out.add_edge(u, v, group->identity());
    } else if (tu >= 0 && tv >= 0) {
      if (!terminal_links.insert({std::min(tu, tv), std::max(tu, tv)}).second) continue;
      Vertex first = out.add_vertex();
      Vertex second = out.add_vertex();
      out.add_edge(hub, first, group->element(tu));
      out.add_edge(first, second, group->identity());
      out.add_edge(second, hub, group->inv(group->element(tv)));
      undeletable.push_back(first);
      undeletable.push_back(second);
    } else {
      Vertex inner = tu < 0 ? u : v;
      int t = tu < 0 ? tv : tu;
      if (!hub_links.insert({inner, t}).second) continue;
      if (!out.has_arc(hub, inner)) {
        out.add_edge(hub, inner, group->element(t));
        continue;
      }
      Vertex middle = out.add_vertex();
      out.add_edge(hub, middle, group->element(t));
      out.add_edge(middle, inner, group->identity());
      undeletable.push_back(middle);
    }
  }
  return apply_forbidden_gadget(GfvsInstance{std::move(out), budget}, undeletable);
}

GfvsInstance apply_forbidden_gadget(const GfvsInstance& instance,
                                    std::span<const Vertex> forbidden) {
  GfvsInstance out = instance;
  LabeledGraph& graph = out.graph;
  const Element one = graph.group().identity();
  for (Vertex v : make_vertex_set({forbidden.begin(), forbidden.end()})) {
    if (!instance.graph.contains(v)) {
      throw UsageError("forbidden vertex " + std::to_string(v) + " not in graph");
    }
    std::vector<Arc> inherited(graph.arcs_from(v).begin(), graph.arcs_from(v).end());
    std::vector<Vertex> clique{v};
    for (int i = 0; i < instance.budget; ++i) {
      Vertex copy = graph.add_vertex();
      for (Vertex other : clique) graph.add_edge(other, copy, one);
      for (const auto& a : inherited) graph.add_edge(copy, a.head, a.label);
      clique.push_back(copy);
    }
  }
  return out;
}

}  // namespace gfvs
