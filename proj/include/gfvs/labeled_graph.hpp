#pragma once

#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gfvs/group.hpp"

namespace gfvs {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates `vertices` into a VertexSet.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

struct Arc {
  Vertex head;
  Element label;
};

/// A group-labeled directed graph in which every arc (u,v) has the reverse
/// arc (v,u) labeled with the inverse element. Vertex ids are slots
/// 0..slot_count()-1; deleting a vertex empties its slot, so ids stay
/// stable across induced subgraphs.
class LabeledGraph {
 public:
  LabeledGraph(std::shared_ptr<const Group> group, int vertex_count);

  const Group& group() const noexcept { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }

  int slot_count() const noexcept { return static_cast<int>(out_.size()); }
  int vertex_count() const noexcept { return active_count_; }
  /// Number of paired arcs, i.e. undirected edges.
  int edge_count() const noexcept { return edge_count_; }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < slot_count() && active_[v];
  }
  std::vector<Vertex> vertices() const;

  Vertex add_vertex();

  /// Adds (u,v) labeled g and (v,u) labeled inv(g).
  void add_edge(Vertex u, Vertex v, const Element& g);

  /// Relabels an existing pair: (u,v) gets g, (v,u) gets inv(g).
  void set_label(Vertex u, Vertex v, const Element& g);

  std::span<const Arc> arcs_from(Vertex u) const;
  const Element* label(Vertex u, Vertex v) const;
  bool has_arc(Vertex u, Vertex v) const { return label(u, v) != nullptr; }

  /// Induced subgraph on V \ removed. Ids not present are ignored.
  LabeledGraph delete_vertices(std::span<const Vertex> removed) const;
  /// Induced subgraph on `kept`.
  LabeledGraph induced(std::span<const Vertex> kept) const;

 private:
  void check_vertex(Vertex v) const;
  Arc* find_arc(Vertex u, Vertex v);

  std::shared_ptr<const Group> group_;
  std::vector<std::vector<Arc>> out_;
  std::vector<char> active_;
  int active_count_ = 0;
  int edge_count_ = 0;
};

/// Partial vertex labeling; unset entries are vertices outside its domain.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(int slot_count) : values_(slot_count) {}

  int slot_count() const noexcept { return static_cast<int>(values_.size()); }
  bool has(Vertex v) const { return v >= 0 && v < slot_count() && values_[v].has_value(); }
  const Element& at(Vertex v) const;
  void set(Vertex v, Element g);

 private:
  std::vector<std::optional<Element>> values_;
};

/// A simple cycle v_0, ..., v_{l-1} (closing arc back to v_0 implicit) and
/// its value evaluated starting at v_0.
struct NonNullWitness {
  std::vector<Vertex> cycle;
  Element value;
};

/// Product of arc labels around the closed walk walk[0], ..., walk[l-1],
/// walk[0]. Throws UsageError if a consecutive pair is not an arc.
Element cycle_value(const LabeledGraph& graph, std::span<const Vertex> walk);

/// Product of arc labels along the path walk[0], ..., walk[l-1].
Element path_value(const LabeledGraph& graph, std::span<const Vertex> walk);

/// True iff `labeling` is defined on both ends of every arc and satisfies
/// label(v) == label(u) * arc label everywhere.
bool is_consistent(const LabeledGraph& graph, const Labeling& labeling);

/// BFS-propagates a labeling from identity-labeled component roots. Returns
/// a total consistent labeling, or a simple non-null cycle when none exists.
std::variant<Labeling, NonNullWitness> find_consistent_labeling(const LabeledGraph& graph);

/// True iff graph \ removed has no non-null cycle.
bool is_solution(const LabeledGraph& graph, std::span<const Vertex> removed);

}  // namespace gfvs
