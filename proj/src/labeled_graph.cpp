#include "gfvs/labeled_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gfvs {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::ranges::sort(vertices);
  auto dup = std::ranges::unique(vertices);
  vertices.erase(dup.begin(), dup.end());
  return vertices;
}

LabeledGraph::LabeledGraph(std::shared_ptr<const Group> group, int vertex_count)
    : group_(std::move(group)),
      out_(vertex_count),
      active_(vertex_count, 1),
      active_count_(vertex_count) {
  if (!group_) throw UsageError("labeled graph needs a group");
  if (vertex_count < 0) throw UsageError("negative vertex count");
}

std::vector<Vertex> LabeledGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(active_count_);
  for (Vertex v = 0; v < slot_count(); ++v) {
    if (active_[v]) out.push_back(v);
  }
  return out;
}

Vertex LabeledGraph::add_vertex() {
  out_.emplace_back();
  active_.push_back(1);
  ++active_count_;
  return slot_count() - 1;
}

void LabeledGraph::check_vertex(Vertex v) const {
  if (!contains(v)) throw UsageError("vertex " + std::to_string(v) + " not in graph");
}

Arc* LabeledGraph::find_arc(Vertex u, Vertex v) {
  for (auto& a : out_[u]) {
    if (a.head == v) return &a;
  }
  return nullptr;
}

void LabeledGraph::add_edge(Vertex u, Vertex v, const Element& g) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  if (find_arc(u, v) != nullptr) {
    throw UsageError("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  Element back = group_->inv(g);
  out_[u].push_back({v, g});
  out_[v].push_back({u, std::move(back)});
  ++edge_count_;
}

void LabeledGraph::set_label(Vertex u, Vertex v, const Element& g) {
  check_vertex(u);
  check_vertex(v);
  Arc* forward = find_arc(u, v);
  Arc* backward = find_arc(v, u);
  if (forward == nullptr || backward == nullptr) {
    throw UsageError("no arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  backward->label = group_->inv(g);
  forward->label = g;
}

std::span<const Arc> LabeledGraph::arcs_from(Vertex u) const {
  check_vertex(u);
  return out_[u];
}

const Element* LabeledGraph::label(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return nullptr;
  for (const auto& a : out_[u]) {
    if (a.head == v) return &a.label;
  }
  return nullptr;
}

LabeledGraph LabeledGraph::delete_vertices(std::span<const Vertex> removed) const {
  LabeledGraph out = *this;
  std::vector<char> gone(slot_count(), 0);
  for (Vertex v : removed) {
    if (contains(v)) gone[v] = 1;
  }
  for (Vertex v = 0; v < slot_count(); ++v) {
    if (gone[v]) {
      out.out_[v].clear();
      out.active_[v] = 0;
      --out.active_count_;
      continue;
    }
    auto& arcs = out.out_[v];
    std::erase_if(arcs, [&](const Arc& a) { return gone[a.head] != 0; });
  }
  int arcs = 0;
  for (const auto& list : out.out_) arcs += static_cast<int>(list.size());
  out.edge_count_ = arcs / 2;
  return out;
}

LabeledGraph LabeledGraph::induced(std::span<const Vertex> kept) const {
  std::vector<char> keep(slot_count(), 0);
  for (Vertex v : kept) {
    if (contains(v)) keep[v] = 1;
  }
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < slot_count(); ++v) {
    if (active_[v] && !keep[v]) removed.push_back(v);
  }
  return delete_vertices(removed);
}

const Element& Labeling::at(Vertex v) const {
  if (!has(v)) throw UsageError("vertex " + std::to_string(v) + " is not labeled");
  return *values_[v];
}

void Labeling::set(Vertex v, Element g) {
  if (v < 0) throw UsageError("negative vertex id");
  if (v >= slot_count()) values_.resize(v + 1);
  values_[v] = std::move(g);
}

Element path_value(const LabeledGraph& graph, std::span<const Vertex> walk) {
  const Group& group = graph.group();
  Element value = group.identity();
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const Element* a = graph.label(walk[i], walk[i + 1]);
    if (a == nullptr) {
      throw UsageError("walk uses missing arc (" + std::to_string(walk[i]) + "," +
                       std::to_string(walk[i + 1]) + ")");
    }
    value = group.mul(value, *a);
  }
  return value;
}

Element cycle_value(const LabeledGraph& graph, std::span<const Vertex> walk) {
  if (walk.empty()) throw UsageError("empty cycle");
  std::vector<Vertex> closed(walk.begin(), walk.end());
  closed.push_back(walk.front());
  return path_value(graph, closed);
}

bool is_consistent(const LabeledGraph& graph, const Labeling& labeling) {
  const Group& group = graph.group();
  for (Vertex u : graph.vertices()) {
    if (!labeling.has(u)) return false;
    for (const auto& a : graph.arcs_from(u)) {
      if (!labeling.has(a.head)) return false;
      if (!group.eq(labeling.at(a.head), group.mul(labeling.at(u), a.label))) return false;
    }
  }
  return true;
}

namespace {

// Shrinks a non-null closed walk to a simple non-null cycle. Splitting at a
// repeated vertex factors the walk value as A * B * C with B the inner loop;
// if B is null then the outer walk has value A * C, which is non-null.
std::vector<Vertex> simple_non_null_subcycle(const LabeledGraph& graph, std::vector<Vertex> walk) {
  const Group& group = graph.group();
  while (true) {
    std::vector<int> last(graph.slot_count(), -1);
    std::size_t i = 0;
    std::size_t j = 0;
    bool repeated = false;
    for (j = 0; j < walk.size(); ++j) {
      if (last[walk[j]] >= 0) {
        i = static_cast<std::size_t>(last[walk[j]]);
        repeated = true;
        break;
      }
      last[walk[j]] = static_cast<int>(j);
    }
    if (!repeated) return walk;
    std::vector<Vertex> inner(walk.begin() + i, walk.begin() + j);
    if (!group.is_identity(cycle_value(graph, inner))) {
      walk = std::move(inner);
    } else {
      walk.erase(walk.begin() + i, walk.begin() + j);
    }
  }
}

std::vector<Vertex> path_to_root(Vertex v, const std::vector<Vertex>& parent) {
  std::vector<Vertex> path{v};
  while (parent[v] >= 0) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

}  // namespace

std::variant<Labeling, NonNullWitness> find_consistent_labeling(const LabeledGraph& graph) {
  const Group& group = graph.group();
  Labeling labeling(graph.slot_count());
  std::vector<Vertex> parent(graph.slot_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex root : graph.vertices()) {
    if (labeling.has(root)) continue;
    labeling.set(root, group.identity());
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const auto& a : graph.arcs_from(u)) {
        Element expected = group.mul(labeling.at(u), a.label);
        if (!labeling.has(a.head)) {
          labeling.set(a.head, std::move(expected));
          parent[a.head] = u;
          queue.push_back(a.head);
          continue;
        }
        if (group.eq(labeling.at(a.head), expected)) continue;
        // root .. u, then v .. (child of root); the closing arc reaches root.
        auto up = path_to_root(u, parent);
        std::vector<Vertex> walk(up.rbegin(), up.rend());
        auto down = path_to_root(a.head, parent);
        walk.insert(walk.end(), down.begin(), down.end() - 1);
        auto cycle = simple_non_null_subcycle(graph, std::move(walk));
        Element value = cycle_value(graph, cycle);
        return NonNullWitness{std::move(cycle), std::move(value)};
      }
    }
  }
  return labeling;
}

bool is_solution(const LabeledGraph& graph, std::span<const Vertex> removed) {
  auto rest = graph.delete_vertices(removed);
  return std::holds_alternative<Labeling>(find_consistent_labeling(rest));
}

}  // namespace gfvs
