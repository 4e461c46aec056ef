#pragma once

#include <optional>
#include <span>

#include "gfvs/undirected_graph.hpp"

namespace gfvs {

/// Vertex Multiway Cut: delete at most `budget` non-terminals so that no two
/// terminals share a connected component.
struct MwcInstance {
  UndirectedGraph graph;
  VertexSet terminals;
  int budget = 0;
};

struct MwcStats {
  long long search_nodes = 0;
};

/// Branches on the minimum vertex cut between one terminal's side and the
/// other terminals that lies closest to the other terminals: the cut vertex
/// is either deleted or pulled onto the terminal's side. Both branches drop
/// 2*budget - cut by at least one, so each budget explores O(4^budget)
/// leaves. Budgets are tried in increasing order, so the returned set is a
/// minimum one. Returns nullopt when no cut of size <= budget exists.
std::optional<VertexSet> solve_mwc(const MwcInstance& instance, MwcStats* stats = nullptr);

/// Flood-fill check that `removed` avoids terminals and pairwise separates them.
bool separates_terminals(const UndirectedGraph& graph, std::span<const Vertex> terminals,
                         std::span<const Vertex> removed);

}  // namespace gfvs
