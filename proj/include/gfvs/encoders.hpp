#pragma once

#include <span>
#include <vector>

#include "gfvs/instance.hpp"
#include "gfvs/undirected_graph.hpp"

namespace gfvs {

/// Edge Subset FVS: hit every cycle that uses at least one special edge.
/// `special_edges` index into graph.edges().
struct EsfvsInstance {
  UndirectedGraph graph;
  std::vector<int> special_edges;
  int budget = 0;
};

// All encoders keep the input vertex ids 0..n-1 and append any auxiliary
// vertices after them. A parallel edge is subdivided by a fresh vertex; the
// first half carries the edge's label and the second half the identity.

/// Labels the i-th special edge with the i-th basis vector of Z_2^|S| and
/// every other edge with the identity. An empty S uses Z_2^1.
GfvsInstance encode_esfvs(const EsfvsInstance& instance);

/// Feedback Vertex Set as ESFVS with every edge special.
GfvsInstance encode_fvs(const UndirectedGraph& graph, int budget);

/// Odd Cycle Transversal: Z_2 with every edge labeled 1.
GfvsInstance encode_oct(const UndirectedGraph& graph, int budget);

/// Vertex Multiway Cut. Terminals are merged into one hub vertex (id n);
/// the hub end of a former edge to terminal i carries residue i of
/// Z_|T|, all other edges the identity. Two adjacent terminals become a
/// two-vertex path through the hub. A second link between the hub and one
/// vertex is subdivided. The hub, the path vertices and the subdivision
/// vertices are made undeletable with apply_forbidden_gadget, so every
/// solution consists of original non-terminal vertices. The former terminal vertices
/// stay behind as isolated vertices.
GfvsInstance encode_mwc(const UndirectedGraph& graph, std::span<const Vertex> terminals,
                        int budget);

/// Replaces each forbidden vertex v by a clique of budget+1 copies joined by
/// identity arcs: v keeps its id, the other copies are appended and inherit
/// every arc of v.
GfvsInstance apply_forbidden_gadget(const GfvsInstance& instance,
                                    std::span<const Vertex> forbidden);

}  // namespace gfvs
