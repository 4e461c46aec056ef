#pragma once

#include <memory>
#include <random>

#include "gfvs/instance.hpp"
#include "gfvs/multiway_cut.hpp"
#include "gfvs/undirected_graph.hpp"

namespace gfvs {

/// Simple graph with `edges` distinct edges chosen uniformly (capped at the
/// number of vertex pairs).
UndirectedGraph random_simple_graph(int vertices, int edges, std::mt19937_64& rng);

/// random_simple_graph with a random label on every edge.
LabeledGraph random_labeled_graph(std::shared_ptr<const Group> group, int vertices, int edges,
                                  std::mt19937_64& rng);

/// Random labeled graph in which every non-null cycle meets `planted`: arcs
/// avoiding it get labels inv(p(u)) * p(v) for a random potential p, arcs
/// touching it get random labels.
LabeledGraph random_planted_graph(std::shared_ptr<const Group> group, int vertices, int edges,
                                  const VertexSet& planted, std::mt19937_64& rng);

/// Random compression instance: a planted current solution of `solution_size`
/// random vertices.
CompressionInstance random_compression_instance(std::shared_ptr<const Group> group, int vertices,
                                                int edges, int solution_size, int budget,
                                                std::mt19937_64& rng);

/// Random Multiway Cut instance with `terminal_count` random terminals.
MwcInstance random_mwc_instance(int vertices, int edges, int terminal_count, int budget,
                                std::mt19937_64& rng);

/// `count` distinct random vertices of 0..vertices-1.
VertexSet random_vertex_subset(int vertices, int count, std::mt19937_64& rng);

}  // namespace gfvs
