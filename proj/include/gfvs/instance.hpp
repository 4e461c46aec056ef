#pragma once

#include "gfvs/labeled_graph.hpp"

namespace gfvs {

/// Find at most `budget` vertices hitting every non-null cycle of `graph`.
struct GfvsInstance {
  LabeledGraph graph;
  int budget = 0;
};

/// Compression variant: `current_solution` already hits every non-null
/// cycle; find at most `budget` vertices disjoint from it that do too.
struct CompressionInstance {
  LabeledGraph graph;
  int budget = 0;
  VertexSet current_solution;
};

}  // namespace gfvs
