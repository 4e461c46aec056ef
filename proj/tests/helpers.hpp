#pragma once

#include <memory>
#include <vector>

#include "gfvs/group.hpp"
#include "gfvs/labeled_graph.hpp"

namespace testing {

inline std::shared_ptr<const gfvs::CyclicGroup> cyclic(int n) {
  return std::make_shared<gfvs::CyclicGroup>(n);
}

/// Cycle 0-1-...-(n-1)-0 with every forward arc labeled residue `label`.
inline gfvs::LabeledGraph cyclic_ring(int order, int n, int label) {
  auto group = cyclic(order);
  gfvs::LabeledGraph g(group, n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, group->element(label));
  return g;
}

}  // namespace testing
