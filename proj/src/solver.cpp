#include "gfvs/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gfvs/combinations.hpp"
#include "gfvs/encoders.hpp"

namespace gfvs {

std::optional<VertexSet> solve(const GfvsInstance& instance, const SolveOptions& options) {
  if (instance.budget < 0) return std::nullopt;
  SolveStats local_stats;
  SolveStats& stats = options.stats ? *options.stats : local_stats;
  CompressionOptions compression_options{options.threads, &stats.compression};

  const LabeledGraph& graph = instance.graph;
  const int k = instance.budget;
  std::vector<Vertex> prefix;
  VertexSet solution;
  for (Vertex v : graph.vertices()) {
    prefix.push_back(v);
    LabeledGraph step_graph = graph.induced(prefix);
    if (is_solution(step_graph, solution)) {
      ++stats.steps_kept;
      continue;
    }
    VertexSet grown = solution;
    grown.push_back(v);
    if (static_cast<int>(grown.size()) <= k) {
      solution = std::move(grown);
    } else {
      std::optional<VertexSet> next;
      for (int keep = k + 1; keep >= 1 && !next; --keep) {
        for_each_combination(k + 1, keep, [&](const std::vector<int>& pick) {
          VertexSet kept;
          VertexSet dropped;
          std::size_t p = 0;
          for (int i = 0; i <= k; ++i) {
            if (p < pick.size() && pick[p] == i) {
              kept.push_back(grown[i]);
              ++p;
            } else {
              dropped.push_back(grown[i]);
            }
          }
          ++stats.compression_calls;
          CompressionInstance sub{step_graph.delete_vertices(dropped), keep - 1, kept};
          auto found = solve_compression(sub, compression_options);
          if (!found) return false;
          dropped.insert(dropped.end(), found->begin(), found->end());
          next = make_vertex_set(std::move(dropped));
          return true;
        });
      }
      if (!next) return std::nullopt;
      solution = std::move(*next);
    }
    if (options.check_steps &&
        (static_cast<int>(solution.size()) > k || !is_solution(step_graph, solution))) {
      throw std::logic_error("induction step " + std::to_string(v) + " lost its solution");
    }
  }
  return solution;
}

std::optional<VertexSet> solve_minimum(const GfvsInstance& instance, const SolveOptions& options) {
  for (int budget = 0; budget <= instance.budget; ++budget) {
    if (auto found = solve(GfvsInstance{instance.graph, budget}, options)) return found;
  }
  return std::nullopt;
}

std::optional<VertexSet> solve_avoiding(const GfvsInstance& instance,
                                        std::span<const Vertex> forbidden, bool minimum,
                                        const SolveOptions& options) {
  if (forbidden.empty()) return minimum ? solve_minimum(instance, options) : solve(instance, options);
  auto run = [&](int budget) -> std::optional<VertexSet> {
    GfvsInstance gadget = apply_forbidden_gadget(GfvsInstance{instance.graph, budget}, forbidden);
    auto found = solve(gadget, options);
    if (!found) return std::nullopt;
    VertexSet banned = make_vertex_set({forbidden.begin(), forbidden.end()});
    VertexSet kept;
    for (Vertex v : *found) {
      if (v < instance.graph.slot_count() && !std::ranges::binary_search(banned, v)) kept.push_back(v);
    }
    if (!is_solution(instance.graph, kept)) {
      throw std::logic_error("forbidden-vertex projection produced an invalid set");
    }
    return kept;
  };
  if (!minimum) return run(instance.budget);
  for (int budget = 0; budget <= instance.budget; ++budget) {
    if (auto found = run(budget)) return found;
  }
  return std::nullopt;
}

Verification verify(const GfvsInstance& instance, std::span<const Vertex> removed) {
  Verification out;
  VertexSet set = make_vertex_set({removed.begin(), removed.end()});
  for (Vertex v : set) {
    if (!instance.graph.contains(v)) throw UsageError("vertex " + std::to_string(v) + " not in graph");
  }
  out.over_budget = static_cast<int>(set.size()) > instance.budget;
  auto result = find_consistent_labeling(instance.graph.delete_vertices(set));
  if (auto* witness = std::get_if<NonNullWitness>(&result)) out.witness = std::move(*witness);
  out.valid = !out.over_budget && !out.witness;
  return out;
}

}  // namespace gfvs
