#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "gfvs/compression.hpp"
#include "gfvs/instance.hpp"

namespace gfvs {

struct SolveStats {
  std::int64_t compression_calls = 0;
  std::int64_t steps_kept = 0;  ///< steps where the previous solution still worked
  CompressionStats compression;
};

struct SolveOptions {
  /// Worker threads for boundary-labeling trials (see CompressionOptions).
  int threads = 0;
  /// Re-verify the partial solution after every induction step; throws
  /// std::logic_error on failure. Test aid.
  bool check_steps = false;
  SolveStats* stats = nullptr;
};

/// Iterative compression over vertices in ascending id order. Each step adds
/// v_i to the previous solution; if that reaches budget+1 vertices, every
/// subset to keep (largest first) is handed to solve_compression with budget
/// |kept| - 1. Returns a set of at most `budget` vertices hitting every
/// non-null cycle, or nullopt if none exists.
std::optional<VertexSet> solve(const GfvsInstance& instance, const SolveOptions& options = {});

/// Smallest solution: solve() with budgets 0, 1, ..., instance.budget.
std::optional<VertexSet> solve_minimum(const GfvsInstance& instance,
                                       const SolveOptions& options = {});

/// Solves with the forbidden-vertex gadget applied, then drops gadget copies
/// and forbidden vertices from the answer (a surviving copy in each clique
/// keeps the rest valid).
std::optional<VertexSet> solve_avoiding(const GfvsInstance& instance,
                                        std::span<const Vertex> forbidden, bool minimum,
                                        const SolveOptions& options = {});

struct Verification {
  bool valid = false;
  bool over_budget = false;
  std::optional<NonNullWitness> witness;
};

/// Checks |removed| <= budget and that graph \ removed has no non-null cycle.
Verification verify(const GfvsInstance& instance, std::span<const Vertex> removed);

}  // namespace gfvs
