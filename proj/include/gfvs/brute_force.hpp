#pragma once

#include <optional>

#include "gfvs/instance.hpp"
#include "gfvs/multiway_cut.hpp"

namespace gfvs {

/// Reference oracles: exhaustive search over vertex subsets in order of size,
/// then lexicographically, so the first hit is a minimum solution. They
/// refuse graphs with more than kBruteForceLimit vertices.
inline constexpr int kBruteForceLimit = 20;

std::optional<VertexSet> brute_gfvs(const GfvsInstance& instance);

/// As brute_gfvs but only subsets disjoint from the current solution.
std::optional<VertexSet> brute_restricted_gfvs(const CompressionInstance& instance);

std::optional<VertexSet> brute_mwc(const MwcInstance& instance);

}  // namespace gfvs
