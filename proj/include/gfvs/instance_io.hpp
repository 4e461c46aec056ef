#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfvs/encoders.hpp"
#include "gfvs/instance.hpp"
#include "gfvs/multiway_cut.hpp"

namespace gfvs {

/// One undirected edge of an instance file, stored with u < v. `label` is the
/// label of the arc u -> v and is empty in plain (group-less) files.
struct FileEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Element> label;
};

/// Parsed form of the line-oriented instance format:
///
///   group <kind> [params]     optional; plain graphs omit it
///   vertices <n>
///   param <k>
///   edge <u> <v> [label]      both arcs; label required iff a group is set
///   arc <u> <v> <label>       one arc; the reverse is completed with the inverse
///   terminal <v>
///   special <u> <v>
///   forbidden <v>
///
/// `#` starts a comment. `group free` without a rank takes 1 + the largest
/// generator id used by any label.
struct InstanceFile {
  std::shared_ptr<const Group> group;
  int vertex_count = 0;
  std::optional<int> budget;
  /// Sorted by (u, v); parallel entries only occur in plain files.
  std::vector<FileEdge> edges;
  VertexSet terminals;
  VertexSet forbidden;
  /// Endpoint pairs with u < v, sorted, one entry per special record.
  std::vector<std::pair<Vertex, Vertex>> special;
};

/// Throws UsageError prefixed with "line N:" on malformed input.
InstanceFile parse_instance(std::string_view text);

/// Canonical text; parse_instance(serialize_instance(f)) reproduces f.
std::string serialize_instance(const InstanceFile& file);

/// Requires a group and a param record.
GfvsInstance to_gfvs(const InstanceFile& file);
/// Edge multiset without labels.
UndirectedGraph to_undirected(const InstanceFile& file);
/// Each special record marks one not yet marked edge between its endpoints.
EsfvsInstance to_esfvs(const InstanceFile& file);
MwcInstance to_mwc(const InstanceFile& file);

InstanceFile to_file(const GfvsInstance& instance, const VertexSet& forbidden = {});

}  // namespace gfvs
