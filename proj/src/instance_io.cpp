#include "gfvs/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "gfvs/group.hpp"

namespace gfvs {
namespace {

struct Record {
  int line = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw UsageError("line " + std::to_string(line) + ": " + message);
}

std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> records;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Record record{line_no, {}};
    std::istringstream in{std::string(line)};
    for (std::string token; in >> token;) record.tokens.push_back(std::move(token));
    if (!record.tokens.empty()) records.push_back(std::move(record));
  }
  return records;
}

int to_int(const Record& record, std::size_t index, const char* what) {
  if (index >= record.tokens.size()) fail(record.line, std::string("missing ") + what);
  const std::string& token = record.tokens[index];
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(record.line, std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

std::string rest_of(const Record& record, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < record.tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += record.tokens[i];
  }
  return out;
}

void expect_arity(const Record& record, std::size_t count) {
  if (record.tokens.size() != count) {
    fail(record.line, "'" + record.tokens[0] + "' takes " + std::to_string(count - 1) +
                          " argument(s)");
  }
}

/// 1 + the largest N among tokens gN / gN^ in any label, at least 1.
int inferred_free_rank(const std::vector<Record>& records) {
  int rank = 1;
  for (const Record& record : records) {
    if (record.tokens[0] != "edge" && record.tokens[0] != "arc") continue;
    for (std::size_t i = 3; i < record.tokens.size(); ++i) {
      std::string_view token = record.tokens[i];
      if (token.size() < 2 || token[0] != 'g') continue;
      if (token.back() == '^') token.remove_suffix(1);
      int id = 0;
      auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), id);
      if (ec == std::errc{} && ptr == token.data() + token.size()) rank = std::max(rank, id + 1);
    }
  }
  return rank;
}

/// Pairing state of one vertex pair u < v in a labeled file.
struct PairState {
  Element label;  // arc u -> v
  bool forward = false;
  bool backward = false;
};

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  auto records = tokenize(text);
  InstanceFile file;
  bool have_vertices = false;

  for (const Record& r : records) {
    const std::string& kind = r.tokens[0];
    if (kind == "group") {
      if (file.group) fail(r.line, "duplicate group record");
      if (r.tokens.size() < 2) fail(r.line, "missing group kind");
      try {
        if (r.tokens[1] == "free" && r.tokens.size() == 2) {
          file.group = std::make_shared<FreeGroup>(inferred_free_rank(records));
        } else {
          file.group = parse_group(rest_of(r, 1));
        }
      } catch (const UsageError& e) {
        fail(r.line, e.what());
      }
    } else if (kind == "vertices") {
      expect_arity(r, 2);
      if (have_vertices) fail(r.line, "duplicate vertices record");
      file.vertex_count = to_int(r, 1, "vertex count");
      if (file.vertex_count < 0) fail(r.line, "negative vertex count");
      have_vertices = true;
    } else if (kind == "param") {
      expect_arity(r, 2);
      if (file.budget) fail(r.line, "duplicate param record");
      file.budget = to_int(r, 1, "parameter");
      if (*file.budget < 0) fail(r.line, "negative parameter");
    } else if (kind != "edge" && kind != "arc" && kind != "terminal" && kind != "special" &&
               kind != "forbidden") {
      fail(r.line, "unknown record '" + kind + "'");
    }
  }
  if (!have_vertices) throw UsageError("missing vertices record");

  auto vertex_at = [&](const Record& r, std::size_t index) {
    int v = to_int(r, index, "vertex");
    if (v < 0 || v >= file.vertex_count) fail(r.line, "vertex " + std::to_string(v) + " out of range");
    return v;
  };

  std::map<std::pair<Vertex, Vertex>, PairState> pairs;
  std::vector<Vertex> terminals;
  std::vector<Vertex> forbidden;
  for (const Record& r : records) {
    const std::string& kind = r.tokens[0];
    if (kind == "edge" || kind == "arc") {
      Vertex u = vertex_at(r, 1);
      Vertex v = vertex_at(r, 2);
      if (u == v) fail(r.line, "self-loop at " + std::to_string(u));
      if (!file.group) {
        if (kind == "arc") fail(r.line, "arc records need a group");
        if (r.tokens.size() != 3) fail(r.line, "label given but no group declared");
        file.edges.push_back({std::min(u, v), std::max(u, v), std::nullopt});
        continue;
      }
      if (r.tokens.size() < 4) fail(r.line, "missing label");
      Element g;
      try {
        g = file.group->parse(rest_of(r, 3));
      } catch (const UsageError& e) {
        fail(r.line, e.what());
      }
      bool flipped = u > v;
      if (flipped) {
        std::swap(u, v);
        g = file.group->inv(g);
      }
      auto [it, fresh] = pairs.try_emplace({u, v});
      PairState& state = it->second;
      bool fwd = kind == "edge" || !flipped;
      bool bwd = kind == "edge" || flipped;
      if ((fwd && state.forward) || (bwd && state.backward)) {
        fail(r.line, "duplicate arc between " + std::to_string(u) + " and " + std::to_string(v));
      }
      if (fresh) {
        state.label = g;
      } else if (!file.group->eq(state.label, g)) {
        fail(r.line, "pairing conflict between " + std::to_string(u) + " and " + std::to_string(v) +
                         ": labels are not mutually inverse");
      }
      state.forward = state.forward || fwd;
      state.backward = state.backward || bwd;
    } else if (kind == "terminal") {
      expect_arity(r, 2);
      terminals.push_back(vertex_at(r, 1));
    } else if (kind == "forbidden") {
      expect_arity(r, 2);
      forbidden.push_back(vertex_at(r, 1));
    } else if (kind == "special") {
      expect_arity(r, 3);
      Vertex u = vertex_at(r, 1);
      Vertex v = vertex_at(r, 2);
      if (u == v) fail(r.line, "special record on a self-loop");
      file.special.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  for (auto& [key, state] : pairs) file.edges.push_back({key.first, key.second, state.label});
  std::ranges::stable_sort(file.edges, {}, [](const FileEdge& e) { return std::pair(e.u, e.v); });
  std::ranges::sort(file.special);
  file.terminals = make_vertex_set(std::move(terminals));
  file.forbidden = make_vertex_set(std::move(forbidden));
  if (file.terminals.size() != static_cast<std::size_t>(std::ranges::count_if(
                                   records, [](const Record& r) { return r.tokens[0] == "terminal"; }))) {
    throw UsageError("duplicate terminal record");
  }
  return file;
}

std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream out;
  if (file.group) out << "group " << file.group->descriptor() << '\n';
  out << "vertices " << file.vertex_count << '\n';
  if (file.budget) out << "param " << *file.budget << '\n';
  for (const FileEdge& e : file.edges) {
    out << "edge " << e.u << ' ' << e.v;
    if (e.label) out << ' ' << file.group->format(*e.label);
    out << '\n';
  }
  for (Vertex t : file.terminals) out << "terminal " << t << '\n';
  for (auto [u, v] : file.special) out << "special " << u << ' ' << v << '\n';
  for (Vertex f : file.forbidden) out << "forbidden " << f << '\n';
  return out.str();
}

GfvsInstance to_gfvs(const InstanceFile& file) {
  if (!file.group) throw UsageError("instance declares no group");
  if (!file.budget) throw UsageError("instance has no param record");
  LabeledGraph graph(file.group, file.vertex_count);
  for (const FileEdge& e : file.edges) graph.add_edge(e.u, e.v, *e.label);
  return GfvsInstance{std::move(graph), *file.budget};
}

UndirectedGraph to_undirected(const InstanceFile& file) {
  UndirectedGraph graph(file.vertex_count);
  for (const FileEdge& e : file.edges) graph.add_edge(e.u, e.v);
  return graph;
}

EsfvsInstance to_esfvs(const InstanceFile& file) {
  if (!file.budget) throw UsageError("instance has no param record");
  EsfvsInstance out{to_undirected(file), {}, *file.budget};
  std::vector<char> marked(file.edges.size(), 0);
  for (auto [u, v] : file.special) {
    bool found = false;
    for (std::size_t i = 0; i < file.edges.size() && !found; ++i) {
      if (!marked[i] && file.edges[i].u == u && file.edges[i].v == v) {
        marked[i] = 1;
        out.special_edges.push_back(static_cast<int>(i));
        found = true;
      }
    }
    if (!found) {
      throw UsageError("special record " + std::to_string(u) + " " + std::to_string(v) +
                       " matches no unmarked edge");
    }
  }
  std::ranges::sort(out.special_edges);
  return out;
}

MwcInstance to_mwc(const InstanceFile& file) {
  if (!file.budget) throw UsageError("instance has no param record");
  return MwcInstance{to_undirected(file), file.terminals, *file.budget};
}

InstanceFile to_file(const GfvsInstance& instance, const VertexSet& forbidden) {
  const LabeledGraph& graph = instance.graph;
  InstanceFile file;
  file.group = graph.group_ptr();
  file.vertex_count = graph.slot_count();
  file.budget = instance.budget;
  for (Vertex u : graph.vertices()) {
    for (const Arc& arc : graph.arcs_from(u)) {
      if (u < arc.head) file.edges.push_back({u, arc.head, arc.label});
    }
  }
  std::ranges::sort(file.edges, {}, [](const FileEdge& e) { return std::pair(e.u, e.v); });
  file.forbidden = forbidden;
  return file;
}

}  // namespace gfvs
