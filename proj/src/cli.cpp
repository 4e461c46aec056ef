#include "gfvs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "gfvs/brute_force.hpp"
#include "gfvs/instance_io.hpp"
#include "gfvs/random_instances.hpp"
#include "gfvs/solver.hpp"

namespace gfvs {
namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int threads_from_env() {
  const char* value = std::getenv("GFVS_THREADS");
  if (!value || !*value) return 0;
  char* end = nullptr;
  long n = std::strtol(value, &end, 10);
  if (*end != '\0' || n < 0 || n > 1024) throw UsageError("GFVS_THREADS must be 0..1024");
  return static_cast<int>(n);
}

std::string format_set(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out + "}";
}

int report(std::ostream& out, int budget, const std::optional<VertexSet>& solution) {
  if (!solution) {
    out << "NO\n";
    return kExitNo;
  }
  out << "YES k=" << budget << " |X|=" << solution->size() << " X=" << format_set(*solution)
      << '\n';
  return kExitYes;
}

void report_witness(std::ostream& out, const Group& group, const NonNullWitness& witness) {
  out << "witness cycle:";
  for (Vertex v : witness.cycle) out << ' ' << v;
  out << "\nwitness value: " << group.format(witness.value) << '\n';
}

/// Accepts ids separated by commas and/or whitespace; braces are ignored.
VertexSet parse_id_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '{' || c == '}') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<Vertex> ids;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageError("bad vertex id '" + token + "' in solution");
    ids.push_back(v);
  }
  return make_vertex_set(std::move(ids));
}

int cmd_solve(const std::string& path, bool any, std::ostream& out) {
  InstanceFile file = read_instance(path);
  GfvsInstance instance = to_gfvs(file);
  SolveOptions options{threads_from_env(), false, nullptr};
  auto solution = solve_avoiding(instance, file.forbidden, !any, options);
  return report(out, instance.budget, solution);
}

int cmd_solve_mwc(const std::string& path, std::ostream& out) {
  MwcInstance instance = to_mwc(read_instance(path));
  return report(out, instance.budget, solve_mwc(instance));
}

int cmd_verify(const std::string& path, const std::string& ids, std::ostream& out) {
  InstanceFile file = read_instance(path);
  GfvsInstance instance = to_gfvs(file);
  VertexSet solution = parse_id_list(ids);
  Verification check = verify(instance, solution);
  VertexSet clash;
  std::ranges::set_intersection(solution, file.forbidden, std::back_inserter(clash));
  if (check.valid && clash.empty()) return report(out, instance.budget, solution);
  out << "NO\n";
  if (check.over_budget) {
    out << "over budget: |X|=" << solution.size() << " > k=" << instance.budget << '\n';
  }
  if (!clash.empty()) out << "forbidden vertices used: " << format_set(clash) << '\n';
  if (check.witness) report_witness(out, instance.graph.group(), *check.witness);
  return kExitNo;
}

int cmd_convert(const std::string& from, const std::string& path, const std::string& output,
                std::ostream& out) {
  InstanceFile file = read_instance(path);
  if (!file.budget) throw UsageError("instance has no param record");
  GfvsInstance encoded = [&] {
    if (from == "fvs") return encode_fvs(to_undirected(file), *file.budget);
    if (from == "oct") return encode_oct(to_undirected(file), *file.budget);
    if (from == "esfvs") return encode_esfvs(to_esfvs(file));
    return encode_mwc(to_undirected(file), file.terminals, *file.budget);
  }();
  std::string text = serialize_instance(to_file(encoded, file.forbidden));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream sink(output);
    if (!(sink << text)) throw UsageError("cannot write " + output);
  }
  return kExitYes;
}

int cmd_brute(const std::string& path, std::ostream& out) {
  InstanceFile file = read_instance(path);
  if (file.group) {
    GfvsInstance instance = to_gfvs(file);
    // Restricting to V \ forbidden is exactly the compression oracle with
    // the forbidden set in place of the current solution.
    CompressionInstance restricted{instance.graph, instance.budget, file.forbidden};
    return report(out, instance.budget, brute_restricted_gfvs(restricted));
  }
  if (!file.terminals.empty()) {
    MwcInstance instance = to_mwc(file);
    return report(out, instance.budget, brute_mwc(instance));
  }
  throw UsageError("brute needs a group or terminal records");
}

struct BenchConfig {
  std::uint64_t seed = 1;
  int count = 5;
  int vertices = 60;
  int edges = 120;
  int budget = 4;
  std::string group = "z2pow 2";
};

int cmd_bench(const BenchConfig& config, std::ostream& out) {
  auto group = parse_group(config.group);
  std::mt19937_64 rng(config.seed);
  SolveOptions options{threads_from_env(), false, nullptr};
  bool all_ok = true;
  double worst = 0;
  for (int i = 0; i < config.count; ++i) {
    VertexSet planted = random_vertex_subset(config.vertices, config.budget, rng);
    GfvsInstance instance{
        random_planted_graph(group, config.vertices, config.edges, planted, rng), config.budget};
    auto start = std::chrono::steady_clock::now();
    auto solution = solve(instance, options);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst = std::max(worst, seconds);
    bool ok = solution && verify(instance, *solution).valid;
    all_ok = all_ok && ok;
    out << "instance " << i << ": n=" << config.vertices << " m=" << instance.graph.edge_count()
        << " k=" << config.budget << ' ' << (solution ? "YES" : "NO");
    if (solution) out << " |X|=" << solution->size() << (ok ? "" : " INVALID");
    out << " time=" << seconds << "s\n";
  }
  out << "worst time=" << worst << "s\n";
  return all_ok ? kExitYes : kExitNo;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group Feedback Vertex Set solver", "gfvs"};
  app.require_subcommand(1);

  std::string path;
  bool any = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a GFVS instance (minimum solution)");
  solve_cmd->add_option("file", path, "Instance file")->required();
  solve_cmd->add_flag("--any", any, "Return any solution within the budget");

  auto* mwc_cmd = app.add_subcommand("solve-mwc", "Solve a Vertex Multiway Cut instance");
  mwc_cmd->add_option("file", path, "Instance file")->required();

  std::string ids;
  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate solution");
  verify_cmd->add_option("file", path, "Instance file")->required();
  verify_cmd->add_option("--solution", ids, "Vertex ids, comma or space separated")->required();

  std::string from;
  std::string output;
  auto* convert_cmd = app.add_subcommand("convert", "Encode a classic problem as GFVS");
  convert_cmd->add_option("--from", from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"fvs", "oct", "mwc", "esfvs"}));
  convert_cmd->add_option("file", path, "Instance file")->required();
  convert_cmd->add_option("-o,--output", output, "Write here instead of stdout");

  auto* brute_cmd = app.add_subcommand("brute", "Exhaustive reference solver");
  brute_cmd->add_option("file", path, "Instance file")->required();

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on planted random instances");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--count", bench.count, "Number of instances")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--vertices", bench.vertices, "Vertices per instance")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--edges", bench.edges, "Edges per instance")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--budget", bench.budget, "Planted solution size and parameter")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--group", bench.group, "Group descriptor, e.g. \"cyclic 3\"");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(path, any, out);
    if (*mwc_cmd) return cmd_solve_mwc(path, out);
    if (*verify_cmd) return cmd_verify(path, ids, out);
    if (*convert_cmd) return cmd_convert(from, path, output, out);
    if (*brute_cmd) return cmd_brute(path, out);
    return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gfvs
