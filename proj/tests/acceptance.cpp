// Acceptance suite: prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails. All expected values come from the
// exhaustive oracles in oracles.hpp or from brute_force.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gfvs/brute_force.hpp"
#include "gfvs/compression.hpp"
#include "gfvs/random_instances.hpp"
#include "gfvs/solver.hpp"
#include "oracles.hpp"

using namespace gfvs;

namespace {

// Pinned sizes and tolerances.
constexpr int kOracleInstancesPerGroup = 500;
constexpr int kCompressionInstances = 300;
constexpr int kUntangleGraphs = 200;
constexpr int kUntanglesPerGraph = 10;
constexpr int kDichotomyGraphs = 500;
constexpr int kFiringCases = 100;
constexpr int kThresholdInstances = 50;
constexpr int kEncoderInstances = 200;
constexpr int kMwcInstances = 300;
constexpr int kScalingInstances = 10;
constexpr double kScalingSecondsLimit = 60.0;
constexpr int kAllowedMismatches = 0;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome outcome = body();
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!outcome.pass) ++failures;
  std::printf("[%s] %s: %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
              outcome.detail.c_str(), seconds);
  std::fflush(stdout);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random GFVS instance for the oracle comparisons: half fully random labels,
/// half with a planted solution so both answers are common.
GfvsInstance oracle_instance(const std::shared_ptr<const Group>& group, std::mt19937_64& rng) {
  int n = uniform(rng, 3, 10);
  int m = uniform(rng, 0, 18);
  int k = uniform(rng, 0, 3);
  if (rng() % 2) return GfvsInstance{random_labeled_graph(group, n, m, rng), k};
  VertexSet planted = random_vertex_subset(n, uniform(rng, 0, 4), rng);
  return GfvsInstance{random_planted_graph(group, n, m, planted, rng), k};
}

struct OracleTally {
  int agree = 0;
  int yes = 0;
  int invalid = 0;
  std::int64_t compression_calls = 0;
  std::size_t longest_word = 0;
  int word_bound_violations = 0;
};

/// Criterion 1 body; with a free group also tracks word lengths during solve.
OracleTally oracle_equivalence(const std::shared_ptr<const Group>& group, int count,
                               std::mt19937_64& rng) {
  OracleTally tally;
  const auto* free = dynamic_cast<const FreeGroup*>(group.get());
  for (int i = 0; i < count; ++i) {
    GfvsInstance inst = oracle_instance(group, rng);
    if (free) free->reset_longest_word();
    SolveStats stats;
    auto fast = solve(inst, SolveOptions{0, false, &stats});
    tally.compression_calls += stats.compression_calls;
    if (free) {
      std::size_t longest = free->longest_word();
      tally.longest_word = std::max(tally.longest_word, longest);
      if (longest > static_cast<std::size_t>(4 * (inst.graph.edge_count() + 1))) {
        ++tally.word_bound_violations;
      }
    }
    auto slow = brute_gfvs(inst);
    if (fast.has_value() == slow.has_value()) ++tally.agree;
    if (fast) {
      ++tally.yes;
      if (!verify(inst, *fast).valid) ++tally.invalid;
    }
  }
  return tally;
}

struct DichotomyTally {
  int agree = 0;
  int witnesses = 0;
  int bad_witnesses = 0;
  int bad_labelings = 0;
};

DichotomyTally dichotomy(const std::shared_ptr<const Group>& group, int count,
                         std::mt19937_64& rng) {
  DichotomyTally tally;
  for (int i = 0; i < count; ++i) {
    int n = uniform(rng, 2, 9);
    auto g = random_labeled_graph(group, n, uniform(rng, 0, 2 * n), rng);
    bool non_null = oracle::has_non_null_cycle(g);
    auto result = find_consistent_labeling(g);
    if (std::holds_alternative<NonNullWitness>(result) == non_null) ++tally.agree;
    if (auto* w = std::get_if<NonNullWitness>(&result)) {
      ++tally.witnesses;
      auto sorted = w->cycle;
      std::ranges::sort(sorted);
      bool simple = w->cycle.size() >= 3 && std::ranges::adjacent_find(sorted) == sorted.end();
      bool closed = simple && g.has_arc(w->cycle.back(), w->cycle.front());
      for (std::size_t j = 0; closed && j + 1 < w->cycle.size(); ++j) {
        closed = g.has_arc(w->cycle[j], w->cycle[j + 1]);
      }
      if (!closed || group->is_identity(oracle::walk_value(g, w->cycle))) ++tally.bad_witnesses;
    } else if (!is_consistent(g, std::get<Labeling>(result))) {
      ++tally.bad_labelings;
    }
  }
  return tally;
}

std::string fraction(int good, int total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

std::vector<std::shared_ptr<const Group>> standard_groups() {
  return {parse_group("cyclic 2"), parse_group("cyclic 3"), parse_group("z2pow 2"),
          parse_group("symmetric 3")};
}

int optimum(const std::optional<VertexSet>& x) { return x ? static_cast<int>(x->size()) : -1; }
int optimum(const std::optional<int>& x) { return x ? *x : -1; }

int encoded_optimum(const GfvsInstance& inst) {
  return optimum(inst.graph.vertex_count() <= kBruteForceLimit ? brute_gfvs(inst)
                                                               : solve_minimum(inst));
}

/// Rotates `cycle` so that it does not start at `avoid`.
std::vector<Vertex> start_away_from(std::vector<Vertex> cycle, Vertex avoid) {
  if (cycle.front() == avoid) std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  return cycle;
}

/// Threshold-exceeding instance: solution vertices z1 = 0 and z2 = 1 joined
/// by `values.size()` internally disjoint paths, the i-th carrying values[i],
/// then disguised by untangling every vertex with a random element.
CompressionInstance threshold_instance(const std::shared_ptr<const Group>& group,
                                       const std::vector<Element>& values, int budget,
                                       std::mt19937_64& rng) {
  LabeledGraph g(group, 2);
  for (const Element& value : values) {
    int length = uniform(rng, 1, 3);
    Vertex prev = 0;
    for (int j = 0; j < length; ++j) {
      Vertex next = g.add_vertex();
      g.add_edge(prev, next, j == 0 ? value : group->identity());
      prev = next;
    }
    g.add_edge(prev, 1, group->identity());
  }
  for (Vertex v : g.vertices()) g = untangle_around(g, v, group->random_element(rng));
  return CompressionInstance{std::move(g), budget, {0, 1}};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240611);

  for (const auto& group : standard_groups()) {
    report("C1 solve vs brute_gfvs over " + group->descriptor(), [&] {
      auto t = oracle_equivalence(group, kOracleInstancesPerGroup, rng);
      bool pass = kOracleInstancesPerGroup - t.agree <= kAllowedMismatches && t.invalid == 0;
      return Outcome{pass, fraction(t.agree, kOracleInstancesPerGroup) + " agree, " +
                               std::to_string(t.yes) + " YES, " + std::to_string(t.invalid) +
                               " failed verify, " + std::to_string(t.compression_calls) +
                               " compression calls"};
    });
  }

  report("C2 solve_compression vs brute_restricted_gfvs", [&] {
    auto groups = standard_groups();
    int agree = 0, yes = 0, bad = 0;
    for (int i = 0; i < kCompressionInstances; ++i) {
      auto group = groups[i % groups.size()];
      int n = uniform(rng, 4, 10);
      auto inst = random_compression_instance(group, n, uniform(rng, 0, 18), uniform(rng, 1, 4),
                                              uniform(rng, 0, 3), rng);
      auto fast = solve_compression(inst);
      auto slow = brute_restricted_gfvs(inst);
      if (fast.has_value() == slow.has_value()) ++agree;
      if (fast) {
        ++yes;
        bool disjoint = std::ranges::none_of(*fast, [&](Vertex v) {
          return std::ranges::binary_search(inst.current_solution, v);
        });
        if (!disjoint || static_cast<int>(fast->size()) > inst.budget ||
            !is_solution(inst.graph, *fast)) {
          ++bad;
        }
      }
    }
    return Outcome{kCompressionInstances - agree <= kAllowedMismatches && bad == 0,
                   fraction(agree, kCompressionInstances) + " agree, " + std::to_string(yes) +
                       " YES, " + std::to_string(bad) + " invalid"};
  });

  report("C3 fundamental-cycle values under untangling", [&] {
    std::vector<std::shared_ptr<const Group>> groups{parse_group("symmetric 3"),
                                                     parse_group("symmetric 4"),
                                                     parse_group("cyclic 5"), parse_group("free 3")};
    long long checks = 0, violations = 0, null_flips = 0;
    for (int i = 0; i < kUntangleGraphs; ++i) {
      auto group = groups[i % groups.size()];
      int n = uniform(rng, 4, 10);
      auto g = random_labeled_graph(group, n, uniform(rng, n, 2 * n), rng);
      auto cycles = oracle::fundamental_cycles(g);
      std::vector<bool> originally_null;
      for (const auto& c : cycles) originally_null.push_back(group->is_identity(oracle::walk_value(g, c)));
      for (int step = 0; step < kUntanglesPerGraph; ++step) {
        Vertex x = uniform(rng, 0, n - 1);
        auto next = untangle_around(g, x, group->random_element(rng));
        for (std::size_t c = 0; c < cycles.size(); ++c) {
          auto walk = start_away_from(cycles[c], x);
          ++checks;
          if (!group->eq(oracle::walk_value(g, walk), oracle::walk_value(next, walk))) ++violations;
          if (group->is_identity(oracle::walk_value(next, walk)) != originally_null[c]) ++null_flips;
        }
        g = std::move(next);
      }
    }
    return Outcome{violations == 0 && null_flips == 0,
                   std::to_string(checks) + " cycle checks, " + std::to_string(violations) +
                       " value changes, " + std::to_string(null_flips) + " null-status changes"};
  });

  report("C4 labeling/witness dichotomy", [&] {
    auto groups = standard_groups();
    DichotomyTally total;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      auto t = dichotomy(groups[gi], kDichotomyGraphs / static_cast<int>(groups.size()), rng);
      total.agree += t.agree;
      total.witnesses += t.witnesses;
      total.bad_witnesses += t.bad_witnesses;
      total.bad_labelings += t.bad_labelings;
    }
    bool pass = kDichotomyGraphs - total.agree <= kAllowedMismatches && total.bad_witnesses == 0 &&
                total.bad_labelings == 0;
    return Outcome{pass, fraction(total.agree, kDichotomyGraphs) + " agree, " +
                             std::to_string(total.witnesses) + " witnesses, " +
                             std::to_string(total.bad_witnesses) + " bad witnesses"};
  });

  report("C5 reduction rule safety", [&] {
    auto groups = standard_groups();
    int fired = 0, counterexamples = 0, attempts = 0;
    while (fired < kFiringCases && attempts < 200000) {
      auto group = groups[attempts++ % groups.size()];
      int n = uniform(rng, 5, 10);
      int k = uniform(rng, 0, 2);
      auto inst = untangle_instance(random_compression_instance(
          group, n, uniform(rng, n, 2 * n), uniform(rng, 1, 3), k, rng));
      auto v = reduction_rule_scan(inst);
      if (!v) continue;
      ++fired;
      // v is in every solution iff no solution avoids it.
      VertexSet avoid = inst.current_solution;
      avoid.push_back(*v);
      if (brute_restricted_gfvs(CompressionInstance{inst.graph, k, make_vertex_set(avoid)})) {
        ++counterexamples;
      }
    }
    return Outcome{fired >= kFiringCases && counterexamples == 0,
                   std::to_string(fired) + " firings in " + std::to_string(attempts) +
                       " instances, " + std::to_string(counterexamples) + " counterexamples"};
  });

  report("C6 threshold no-instances", [&] {
    std::vector<std::shared_ptr<const Group>> groups{parse_group("cyclic 7"), parse_group("symmetric 3"),
                                                     parse_group("z2pow 3"), parse_group("free 2")};
    int built = 0, detected = 0, confirmed = 0, solver_no = 0;
    for (int i = 0; i < kThresholdInstances; ++i) {
      auto group = groups[i % groups.size()];
      int k = i % 2;
      auto needed = no_instance_threshold(k);
      std::vector<Element> values;
      while (static_cast<std::int64_t>(values.size()) < needed) {
        Element g = group->random_element(rng);
        if (rng() % 2) g = group->mul(g, group->random_element(rng));
        if (std::ranges::none_of(values, [&](const Element& x) { return group->eq(x, g); })) {
          values.push_back(g);
        }
      }
      auto inst = threshold_instance(group, values, k, rng);
      ++built;
      if (no_instance_check(untangle_instance(inst))) ++detected;
      if (!brute_restricted_gfvs(inst)) ++confirmed;
      if (!solve_compression(inst)) ++solver_no;
    }
    return Outcome{detected == built && confirmed == built && solver_no == built,
                   std::to_string(built) + " built, " + std::to_string(detected) +
                       " detected, " + std::to_string(confirmed) + " confirmed NO by brute force"};
  });

  report("C7 OCT encoding optimum", [&] {
    int agree = 0;
    for (int i = 0; i < kEncoderInstances; ++i) {
      int n = uniform(rng, 2, 10);
      auto g = random_simple_graph(n, uniform(rng, 0, 2 * n), rng);
      if (encoded_optimum(encode_oct(g, n)) == optimum(oracle::min_oct(g, n))) ++agree;
    }
    return Outcome{kEncoderInstances - agree <= kAllowedMismatches, fraction(agree, kEncoderInstances)};
  });

  report("C7 ESFVS encoding optimum", [&] {
    int agree = 0;
    for (int i = 0; i < kEncoderInstances; ++i) {
      int n = uniform(rng, 2, 8);
      auto g = random_simple_graph(n, uniform(rng, 0, 2 * n), rng);
      EsfvsInstance es{g, {}, n};
      std::vector<int> order(g.edges().size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(std::min<std::size_t>(order.size(), uniform(rng, 0, 3)));
      es.special_edges = order;
      if (encoded_optimum(encode_esfvs(es)) == optimum(oracle::min_esfvs(es, n))) ++agree;
    }
    return Outcome{kEncoderInstances - agree <= kAllowedMismatches, fraction(agree, kEncoderInstances)};
  });

  report("C7 FVS encoding optimum", [&] {
    int agree = 0;
    for (int i = 0; i < kEncoderInstances; ++i) {
      int n = uniform(rng, 2, 8);
      auto g = random_simple_graph(n, uniform(rng, 0, 2 * n), rng);
      if (encoded_optimum(encode_fvs(g, n)) == optimum(oracle::min_fvs(g, n))) ++agree;
    }
    return Outcome{kEncoderInstances - agree <= kAllowedMismatches, fraction(agree, kEncoderInstances)};
  });

  report("C7 Multiway Cut encoding optimum", [&] {
    int agree = 0;
    for (int i = 0; i < kEncoderInstances; ++i) {
      int n = uniform(rng, 3, 9);
      int k = uniform(rng, 0, 3);
      auto g = random_simple_graph(n, uniform(rng, 0, 2 * n), rng);
      auto terminals = random_vertex_subset(n, uniform(rng, 2, 3), rng);
      if (encoded_optimum(encode_mwc(g, terminals, k)) == optimum(oracle::min_mwc(g, terminals, k))) {
        ++agree;
      }
    }
    return Outcome{kEncoderInstances - agree <= kAllowedMismatches, fraction(agree, kEncoderInstances)};
  });

  report("C8 solve_mwc vs brute_mwc", [&] {
    int agree = 0, yes = 0, bad = 0;
    for (int i = 0; i < kMwcInstances; ++i) {
      int n = uniform(rng, 3, 10);
      auto inst = random_mwc_instance(n, uniform(rng, 0, 2 * n), uniform(rng, 2, std::min(4, n)),
                                      uniform(rng, 0, 3), rng);
      auto fast = solve_mwc(inst);
      auto slow = brute_mwc(inst);
      if (fast.has_value() == slow.has_value() &&
          optimum(slow) == optimum(oracle::min_mwc(inst.graph, inst.terminals, inst.budget))) {
        ++agree;
      }
      if (fast) {
        ++yes;
        if (!separates_terminals(inst.graph, inst.terminals, *fast)) ++bad;
      }
    }
    return Outcome{kMwcInstances - agree <= kAllowedMismatches && bad == 0,
                   fraction(agree, kMwcInstances) + " agree, " + std::to_string(yes) + " YES"};
  });

  report("C9 scaling n=60 m<=120 k=4 over z2pow 2", [&] {
    auto group = parse_group("z2pow 2");
    double worst = 0;
    int solved = 0;
    SolveStats stats;
    for (int i = 0; i < kScalingInstances; ++i) {
      VertexSet planted = random_vertex_subset(60, 4, rng);
      GfvsInstance inst{random_planted_graph(group, 60, uniform(rng, 90, 120), planted, rng), 4};
      auto start = Clock::now();
      auto x = solve(inst, SolveOptions{0, false, &stats});
      worst = std::max(worst, std::chrono::duration<double>(Clock::now() - start).count());
      if (x && verify(inst, *x).valid) ++solved;
    }
    std::ostringstream detail;
    detail << solved << "/" << kScalingInstances << " solved, worst " << worst << "s (limit "
           << kScalingSecondsLimit << "s), " << stats.compression_calls << " compression calls, "
           << stats.compression.labelings_tried << " labelings tried";
    return Outcome{solved == kScalingInstances && worst < kScalingSecondsLimit, detail.str()};
  });

  report("C10 free group solve vs brute_gfvs", [&] {
    OracleTally total;
    for (int rank = 1; rank <= 5; ++rank) {
      auto t = oracle_equivalence(std::make_shared<FreeGroup>(rank), kOracleInstancesPerGroup / 5, rng);
      total.agree += t.agree;
      total.yes += t.yes;
      total.invalid += t.invalid;
      total.longest_word = std::max(total.longest_word, t.longest_word);
      total.word_bound_violations += t.word_bound_violations;
    }
    bool pass = kOracleInstancesPerGroup - total.agree <= kAllowedMismatches && total.invalid == 0 &&
                total.word_bound_violations == 0;
    return Outcome{pass, fraction(total.agree, kOracleInstancesPerGroup) + " agree, " +
                             std::to_string(total.yes) + " YES, longest word " +
                             std::to_string(total.longest_word) + ", " +
                             std::to_string(total.word_bound_violations) + " over 4(m+1)"};
  });

  report("C10 free group dichotomy", [&] {
    DichotomyTally total;
    for (int rank = 1; rank <= 5; ++rank) {
      auto t = dichotomy(std::make_shared<FreeGroup>(rank), kDichotomyGraphs / 5, rng);
      total.agree += t.agree;
      total.witnesses += t.witnesses;
      total.bad_witnesses += t.bad_witnesses;
      total.bad_labelings += t.bad_labelings;
    }
    bool pass = kDichotomyGraphs - total.agree <= kAllowedMismatches && total.bad_witnesses == 0 &&
                total.bad_labelings == 0;
    return Outcome{pass, fraction(total.agree, kDichotomyGraphs) + " agree, " +
                             std::to_string(total.witnesses) + " witnesses"};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
