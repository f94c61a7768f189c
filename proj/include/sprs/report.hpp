#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sprs/graph.hpp"
#include "sprs/shortest_paths.hpp"
#include "sprs/solvers.hpp"

namespace sprs {

// Target-problem oracles. Reductions take these as parameters so any
// solver (or a deliberately broken one) can be plugged in.
using ApspOracle = std::function<ApspResult(const Graph&)>;
using KSispOracle = std::function<std::vector<PathWitness>(const Graph&, Vertex, Vertex, std::size_t)>;
using TwoSispOracle = std::function<Distance(const Graph&, Vertex, Vertex)>;
using RadiusOracle = std::function<RadiusResult(const Graph&)>;
using EccentricitiesOracle = std::function<std::vector<Distance>(const Graph&)>;
using AnscOracle = std::function<std::vector<Distance>(const Graph&)>;
using ReplacementPathsOracle = std::function<ReplacementPaths(const Graph&, Vertex, Vertex)>;
using BcOracle = std::function<std::uint64_t(const Graph&, Vertex)>;
using PosAnbcOracle = std::function<std::vector<bool>(const Graph&)>;
using DiameterOracle = std::function<Distance(const Graph&)>;

/// Second simple shortest path weight via Yen; infinity if there is none.
Distance two_sisp_yen(const Graph& g, Vertex s, Vertex t);

namespace oracle {
ApspOracle apsp();
KSispOracle k_sisp();
TwoSispOracle two_sisp();
RadiusOracle radius();
EccentricitiesOracle eccentricities();
AnscOracle ansc();
ReplacementPathsOracle replacement_paths();
BcOracle bc();
PosAnbcOracle pos_anbc();
DiameterOracle diameter();
}  // namespace oracle

struct CallSize {
  std::size_t vertices = 0;
  std::size_t edges = 0;

  friend bool operator==(const CallSize&, const CallSize&) = default;
};

/// Declared resource envelope of a reduction on a particular instance.
struct Budget {
  std::size_t max_calls = 0;
  std::size_t max_vertices = 0;  // per call
  std::size_t max_edges = 0;     // per call
};

/// Oracle-call accounting for one run of a reduction.
struct ReductionReport {
  std::string reduction;
  std::size_t source_n = 0;
  std::size_t source_m = 0;
  std::vector<CallSize> calls;
  double construction_seconds = 0;
  double oracle_seconds = 0;
  double recovery_seconds = 0;
  Budget budget;

  std::size_t oracle_calls() const { return calls.size(); }
  std::size_t max_call_vertices() const;
  std::size_t max_call_edges() const;
  bool within_budget() const;

  void record_call(const Graph& g) { calls.push_back({g.n(), g.m()}); }

  /// Timings are omitted unless asked for, keeping output reproducible.
  nlohmann::json to_json(bool with_timings = false) const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Records the call, times it, and forwards the oracle's result.
template <class Oracle, class... Args>
auto call_oracle(ReductionReport& report, const Oracle& oracle, const Graph& g, Args&&... args) {
  report.record_call(g);
  Stopwatch watch;
  auto result = oracle(g, std::forward<Args>(args)...);
  report.oracle_seconds += watch.lap();
  return result;
}

}  // namespace sprs
