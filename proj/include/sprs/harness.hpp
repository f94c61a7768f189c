#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "sprs/graph.hpp"
#include "sprs/report.hpp"

namespace sprs {

/// Environment variable that replaces the default artifact directory.
inline constexpr const char* kArtifactDirEnv = "SPRS_ARTIFACT_DIR";

struct CampaignConfig {
  std::string reduction;
  std::size_t trials = 100;
  std::size_t n_min = 5;
  std::size_t n_max = 20;
  std::size_t m_min = 5;
  std::size_t m_max = 60;
  Weight w_min = 1;
  Weight w_max = 16;
  std::uint64_t seed = 1;
  std::string artifact_dir = "sprs-artifacts";
  bool inject_fault = false;  // run the reduction's broken fixture variant

  /// Registered envelope for `reduction`. Throws UnknownReduction.
  static CampaignConfig defaults(const std::string& reduction);
  /// Keys: reduction, trials, seed, n, m, w (each [lo, hi]), artifact_dir,
  /// inject_fault. Missing keys keep the reduction's defaults.
  static CampaignConfig from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
  void validate() const;
};

/// Result of one reduction run compared against its direct solver.
struct TrialOutcome {
  bool answers_match = false;
  bool budget_ok = false;
  nlohmann::json reduced_answer;
  nlohmann::json direct_answer;
  ReductionReport report;
  std::string note;  // extra invariant failures, if any

  bool passed() const { return answers_match && budget_ok && note.empty(); }
};

struct ReductionEntry {
  std::string name;
  std::string description;
  bool directed = false;
  bool unit_weights = false;
  bool connected = true;
  CampaignConfig defaults;
  /// Picks instance parameters (s, t, x, k ...); nullopt asks for another graph.
  std::function<std::optional<nlohmann::json>(const Graph&, std::mt19937_64&)> choose_params;
  std::function<TrialOutcome(const Graph&, const nlohmann::json& params, bool fault)> run;
  /// The reduced graph(s), for failure artifacts and `reduce --emit`.
  std::function<nlohmann::json(const Graph&, const nlohmann::json& params)> reduced_graphs;
};

const std::vector<ReductionEntry>& reduction_registry();

/// Accepts registered names and aliases. Throws UnknownReduction.
const ReductionEntry& find_reduction(const std::string& name);

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  bool budget_ok = false;
  std::string error;
  std::string artifact;
  std::size_t oracle_calls = 0;
  std::size_t max_call_vertices = 0;
  std::size_t max_call_edges = 0;
};

struct CampaignSummary {
  CampaignConfig config;
  std::vector<TrialRecord> trials;

  std::size_t passed() const;
  std::size_t failed() const { return trials.size() - passed(); }
  std::size_t budget_violations() const;
  /// Deterministic: contains no timings.
  nlohmann::json to_json() const;
  std::string table() const;
};

/// Draws one instance of the campaign's envelope for trial `index`.
struct TrialInstance {
  Graph graph;
  nlohmann::json params;
  std::uint64_t seed = 0;
};
TrialInstance draw_instance(const ReductionEntry& entry, const CampaignConfig& cfg, std::size_t index);

/// Runs every trial (OpenMP-parallel), persisting an artifact per failure.
CampaignSummary verify_reduction(const CampaignConfig& cfg);

/// Runs one reduction on a given instance and compares with the direct solver.
TrialOutcome run_trial(const std::string& reduction, const Graph& g, const nlohmann::json& params,
                       bool fault = false);

/// Runs the reduction with the default oracles and returns its accounting;
/// missing parameters are drawn deterministically.
ReductionReport sparsity_report(const std::string& reduction, const Graph& g,
                                nlohmann::json params = nlohmann::json::object());

}  // namespace sprs
