#include "sprs/report.hpp"

#include <algorithm>

namespace sprs {

Distance two_sisp_yen(const Graph& g, Vertex s, Vertex t) {
  const auto paths = k_sisp_yen(g, s, t, 2);
  return paths.size() < 2 ? Distance::infinity() : Distance(paths[1].weight);
}

namespace oracle {
ApspOracle apsp() { return [](const Graph& g) { return sprs::apsp(g); }; }
KSispOracle k_sisp() { return &k_sisp_yen; }
TwoSispOracle two_sisp() { return &two_sisp_yen; }
RadiusOracle radius() { return &sprs::radius; }
EccentricitiesOracle eccentricities() { return &sprs::eccentricities; }
AnscOracle ansc() { return &ansc_weights; }
ReplacementPathsOracle replacement_paths() { return &replacement_paths_naive; }
BcOracle bc() { return &bc_strict; }
PosAnbcOracle pos_anbc() { return &sprs::pos_anbc; }
DiameterOracle diameter() { return &sprs::diameter; }
}  // namespace oracle

std::size_t ReductionReport::max_call_vertices() const {
  std::size_t out = 0;
  for (const auto& c : calls) out = std::max(out, c.vertices);
  return out;
}

std::size_t ReductionReport::max_call_edges() const {
  std::size_t out = 0;
  for (const auto& c : calls) out = std::max(out, c.edges);
  return out;
}

bool ReductionReport::within_budget() const {
  return calls.size() <= budget.max_calls && max_call_vertices() <= budget.max_vertices &&
         max_call_edges() <= budget.max_edges;
}

nlohmann::json ReductionReport::to_json(bool with_timings) const {
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& c : calls) sizes.push_back({c.vertices, c.edges});
  nlohmann::json out{
      {"reduction", reduction},
      {"source", {{"n", source_n}, {"m", source_m}}},
      {"oracle_calls", calls.size()},
      {"call_sizes", sizes},
      {"budget",
       {{"max_calls", budget.max_calls},
        {"max_vertices", budget.max_vertices},
        {"max_edges", budget.max_edges}}},
      {"within_budget", within_budget()},
  };
  if (with_timings) {
    out["seconds"] = {{"construction", construction_seconds},
                      {"oracle", oracle_seconds},
                      {"recovery", recovery_seconds}};
  }
  return out;
}

}  // namespace sprs
