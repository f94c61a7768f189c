#pragma once

#include <vector>

#include "sprs/graph.hpp"
#include "sprs/report.hpp"
#include "sprs/solvers.hpp"
#include "sprs/undirected.hpp"

namespace sprs {

// Directed gadget constructions. Every s-t gadget is built around the
// canonical shortest path P = v_0 .. v_l returned by the deterministic
// Dijkstra, with P's edges removed and detour terminals attached.
//
// Recovered answers larger than nM cannot be weights of simple paths or
// cycles of the source graph and are reported as infinity.

/// Radius / eccentricities gadget. Roles: z_out[j], z_in[j], y_out[j],
/// y_in[j], A, B, C[r][s]. Recovery keys: n, M, l, nM, Mprime (9nM),
/// offset (11nM), cap (12nM). Besides the hub arcs, A reaches every
/// original vertex and every C vertex with weight 9nM. Then
/// ecc(y_out[j]) = min(11nM + d(z_out[j], z_in[j]), 12nM).
GadgetGraph build_2sisp_radius_gadget(const Graph& g, Vertex s, Vertex t);

/// Radius of the gadget minus 11nM.
WeightWithReport two_sisp_via_radius(const Graph& g, Vertex s, Vertex t,
                                     const RadiusOracle& radius_oracle = oracle::radius());

struct ReplacementWithReport {
  std::vector<Distance> avoiding;  // indexed by edge position on P
  ReductionReport report;
};

/// ecc(y_out[j]) minus 11nM for every edge j of P.
ReplacementWithReport replacement_paths_via_eccentricities(
    const Graph& g, Vertex s, Vertex t, const EccentricitiesOracle& ecc_oracle = oracle::eccentricities());

/// Split graph plus the path p_0 .. p_n (p_j = 2n + j). With Q = nM and
/// x the 0-based id of the j-th vertex: p_(j-1) -> x_out weighs (n-j+1)Q
/// and x_in -> p_j weighs jQ. Recovery keys: n, M, Q, offset ((n+1)Q).
GadgetGraph build_mwc_2sisp_gadget(const Graph& g);

struct MwcVia2SispOptions {
  /// Test fixture: subtracts (n+1)Q - 1 instead of (n+1)Q.
  bool offset_fault = false;
};

WeightWithReport mwc_via_2sisp(const Graph& g, const TwoSispOracle& two_sisp_oracle = oracle::two_sisp(),
                               const MwcVia2SispOptions& options = {});

/// G minus P plus z_j = n + j: z_j -> v_j weighs d(s, v_j), v_(j+1) -> z_j
/// weighs d(v_(j+1), t), and z_j -> z_(j-1) weighs 0.
GadgetGraph build_repl_ansc_gadget(const Graph& g, Vertex s, Vertex t);

ReplacementWithReport replacement_paths_via_ansc(const Graph& g, Vertex s, Vertex t,
                                                 const AnscOracle& ansc_oracle = oracle::ansc());

/// Replacement paths from p_0 to p_n in the MWC gadget, minus (n+1)Q.
WeightsWithReport ansc_via_replacement_paths(
    const Graph& g, const ReplacementPathsOracle& rp_oracle = oracle::replacement_paths());

WeightWithReport two_sisp_via_replacement_paths(
    const Graph& g, Vertex s, Vertex t, const ReplacementPathsOracle& rp_oracle = oracle::replacement_paths());

/// The radius gadget without B or the reach arcs; z_in[j] -> y_in[j] weighs
/// 9nM and A -> y_in[j] weighs 9nM + q. Throws ProbeOutOfRange if q > nM.
GadgetGraph build_2sisp_bc_gadget(const Graph& g, Vertex s, Vertex t, Weight q);

/// Split graph plus z_x = 2n + x with x_out -> z_x (0) and z_x -> x_in (q[x]).
GadgetGraph build_pos_anbc_gadget(const Graph& g, const std::vector<Weight>& q);

/// Probes of a lowest-true binary search over [0, nM + 1). A scalar search
/// has one entry per probe; the simultaneous per-vertex search has one per
/// vertex, shared by a single oracle call.
struct BinarySearchTranscript {
  struct Probe {
    std::vector<Weight> q;
    std::vector<bool> answer;
  };
  Weight lo = 0;
  Weight hi = 0;  // exclusive
  std::vector<Probe> probes;

  std::size_t calls() const { return probes.size(); }
};

/// ceil(log2(nM + 2)) + 1.
std::size_t binary_search_budget(std::size_t n, Weight max_weight);

struct SearchWeightResult {
  Distance weight;
  ReductionReport report;
  BinarySearchTranscript transcript;
};

/// Smallest q with BC(A) < l.
SearchWeightResult two_sisp_via_bc(const Graph& g, Vertex s, Vertex t, const BcOracle& bc_oracle = oracle::bc());

struct SearchWeightsResult {
  std::vector<Distance> weights;
  ReductionReport report;
  BinarySearchTranscript transcript;
};

/// Per vertex x, the smallest q_x with BC(z_x) = 0.
SearchWeightsResult ansc_via_pos_anbc(const Graph& g, const PosAnbcOracle& pos_oracle = oracle::pos_anbc());

/// Vertex-count formulas used for budgets and tests.
std::size_t radius_gadget_vertices(std::size_t n, std::size_t l);
std::size_t bc_gadget_vertices(std::size_t n, std::size_t l);

}  // namespace sprs
