#pragma once

#include <optional>
#include <vector>

#include "sprs/graph.hpp"
#include "sprs/report.hpp"
#include "sprs/solvers.hpp"

namespace sprs {

/// Two copies of an undirected graph: u1 = u and u2 = n + u. The first copy
/// holds every original edge; a cross edge (u1, v2) of weight w(u, v) is
/// kept when bit i of u equals j and, if a bucket k is given, w(u, v) lies
/// in (M / 2^k, M / 2^(k-1)]. The second copy has no internal edges.
/// Edge count is m plus the bucket-k degrees of the vertices whose bit i
/// is j, so at most 3m; the unit triangle with i = 1, j = 0 already has 7.
struct BitSampledGraph {
  Graph graph;
  std::size_t source_n = 0;
  unsigned i = 1;
  unsigned j = 0;
  std::optional<unsigned> k;

  Vertex first_copy(Vertex u) const { return u; }
  Vertex second_copy(Vertex u) const { return static_cast<Vertex>(source_n) + u; }
  Vertex original(Vertex x) const { return static_cast<Vertex>(x % source_n); }
};

/// Number of weight buckets: floor(log2(rho)) + 1, so every weight in
/// [min, M] falls in exactly one bucket.
unsigned bucket_count(const WeightProfile& profile);

/// M / 2^k < w <= M / 2^(k-1), by cross-multiplication.
bool in_bucket(Weight w, Weight max_weight, unsigned k);

/// Throws ParamOutOfRange on a directed graph or out-of-range i, j, k.
BitSampledGraph build_gijk(const Graph& g, unsigned i, unsigned j, std::optional<unsigned> k);

struct MwcViaApspOptions {
  /// Test fixture: lowers each bucket's lower bound to M / 2^(k+1) while
  /// the distance check keeps the true bound. Produces wrong answers.
  bool widen_bucket_fault = false;
};

struct WeightWithReport {
  Distance weight;
  ReductionReport report;
};

WeightWithReport mwc_via_apsp(const Graph& g, const ApspOracle& apsp_oracle = oracle::apsp(),
                              const MwcViaApspOptions& options = {});

/// Position p (0-based offset from `start`) of the edge (v_p, v_p+1) that
/// straddles half the cycle weight when walking from v_start.
std::size_t critical_edge(const std::vector<Weight>& edge_weights, std::size_t start);
std::size_t critical_edge(const Graph& g, const CycleWitness& c, std::size_t start);

struct WeightsWithReport {
  std::vector<Distance> weights;
  ReductionReport report;
};

/// Shortest cycle through every vertex of an unweighted undirected graph.
/// Throws NonUnitWeight.
WeightsWithReport ansc_via_apsp_unweighted(const Graph& g, const ApspOracle& apsp_oracle = oracle::apsp());

struct CyclesWithReport {
  std::vector<CycleWitness> cycles;
  ReductionReport report;
};

/// Graph G_i of the k-SiSC family: x is split into x itself (bit 0 side)
/// and the new vertex n (bit 1 side) according to bit i of each neighbour.
Graph build_ksisc_split(const Graph& g, Vertex x, unsigned i);

CyclesWithReport k_sisc_via_k_sisp(const Graph& g, Vertex x, std::size_t k,
                                   const KSispOracle& k_sisp_oracle = oracle::k_sisp());

}  // namespace sprs
