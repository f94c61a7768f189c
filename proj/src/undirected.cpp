#include "sprs/undirected.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "sprs/error.hpp"

namespace sprs {

namespace {

__extension__ typedef unsigned __int128 Wide;

bool in_bucket_with_floor(Weight w, Weight max_weight, unsigned k, unsigned floor_shift) {
  // M / 2^floor_shift < w  and  w <= M / 2^(k-1)
  return Wide{max_weight} < (Wide{w} << floor_shift) && (Wide{w} << (k - 1)) <= Wide{max_weight};
}

void require_undirected(const Graph& g) {
  if (g.directed()) throw Error(ErrorCode::ParamOutOfRange, "expected an undirected graph");
}

}  // namespace

unsigned bucket_count(const WeightProfile& profile) {
  unsigned e = 0;
  while (e < 63 && (Wide{profile.min_weight} << (e + 1)) <= Wide{profile.max_weight}) ++e;
  return e + 1;
}

bool in_bucket(Weight w, Weight max_weight, unsigned k) {
  return in_bucket_with_floor(w, max_weight, k, k);
}

namespace {

BitSampledGraph build_family_member(const Graph& g, unsigned i, unsigned j, std::optional<unsigned> k,
                                    unsigned floor_extra) {
  require_undirected(g);
  const auto n = static_cast<Vertex>(g.n());
  const unsigned width = label_width(g.n());
  if (i < 1 || i > width) throw Error(ErrorCode::ParamOutOfRange, "bit index i out of range");
  if (j > 1) throw Error(ErrorCode::ParamOutOfRange, "bit value j must be 0 or 1");
  Weight max_weight = 0;
  if (k) {
    const auto profile = weight_profile(g);
    if (*k < 1 || *k > bucket_count(profile)) throw Error(ErrorCode::ParamOutOfRange, "bucket k out of range");
    max_weight = profile.max_weight;
  }
  const auto keep = [&](Vertex tail, Weight w) {
    if (label_bit(tail, i, width) != j) return false;
    return !k || in_bucket_with_floor(w, max_weight, *k, *k + floor_extra);
  };

  std::vector<Edge> edges;
  edges.reserve(2 * g.m());
  for (const Edge& e : g.edges()) {
    edges.push_back(e);
    if (keep(e.u, e.w)) edges.push_back({e.u, n + e.v, e.w});
    if (keep(e.v, e.w)) edges.push_back({e.v, n + e.u, e.w});
  }
  return BitSampledGraph{Graph(2 * g.n(), false, std::move(edges)), g.n(), i, j, k};
}

}  // namespace

BitSampledGraph build_gijk(const Graph& g, unsigned i, unsigned j, std::optional<unsigned> k) {
  return build_family_member(g, i, j, k, 0);
}

WeightWithReport mwc_via_apsp(const Graph& g, const ApspOracle& apsp_oracle, const MwcViaApspOptions& options) {
  require_undirected(g);
  WeightWithReport out;
  ReductionReport& report = out.report;
  report.reduction = "mwc-to-apsp";
  report.source_n = g.n();
  report.source_m = g.m();
  if (g.m() == 0) return out;

  const auto profile = weight_profile(g);
  const Weight M = profile.max_weight;
  const unsigned width = label_width(g.n());
  const unsigned K = bucket_count(profile);
  report.budget = {2 * std::size_t{width} * K + 1, 2 * g.n(), 3 * g.m()};
  const auto n = static_cast<Vertex>(g.n());

  const ApspResult base = call_oracle(report, apsp_oracle, g);
  Stopwatch watch;
  for (unsigned i = 1; i <= width; ++i) {
    for (unsigned j = 0; j <= 1; ++j) {
      for (unsigned k = 1; k <= K; ++k) {
        watch.lap();
        const auto family = build_family_member(g, i, j, k, options.widen_bucket_fault ? 1 : 0);
        report.construction_seconds += watch.lap();
        const ApspResult sampled = call_oracle(report, apsp_oracle, family.graph);
        watch.lap();
        for (Vertex y = 0; y < n; ++y) {
          for (Vertex z = 0; z < n; ++z) {
            const Distance d_g = base.dist(y, z);
            const Vertex last_g = base.last(y, z);
            if (y == z || d_g.is_infinite() || last_g == kNoVertex) continue;
            const Distance d_s = sampled.dist(y, family.second_copy(z));
            if (d_s.is_infinite()) continue;
            // d_s <= d_g + M / 2^(k-1)
            if ((Wide{d_s.value()} << (k - 1)) > (Wide{d_g.value()} << (k - 1)) + M) continue;
            if (family.original(sampled.last(y, family.second_copy(z))) == last_g) continue;
            out.weight = std::min(out.weight, d_s + d_g);
          }
        }
        report.recovery_seconds += watch.lap();
      }
    }
  }
  return out;
}

std::size_t critical_edge(const std::vector<Weight>& edge_weights, std::size_t start) {
  const std::size_t len = edge_weights.size();
  const Weight total = std::accumulate(edge_weights.begin(), edge_weights.end(), Weight{0});
  const Weight half_floor = total / 2;
  const Weight half_ceil = total - half_floor;
  // The last edge whose tail is still within half the weight.
  Weight prefix = 0;
  std::size_t p = 0;
  for (std::size_t step = 0; step < len; ++step) {
    if (prefix > half_floor) break;
    p = step;
    prefix += edge_weights[(start + step) % len];
  }
  assert(prefix - edge_weights[(start + p) % len] <= half_floor);
  assert(prefix >= half_ceil);
  (void)half_ceil;
  return p;
}

std::size_t critical_edge(const Graph& g, const CycleWitness& c, std::size_t start) {
  const auto& vs = c.vertices;
  std::vector<Weight> weights(vs.size());
  for (std::size_t q = 0; q < vs.size(); ++q) {
    const auto w = g.weight(vs[q], vs[(q + 1) % vs.size()]);
    if (!w) throw Error(ErrorCode::ParamOutOfRange, "cycle uses a missing edge");
    weights[q] = *w;
  }
  return critical_edge(weights, start);
}

WeightsWithReport ansc_via_apsp_unweighted(const Graph& g, const ApspOracle& apsp_oracle) {
  require_undirected(g);
  for (const Edge& e : g.edges()) {
    if (e.w != 1) throw Error(ErrorCode::NonUnitWeight, "edge weight " + std::to_string(e.w));
  }
  WeightsWithReport out;
  out.weights.assign(g.n(), Distance::infinity());
  ReductionReport& report = out.report;
  report.reduction = "ansc-to-apsp";
  report.source_n = g.n();
  report.source_m = g.m();
  const unsigned width = label_width(g.n());
  report.budget = {2 * std::size_t{width} + 1, 2 * g.n(), 3 * g.m()};
  const auto n = static_cast<Vertex>(g.n());

  const ApspResult base = call_oracle(report, apsp_oracle, g);
  Stopwatch watch;
  for (unsigned i = 1; i <= width; ++i) {
    for (unsigned j = 0; j <= 1; ++j) {
      watch.lap();
      const auto family = build_gijk(g, i, j, std::nullopt);
      report.construction_seconds += watch.lap();
      const ApspResult sampled = call_oracle(report, apsp_oracle, family.graph);
      watch.lap();
      for (Vertex y = 0; y < n; ++y) {
        for (Vertex z = 0; z < n; ++z) {
          const Distance d_g = base.dist(y, z);
          const Vertex last_g = base.last(y, z);
          if (y == z || d_g.is_infinite() || last_g == kNoVertex) continue;
          const Distance d_s = sampled.dist(y, family.second_copy(z));
          if (d_s.is_infinite() || d_s > d_g + 1) continue;
          if (family.original(sampled.last(y, family.second_copy(z))) == last_g) continue;
          const Weight q = d_s.value() + d_g.value();
          if (d_g.value() != q / 2) continue;  // balance: y sits opposite z
          out.weights[z] = std::min(out.weights[z], Distance(q));
        }
      }
      report.recovery_seconds += watch.lap();
    }
  }
  return out;
}

Graph build_ksisc_split(const Graph& g, Vertex x, unsigned i) {
  require_undirected(g);
  if (x >= g.n()) throw Error(ErrorCode::EndpointOutOfRange, "x out of range");
  const unsigned width = label_width(g.n());
  const auto x1 = static_cast<Vertex>(g.n());
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) {
    if (e.u != x && e.v != x) {
      edges.push_back(e);
      continue;
    }
    const Vertex y = e.u == x ? e.v : e.u;
    edges.push_back({y, label_bit(y, i, width) == 0 ? x : x1, e.w});
  }
  return Graph(g.n() + 1, false, std::move(edges));
}

CyclesWithReport k_sisc_via_k_sisp(const Graph& g, Vertex x, std::size_t k, const KSispOracle& k_sisp_oracle) {
  require_undirected(g);
  if (x >= g.n()) throw Error(ErrorCode::EndpointOutOfRange, "x out of range");
  CyclesWithReport out;
  ReductionReport& report = out.report;
  report.reduction = "ksisc-to-ksisp";
  report.source_n = g.n();
  report.source_m = g.m();
  const unsigned width = label_width(g.n());
  report.budget = {width, g.n() + 1, g.m()};

  std::map<std::vector<Vertex>, Weight> found;
  Stopwatch watch;
  for (unsigned i = 1; i <= width; ++i) {
    watch.lap();
    const Graph split = build_ksisc_split(g, x, i);
    report.construction_seconds += watch.lap();
    const auto paths = call_oracle(report, k_sisp_oracle, split, x, static_cast<Vertex>(g.n()), k);
    watch.lap();
    for (const auto& p : paths) {
      std::vector<Vertex> cycle(p.vertices.begin(), p.vertices.end() - 1);  // drop the bit-1 copy of x
      found.emplace(canonical_cycle(std::move(cycle), false), p.weight);
    }
    report.recovery_seconds += watch.lap();
  }
  for (auto& [vs, w] : found) out.cycles.push_back({w, vs});
  std::stable_sort(out.cycles.begin(), out.cycles.end(),
                   [](const CycleWitness& a, const CycleWitness& b) { return a.weight < b.weight; });
  if (out.cycles.size() > k) out.cycles.resize(k);
  return out;
}

}  // namespace sprs
