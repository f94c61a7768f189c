#include "sprs/directed.hpp"

#include <algorithm>

#include "sprs/error.hpp"

namespace sprs {

namespace {

void require_directed(const Graph& g) {
  if (!g.directed()) throw Error(ErrorCode::ParamOutOfRange, "expected a directed graph");
}

std::string indexed(const char* name, std::size_t j) { return std::string(name) + "[" + std::to_string(j) + "]"; }

// Canonical P with prefix distances d(s, v_j).
struct StPath {
  std::vector<Vertex> v;
  std::vector<Weight> prefix;
  Weight total = 0;

  std::size_t l() const { return v.size() - 1; }
  Weight suffix(std::size_t j) const { return total - prefix[j]; }
};

StPath canonical_st_path(const Graph& g, Vertex s, Vertex t) {
  require_directed(g);
  if (s == t) throw Error(ErrorCode::TrivialPath, "s and t coincide");
  const auto p = canonical_shortest_path(g, s, t);
  StPath out{p.vertices, {0}, p.weight};
  for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
    out.prefix.push_back(out.prefix.back() + *g.weight(p.vertices[j], p.vertices[j + 1]));
  }
  return out;
}

std::vector<Edge> edges_without_path(const Graph& g, const StPath& p) {
  std::vector<char> on_path(g.m(), 0);
  for (std::size_t j = 0; j < p.l(); ++j) on_path[*g.edge_index(p.v[j], p.v[j + 1])] = 1;
  std::vector<Edge> out;
  for (std::uint32_t e = 0; e < g.m(); ++e) {
    if (!on_path[e]) out.push_back(g.edge(e));
  }
  return out;
}

Weight max_weight_of(const Graph& g) { return weight_profile(g).max_weight; }

Distance cut_off(Distance gadget_value, Weight offset, Weight nM) {
  if (gadget_value.is_infinite() || gadget_value.value() < offset) return Distance::infinity();
  const Weight answer = gadget_value.value() - offset;
  return answer > nM ? Distance::infinity() : Distance(answer);
}

void add_detour_terminals(std::vector<Edge>& edges, RoleMap& roles, const StPath& p, Vertex z_out0,
                          Vertex z_in0) {
  const std::size_t l = p.l();
  for (std::size_t j = 0; j < l; ++j) {
    const auto zo = static_cast<Vertex>(z_out0 + j);
    const auto zi = static_cast<Vertex>(z_in0 + j);
    roles[indexed("z_out", j)] = zo;
    roles[indexed("z_in", j)] = zi;
    edges.push_back({zo, p.v[j], p.prefix[j]});
    edges.push_back({p.v[j + 1], zi, p.suffix(j + 1)});
    edges.push_back({zi, zo, 0});
    if (j > 0) edges.push_back({zo, static_cast<Vertex>(z_in0 + j - 1), 0});
  }
}

// y_out[j] -> C[r][s] when bit r of j is s; C[r][s] -> y_in[j] otherwise.
void add_bit_layer(std::vector<Edge>& edges, RoleMap& roles, std::size_t l, Vertex y_out0, Vertex y_in0,
                   Vertex c0, Weight w) {
  const unsigned width = label_width(l);
  for (unsigned r = 1; r <= width; ++r) {
    for (unsigned s = 0; s <= 1; ++s) {
      const auto c = static_cast<Vertex>(c0 + 2 * (r - 1) + s);
      roles["C[" + std::to_string(r) + "][" + std::to_string(s) + "]"] = c;
      for (std::size_t j = 0; j < l; ++j) {
        if (label_bit(static_cast<Vertex>(j), r, width) == s) {
          edges.push_back({static_cast<Vertex>(y_out0 + j), c, w});
        } else {
          edges.push_back({c, static_cast<Vertex>(y_in0 + j), w});
        }
      }
    }
  }
}

void fill_common_recovery(GadgetGraph& gadget, std::size_t n, Weight M, std::size_t l) {
  gadget.recovery["n"] = n;
  gadget.recovery["M"] = M;
  gadget.recovery["l"] = l;
  gadget.recovery["nM"] = n * M;
  gadget.recovery["Mprime"] = 9 * n * M;
}

std::size_t path_gadget_edge_bound(std::size_t m, std::size_t l) {
  return m + 8 * l + 2 * l * label_width(l);
}

std::size_t radius_gadget_edge_bound(std::size_t m, std::size_t n, std::size_t l) {
  return path_gadget_edge_bound(m, l) + n + 1 + 2 * label_width(l);
}

// Simple paths weigh at most (n - 1)M, so a recovered nM or more means none.
Distance below_cap(Distance gadget_value, const GadgetGraph& gadget) {
  return cut_off(gadget_value, gadget.param("offset"), gadget.param("nM") - 1);
}

ReductionReport start_report(const char* name, const Graph& g) {
  ReductionReport r;
  r.reduction = name;
  r.source_n = g.n();
  r.source_m = g.m();
  return r;
}

}  // namespace

std::size_t radius_gadget_vertices(std::size_t n, std::size_t l) { return n + 4 * l + 2 + 2 * label_width(l); }
std::size_t bc_gadget_vertices(std::size_t n, std::size_t l) { return n + 4 * l + 1 + 2 * label_width(l); }

std::size_t binary_search_budget(std::size_t n, Weight max_weight) {
  const Weight target = Weight{n} * max_weight + 2;
  std::size_t c = 0;
  while (c < 64 && (Weight{1} << c) < target) ++c;
  return c + 1;
}

GadgetGraph build_2sisp_radius_gadget(const Graph& g, Vertex s, Vertex t) {
  const StPath p = canonical_st_path(g, s, t);
  const std::size_t n = g.n();
  const std::size_t l = p.l();
  const Weight M = max_weight_of(g);
  const Weight nM = n * M;
  const auto z_out0 = static_cast<Vertex>(n);
  const auto z_in0 = static_cast<Vertex>(n + l);
  const auto y_out0 = static_cast<Vertex>(n + 2 * l);
  const auto y_in0 = static_cast<Vertex>(n + 3 * l);
  const auto a = static_cast<Vertex>(n + 4 * l);
  const auto b = static_cast<Vertex>(a + 1);
  const auto c0 = static_cast<Vertex>(a + 2);

  GadgetGraph gadget;
  auto edges = edges_without_path(g, p);
  add_detour_terminals(edges, gadget.roles, p, z_out0, z_in0);
  for (std::size_t j = 0; j < l; ++j) {
    const auto yo = static_cast<Vertex>(y_out0 + j);
    const auto yi = static_cast<Vertex>(y_in0 + j);
    gadget.roles[indexed("y_out", j)] = yo;
    gadget.roles[indexed("y_in", j)] = yi;
    edges.push_back({yo, static_cast<Vertex>(z_out0 + j), 0});
    edges.push_back({static_cast<Vertex>(z_in0 + j), yi, 11 * nM});
    edges.push_back({yo, a, 0});
    edges.push_back({b, yo, 9 * nM});
  }
  edges.push_back({a, b, 0});
  for (Vertex v = 0; v < n; ++v) edges.push_back({a, v, 9 * nM});
  gadget.roles["A"] = a;
  gadget.roles["B"] = b;
  add_bit_layer(edges, gadget.roles, l, y_out0, y_in0, c0, 3 * nM);
  for (Vertex c = c0; c < c0 + 2 * label_width(l); ++c) edges.push_back({a, c, 9 * nM});

  gadget.graph = Graph(radius_gadget_vertices(n, l), true, std::move(edges), true);
  fill_common_recovery(gadget, n, M, l);
  gadget.recovery["offset"] = 11 * nM;
  gadget.recovery["cap"] = 12 * nM;
  return gadget;
}

WeightWithReport two_sisp_via_radius(const Graph& g, Vertex s, Vertex t, const RadiusOracle& radius_oracle) {
  WeightWithReport out;
  out.report = start_report("2sisp-to-radius", g);
  Stopwatch watch;
  const GadgetGraph gadget = build_2sisp_radius_gadget(g, s, t);
  out.report.construction_seconds = watch.lap();
  const std::size_t l = gadget.param("l");
  out.report.budget = {1, radius_gadget_vertices(g.n(), l), radius_gadget_edge_bound(g.m(), g.n(), l)};
  const RadiusResult r = call_oracle(out.report, radius_oracle, gadget.graph);
  watch.lap();
  out.weight = below_cap(r.value, gadget);
  out.report.recovery_seconds = watch.lap();
  return out;
}

ReplacementWithReport replacement_paths_via_eccentricities(const Graph& g, Vertex s, Vertex t,
                                                           const EccentricitiesOracle& ecc_oracle) {
  ReplacementWithReport out;
  out.report = start_report("rp-to-ecc", g);
  Stopwatch watch;
  const GadgetGraph gadget = build_2sisp_radius_gadget(g, s, t);
  out.report.construction_seconds = watch.lap();
  const std::size_t l = gadget.param("l");
  out.report.budget = {1, radius_gadget_vertices(g.n(), l), radius_gadget_edge_bound(g.m(), g.n(), l)};
  const auto ecc = call_oracle(out.report, ecc_oracle, gadget.graph);
  watch.lap();
  for (std::size_t j = 0; j < l; ++j) {
    out.avoiding.push_back(below_cap(ecc.at(gadget.role(indexed("y_out", j))), gadget));
  }
  out.report.recovery_seconds = watch.lap();
  return out;
}

GadgetGraph build_mwc_2sisp_gadget(const Graph& g) {
  require_directed(g);
  const std::size_t n = g.n();
  const Weight M = max_weight_of(g);
  const Weight Q = n * M;
  GadgetGraph gadget = split_all_vertices(g);
  auto edges = std::vector<Edge>(gadget.graph.edges().begin(), gadget.graph.edges().end());
  const auto p = [n](std::size_t j) { return static_cast<Vertex>(2 * n + j); };
  for (std::size_t j = 0; j <= n; ++j) gadget.roles[indexed("p", j)] = p(j);
  for (std::size_t j = 0; j < n; ++j) edges.push_back({p(j), p(j + 1), 0});
  for (std::size_t j = 1; j <= n; ++j) {
    const auto x = static_cast<Vertex>(j - 1);
    edges.push_back({p(j - 1), split_out(x, n), (n - j + 1) * Q});
    edges.push_back({split_in(x), p(j), j * Q});
  }
  gadget.graph = Graph(3 * n + 1, true, std::move(edges), true);
  gadget.recovery["n"] = n;
  gadget.recovery["M"] = M;
  gadget.recovery["nM"] = n * M;
  gadget.recovery["Q"] = Q;
  gadget.recovery["offset"] = (n + 1) * Q;
  return gadget;
}

WeightWithReport mwc_via_2sisp(const Graph& g, const TwoSispOracle& two_sisp_oracle,
                               const MwcVia2SispOptions& options) {
  WeightWithReport out;
  out.report = start_report("mwc-to-2sisp", g);
  out.report.budget = {1, 3 * g.n() + 1, g.m() + 4 * g.n()};
  if (g.m() == 0) return out;
  Stopwatch watch;
  const GadgetGraph gadget = build_mwc_2sisp_gadget(g);
  out.report.construction_seconds = watch.lap();
  const Distance second = call_oracle(out.report, two_sisp_oracle, gadget.graph, gadget.role("p[0]"),
                                      gadget.role(indexed("p", g.n())));
  watch.lap();
  const Weight offset = gadget.param("offset") - (options.offset_fault ? 1 : 0);
  out.weight = cut_off(second, offset, gadget.param("nM"));
  out.report.recovery_seconds = watch.lap();
  return out;
}

GadgetGraph build_repl_ansc_gadget(const Graph& g, Vertex s, Vertex t) {
  const StPath p = canonical_st_path(g, s, t);
  const std::size_t n = g.n();
  const std::size_t l = p.l();
  GadgetGraph gadget;
  auto edges = edges_without_path(g, p);
  for (std::size_t j = 0; j < l; ++j) {
    const auto z = static_cast<Vertex>(n + j);
    gadget.roles[indexed("z", j)] = z;
    edges.push_back({z, p.v[j], p.prefix[j]});
    edges.push_back({p.v[j + 1], z, p.suffix(j + 1)});
    if (j > 0) edges.push_back({z, static_cast<Vertex>(z - 1), 0});
  }
  gadget.graph = Graph(n + l, true, std::move(edges), true);
  const Weight M = max_weight_of(g);
  gadget.recovery["n"] = n;
  gadget.recovery["M"] = M;
  gadget.recovery["nM"] = n * M;
  gadget.recovery["l"] = l;
  return gadget;
}

ReplacementWithReport replacement_paths_via_ansc(const Graph& g, Vertex s, Vertex t, const AnscOracle& ansc_oracle) {
  ReplacementWithReport out;
  out.report = start_report("rp-to-ansc", g);
  Stopwatch watch;
  const GadgetGraph gadget = build_repl_ansc_gadget(g, s, t);
  out.report.construction_seconds = watch.lap();
  const std::size_t l = gadget.param("l");
  out.report.budget = {1, g.n() + l, g.m() + 3 * l};
  const auto ansc = call_oracle(out.report, ansc_oracle, gadget.graph);
  watch.lap();
  for (std::size_t j = 0; j < l; ++j) {
    out.avoiding.push_back(cut_off(ansc.at(gadget.role(indexed("z", j))), 0, gadget.param("nM")));
  }
  out.report.recovery_seconds = watch.lap();
  return out;
}

WeightsWithReport ansc_via_replacement_paths(const Graph& g, const ReplacementPathsOracle& rp_oracle) {
  WeightsWithReport out;
  out.report = start_report("ansc-to-rp", g);
  out.report.budget = {1, 3 * g.n() + 1, g.m() + 4 * g.n()};
  out.weights.assign(g.n(), Distance::infinity());
  if (g.m() == 0) return out;
  Stopwatch watch;
  const GadgetGraph gadget = build_mwc_2sisp_gadget(g);
  out.report.construction_seconds = watch.lap();
  const Vertex p0 = gadget.role("p[0]");
  const ReplacementPaths rp =
      call_oracle(out.report, rp_oracle, gadget.graph, p0, gadget.role(indexed("p", g.n())));
  watch.lap();
  // The zero-weight p chain is the unique shortest path.
  if (rp.path.vertices.size() != g.n() + 1 || rp.path.vertices.front() != p0 || rp.avoiding.size() != g.n()) {
    throw Error(ErrorCode::ParamOutOfRange, "replacement-paths oracle returned an unexpected path");
  }
  for (std::size_t x = 0; x < g.n(); ++x) {
    out.weights[x] = cut_off(rp.avoiding[x], gadget.param("offset"), gadget.param("nM"));
  }
  out.report.recovery_seconds = watch.lap();
  return out;
}

WeightWithReport two_sisp_via_replacement_paths(const Graph& g, Vertex s, Vertex t,
                                                const ReplacementPathsOracle& rp_oracle) {
  WeightWithReport out;
  out.report = start_report("2sisp-to-rp", g);
  out.report.budget = {1, g.n(), g.m()};
  const ReplacementPaths rp = call_oracle(out.report, rp_oracle, g, s, t);
  for (const Distance d : rp.avoiding) out.weight = std::min(out.weight, d);
  return out;
}

GadgetGraph build_2sisp_bc_gadget(const Graph& g, Vertex s, Vertex t, Weight q) {
  require_directed(g);
  const Weight M = g.m() == 0 ? 0 : max_weight_of(g);
  const std::size_t n = g.n();
  const Weight nM = n * M;
  if (q > nM) throw Error(ErrorCode::ProbeOutOfRange, "q = " + std::to_string(q) + " exceeds nM");
  const StPath p = canonical_st_path(g, s, t);
  const std::size_t l = p.l();
  const auto z_out0 = static_cast<Vertex>(n);
  const auto z_in0 = static_cast<Vertex>(n + l);
  const auto y_out0 = static_cast<Vertex>(n + 2 * l);
  const auto y_in0 = static_cast<Vertex>(n + 3 * l);
  const auto a = static_cast<Vertex>(n + 4 * l);
  const auto c0 = static_cast<Vertex>(a + 1);

  GadgetGraph gadget;
  auto edges = edges_without_path(g, p);
  add_detour_terminals(edges, gadget.roles, p, z_out0, z_in0);
  for (std::size_t j = 0; j < l; ++j) {
    const auto yo = static_cast<Vertex>(y_out0 + j);
    const auto yi = static_cast<Vertex>(y_in0 + j);
    gadget.roles[indexed("y_out", j)] = yo;
    gadget.roles[indexed("y_in", j)] = yi;
    edges.push_back({yo, static_cast<Vertex>(z_out0 + j), 0});
    edges.push_back({static_cast<Vertex>(z_in0 + j), yi, 9 * nM});
    edges.push_back({yo, a, 0});
    edges.push_back({a, yi, 9 * nM + q});
  }
  gadget.roles["A"] = a;
  add_bit_layer(edges, gadget.roles, l, y_out0, y_in0, c0, 3 * nM);

  gadget.graph = Graph(bc_gadget_vertices(n, l), true, std::move(edges), true);
  fill_common_recovery(gadget, n, M, l);
  gadget.recovery["q"] = q;
  return gadget;
}

SearchWeightResult two_sisp_via_bc(const Graph& g, Vertex s, Vertex t, const BcOracle& bc_oracle) {
  SearchWeightResult out;
  out.report = start_report("2sisp-to-bc", g);
  const Weight nM = g.n() * max_weight_of(g);
  const std::size_t l = canonical_st_path(g, s, t).l();
  out.report.budget = {binary_search_budget(g.n(), max_weight_of(g)), bc_gadget_vertices(g.n(), l),
                       path_gadget_edge_bound(g.m(), l)};
  auto& tr = out.transcript;
  tr.lo = 0;
  tr.hi = nM + 1;
  Weight lo = tr.lo;
  Weight hi = tr.hi;
  Stopwatch watch;
  while (lo < hi) {
    const Weight mid = lo + (hi - lo) / 2;
    watch.lap();
    const GadgetGraph gadget = build_2sisp_bc_gadget(g, s, t, mid);
    out.report.construction_seconds += watch.lap();
    const std::uint64_t bc = call_oracle(out.report, bc_oracle, gadget.graph, gadget.role("A"));
    const bool below = bc < l;
    tr.probes.push_back({{mid}, {below}});
    if (below) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  out.weight = lo > nM ? Distance::infinity() : Distance(lo);
  return out;
}

GadgetGraph build_pos_anbc_gadget(const Graph& g, const std::vector<Weight>& q) {
  require_directed(g);
  const std::size_t n = g.n();
  if (q.size() != n) throw Error(ErrorCode::ParamOutOfRange, "need one probe weight per vertex");
  GadgetGraph gadget = split_all_vertices(g);
  auto edges = std::vector<Edge>(gadget.graph.edges().begin(), gadget.graph.edges().end());
  for (Vertex x = 0; x < n; ++x) {
    const auto z = static_cast<Vertex>(2 * n + x);
    gadget.roles[indexed("z", x)] = z;
    edges.push_back({split_out(x, n), z, 0});
    edges.push_back({z, split_in(x), q[x]});
  }
  gadget.graph = Graph(3 * n, true, std::move(edges), true);
  const Weight M = g.m() == 0 ? 0 : max_weight_of(g);
  gadget.recovery["n"] = n;
  gadget.recovery["M"] = M;
  gadget.recovery["nM"] = n * M;
  return gadget;
}

SearchWeightsResult ansc_via_pos_anbc(const Graph& g, const PosAnbcOracle& pos_oracle) {
  require_directed(g);
  SearchWeightsResult out;
  out.report = start_report("ansc-to-posanbc", g);
  const std::size_t n = g.n();
  out.weights.assign(n, Distance::infinity());
  if (g.m() == 0) return out;
  const Weight M = max_weight_of(g);
  const Weight nM = n * M;
  out.report.budget = {binary_search_budget(n, M), 3 * n, g.m() + 3 * n};
  auto& tr = out.transcript;
  tr.lo = 0;
  tr.hi = nM + 1;
  std::vector<Weight> lo(n, tr.lo);
  std::vector<Weight> hi(n, tr.hi);
  const auto open = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      if (lo[x] < hi[x]) return true;
    }
    return false;
  };
  Stopwatch watch;
  while (open()) {
    std::vector<Weight> q(n);
    for (std::size_t x = 0; x < n; ++x) q[x] = lo[x] < hi[x] ? lo[x] + (hi[x] - lo[x]) / 2 : lo[x];
    watch.lap();
    const GadgetGraph gadget = build_pos_anbc_gadget(g, q);
    out.report.construction_seconds += watch.lap();
    const auto positive = call_oracle(out.report, pos_oracle, gadget.graph);
    BinarySearchTranscript::Probe probe{q, std::vector<bool>(n)};
    for (std::size_t x = 0; x < n; ++x) {
      const bool zero = !positive.at(gadget.role(indexed("z", x)));
      probe.answer[x] = zero;
      if (lo[x] >= hi[x]) continue;
      if (zero) {
        hi[x] = q[x];
      } else {
        lo[x] = q[x] + 1;
      }
    }
    tr.probes.push_back(std::move(probe));
  }
  for (std::size_t x = 0; x < n; ++x) out.weights[x] = lo[x] > nM ? Distance::infinity() : Distance(lo[x]);
  return out;
}

}  // namespace sprs
