// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "brute_force.hpp"
#include "sprs/centrality.hpp"
#include "sprs/directed.hpp"
#include "sprs/generate.hpp"
#include "sprs/hardness.hpp"
#include "sprs/harness.hpp"
#include "sprs/undirected.hpp"

using namespace sprs;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

CampaignSummary campaign(const std::string& name, std::size_t trials, std::uint64_t seed, bool fault = false) {
  CampaignConfig cfg = CampaignConfig::defaults(name);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.inject_fault = fault;
  return verify_reduction(cfg);
}

void require_clean(Verdict& v, const CampaignSummary& s, std::size_t min_trials) {
  const std::string& name = s.config.reduction;
  v.require(s.trials.size() >= min_trials, name + ": too few trials");
  v.require(s.failed() == 0, name + ": " + std::to_string(s.failed()) + " failed trial(s)");
  v.require(s.budget_violations() == 0, name + ": budget violations");
  for (const auto& t : s.trials) {
    if (!t.error.empty()) {
      v.require(false, name + " trial " + std::to_string(t.index) + ": " + t.error);
      break;
    }
  }
  v.detail << name << " " << s.passed() << "/" << s.trials.size() << "; ";
}

std::string idx(const char* base, std::size_t j) { return std::string(base) + "[" + std::to_string(j) + "]"; }

// ---------------------------------------------------------------------------

void criterion1(Verdict& v) {
  const auto s = campaign("mwc-to-apsp", 300, 7);
  require_clean(v, s, 300);
  const auto& entry = find_reduction("mwc-to-apsp");
  std::size_t family_graphs = 0;
  std::size_t over_2m = 0;
  std::size_t over_3m = 0;
  for (const auto& t : s.trials) {
    const auto inst = draw_instance(entry, s.config, t.index);
    const Graph& g = inst.graph;
    v.require(g.n() <= 40 && g.m() <= 120 && is_weakly_connected(g), "instance outside envelope");
    const unsigned width = label_width(g.n());
    const unsigned K = bucket_count(weight_profile(g));
    v.require(t.oracle_calls == 2 * std::size_t{width} * K + 1, "call count differs from 2*width*K + 1");
    for (unsigned i = 1; i <= width; ++i) {
      for (unsigned j = 0; j <= 1; ++j) {
        for (unsigned k = 1; k <= K; ++k) {
          const auto b = build_gijk(g, i, j, k);
          ++family_graphs;
          v.require(b.graph.n() == 2 * g.n(), "reduced graph without exactly 2n vertices");
          if (b.graph.m() > 2 * g.m()) ++over_2m;
          if (b.graph.m() > 3 * g.m()) ++over_3m;
        }
      }
    }
  }
  v.require(over_2m == 0, std::to_string(over_2m) + " reduced graph(s) with more than 2m edges");
  v.require(over_3m == 0, std::to_string(over_3m) + " reduced graph(s) with more than 3m edges");
  v.detail << family_graphs << " reduced graphs checked, " << over_2m << " above 2m edges, " << over_3m
           << " above 3m";
}

void criterion2(Verdict& v) {
  const auto s = campaign("ansc-to-apsp", 200, 7);
  require_clean(v, s, 200);
  const auto& entry = find_reduction("ansc-to-apsp");
  for (const auto& t : s.trials) {
    const auto inst = draw_instance(entry, s.config, t.index);
    const Graph& g = inst.graph;
    v.require(g.n() <= 60 && weight_profile(g).max_weight == 1, "instance outside envelope");
    const unsigned width = label_width(g.n());
    v.require(t.oracle_calls == 2 * std::size_t{width} + 1, "family size differs from 2*width");
  }
  v.detail << "family size 2*width on every instance";
}

void criterion3(Verdict& v) {
  for (const char* name : {"mwc-to-2sisp", "2sisp-to-radius", "rp-to-ecc", "rp-to-ansc", "ansc-to-rp"}) {
    const auto s = campaign(name, 300, 7);
    require_clean(v, s, 300);
    // Instances whose direct answer contains at least one finite value.
    const auto& entry = find_reduction(name);
    std::size_t finite = 0;
    for (const auto& t : s.trials) {
      const auto inst = draw_instance(entry, s.config, t.index);
      const auto out = entry.run(inst.graph, inst.params, false);
      bool any = false;
      const std::function<void(const nlohmann::json&)> scan = [&](const nlohmann::json& j) {
        if (j.is_number()) any = true;
        if (j.is_structured()) {
          for (const auto& x : j) scan(x);
        }
      };
      scan(out.direct_answer);
      finite += any ? 1 : 0;
    }
    v.detail << "(" << finite << " finite) ";
  }
}

void criterion4(Verdict& v) {
  for (const char* name : {"2sisp-to-bc", "ansc-to-posanbc"}) {
    const auto s = campaign(name, 200, 7);
    require_clean(v, s, 200);
    const auto& entry = find_reduction(name);
    std::size_t longest = 0;
    for (const auto& t : s.trials) {
      const auto inst = draw_instance(entry, s.config, t.index);
      const std::size_t budget = binary_search_budget(inst.graph.n(), weight_profile(inst.graph).max_weight);
      v.require(t.oracle_calls <= budget, std::string(name) + ": transcript longer than the budget");
      longest = std::max(longest, t.oracle_calls);
    }
    v.detail << "longest transcript " << longest << "; ";
  }
}

void criterion5(Verdict& v) {
  const auto s = campaign("ksisc-to-ksisp", 100, 7);
  require_clean(v, s, 100);
  const auto& entry = find_reduction("ksisc-to-ksisp");
  std::size_t comparisons = 0;
  for (const auto& t : s.trials) {
    const auto inst = draw_instance(entry, s.config, t.index);
    const Graph& g = inst.graph;
    v.require(g.n() <= 12, "instance outside envelope");
    const auto x = inst.params.at("x").get<Vertex>();
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto reduced = k_sisc_via_k_sisp(g, x, k);
      const auto direct = k_sisc_bruteforce(g, x, k);
      std::vector<Weight> a, b;
      for (const auto& c : reduced.cycles) {
        a.push_back(c.weight);
        v.require(is_valid_cycle(g, c), "reduction returned an invalid cycle");
      }
      for (const auto& c : direct) b.push_back(c.weight);
      v.require(a == b, "k-SiSC weights differ at k = " + std::to_string(k));
      v.require(a == brute::cycle_weights_through(g, x, k), "k-SiSC differs from enumeration");
      ++comparisons;
    }
  }
  v.detail << comparisons << " (instance, k) comparisons";
}

void criterion6(Verdict& v) {
  std::size_t graphs = 0;
  std::size_t decisions = 0;
  std::size_t even_diameters = 0;
  auto check = [&](const Graph& g) {
    for (std::size_t k = 2; k <= 4; ++k) {
      const bool expected = brute::has_dominating_set(g, k);
      const auto r = k_dominating_via_diameter(g, k);
      v.require(r.exists == expected, "disagreement with brute force");
      ++decisions;
      if (k % 2 == 0 && k <= g.n() && !brute::has_dominating_set(g, k / 2)) {
        v.require(r.diameters.size() == 1, "even k made more than one call");
        const Distance d = r.diameters.front();
        v.require(d == Distance(2) || d == Distance(3), "even gadget diameter outside {2,3}");
        ++even_diameters;
      }
    }
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    }
    for (std::uint32_t mask = 1; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if (mask >> e & 1u) edges.push_back({slots[e].first, slots[e].second, 1});
      }
      const Graph g(n, false, std::move(edges));
      if (!is_weakly_connected(g)) continue;
      ++graphs;
      check(g);
    }
  }
  const auto s = campaign("kds-diameter", 100, 7);
  require_clean(v, s, 100);
  const auto& entry = find_reduction("kds-diameter");
  for (const auto& t : s.trials) {
    const auto inst = draw_instance(entry, s.config, t.index);
    v.require(inst.graph.n() <= 10, "instance outside envelope");
    check(inst.graph);
  }
  v.detail << graphs << " connected graphs with n <= 6; " << decisions << " decisions; " << even_diameters
           << " even-gadget diameters in {2,3}";
}

// Half-weight inequalities for edge offset p from `start`.
bool straddles_half(const std::vector<Weight>& ws, std::size_t start, std::size_t p) {
  const std::size_t len = ws.size();
  const auto total = static_cast<std::int64_t>(std::accumulate(ws.begin(), ws.end(), Weight{0}));
  const std::int64_t floor_half = total / 2;
  const std::int64_t ceil_half = total - floor_half;
  std::int64_t before = 0;
  for (std::size_t s = 0; s < p; ++s) before += static_cast<std::int64_t>(ws[(start + s) % len]);
  const auto w = static_cast<std::int64_t>(ws[(start + p) % len]);
  const std::int64_t after = total - before - w;
  return ceil_half - w <= before && before <= floor_half && ceil_half - w <= after && after <= floor_half;
}

void critical_edges(Verdict& v, std::mt19937_64& rng) {
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t len = 3 + rng() % 14;
    std::vector<Vertex> ids(len + rng() % 5);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(len);
    std::vector<Edge> edges;
    std::vector<Weight> ws(len);
    Weight total = 0;
    for (std::size_t i = 0; i < len; ++i) {
      ws[i] = 1 + rng() % (trial % 2 == 0 ? 64 : 4);
      total += ws[i];
      edges.push_back({ids[i], ids[(i + 1) % len], ws[i]});
    }
    const Graph g(len + 4, false, std::move(edges));
    const std::size_t start = rng() % len;
    const std::size_t p = critical_edge(g, CycleWitness{total, ids}, start);
    v.require(p < len && straddles_half(ws, start, p), "critical edge violates the inequalities");
  }
  v.detail << "500 critical edges; ";
}

void mwc_path_property(Verdict& v, std::mt19937_64& rng) {
  std::size_t instances = 0;
  std::size_t drawn = 0;
  while (instances < 100 && drawn < 5000) {
    ++drawn;
    const std::size_t n = 5 + rng() % 8;
    const std::size_t m = std::min<std::size_t>(max_simple_edges(n, false), n + rng() % (n + 4));
    const Graph g = random_graph(GraphSpec{n, m, false, 1, 64, true}, rng());
    const auto cycles = brute::simple_cycles(g);
    if (cycles.empty()) continue;
    Weight best = ~Weight{0};
    std::size_t at_best = 0;
    std::vector<Vertex> c;
    for (const auto& [vs, w] : cycles) {
      if (w < best) {
        best = w;
        at_best = 0;
        c = vs;
      }
      if (w == best) ++at_best;
    }
    if (at_best != 1) continue;
    ++instances;

    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rng() % c.size()), c.end());
    const auto d = brute::floyd_warshall(g);
    auto dist = [&](Vertex a, Vertex b) { return d[std::size_t{a} * n + b]; };
    const std::size_t len = c.size();
    std::size_t p = critical_edge(g, CycleWitness{best, c}, 0);
    if (dist(c[0], c[p]) < dist(c[0], c[(p + 1) % len])) {
      // Walk the cycle the other way round; the same edge stays critical.
      const Vertex a = c[p];
      const Vertex b = c[(p + 1) % len];
      std::reverse(c.begin() + 1, c.end());
      for (std::size_t q = 0; q < len; ++q) {
        if (c[q] == b && c[(q + 1) % len] == a) p = q;
      }
    }
    std::vector<Weight> ws(len);
    for (std::size_t q = 0; q < len; ++q) ws[q] = *g.weight(c[q], c[(q + 1) % len]);
    v.require(straddles_half(ws, 0, p), "orientation flip lost the critical edge");
    v.require(dist(c[0], c[p]) >= dist(c[0], c[(p + 1) % len]), "orientation assumption fails");
    v.require(p >= 1, "critical edge starts at v1");
    if (p == 0) continue;

    // G' drops (v_(p-1), v_p); P walks v1, v_l, ..., v_(p+1), v_p.
    std::vector<Edge> kept;
    const auto removed = *g.edge_index(c[p - 1], c[p]);
    for (std::uint32_t e = 0; e < g.m(); ++e) {
      if (e != removed) kept.push_back(g.edge(e));
    }
    const Graph g2(n, false, std::move(kept));
    Weight around = 0;
    for (std::size_t q = p; q < len; ++q) around += ws[q];
    v.require(brute::floyd_warshall(g2)[std::size_t{c[0]} * n + c[p]] == Distance(around),
              "the other-way path is not shortest in G'");
  }
  v.require(instances == 100, "could not draw 100 unique-MWC instances");
  v.detail << instances << " unique-MWC instances; ";
}

Graph c_layer(const GadgetGraph& gg) {
  std::set<Vertex> cs;
  for (const auto& [name, vertex] : gg.roles) {
    if (name.rfind("C[", 0) == 0) cs.insert(vertex);
  }
  std::vector<Edge> edges;
  for (const auto& e : gg.graph.edges()) {
    if (cs.count(e.u) || cs.count(e.v)) edges.push_back(e);
  }
  return Graph(gg.graph.n(), true, std::move(edges), true);
}

void radius_gadgets(Verdict& v) {
  std::size_t gadgets = 0;
  for (const char* name : {"2sisp-to-radius", "rp-to-ecc"}) {
    const auto& entry = find_reduction(name);
    CampaignConfig cfg = CampaignConfig::defaults(name);
    cfg.trials = 300;
    cfg.seed = 7;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const auto inst = draw_instance(entry, cfg, i);
      const auto s = inst.params.at("source").get<Vertex>();
      const auto t = inst.params.at("target").get<Vertex>();
      const auto gg = build_2sisp_radius_gadget(inst.graph, s, t);
      ++gadgets;
      const std::size_t l = gg.param("l");
      const Weight nM = gg.param("nM");
      const Graph layer = c_layer(gg);
      for (std::size_t j = 0; j < l; ++j) {
        const auto d = dijkstra(layer, gg.role(idx("y_out", j))).dist;
        for (std::size_t k = 0; k < l; ++k) {
          const Distance got = d[gg.role(idx("y_in", k))];
          if (j == k) {
            v.require(got.is_infinite(), "C layer adds a same-index path");
          } else {
            v.require(got == Distance(6 * nM), "C layer misses a 6nM path");
          }
        }
      }
      const auto rp = replacement_paths_naive(inst.graph, s, t);
      const auto ecc = eccentricities(gg.graph);
      for (std::size_t j = 0; j < l; ++j) {
        const Distance via = Distance(11 * nM) + rp.avoiding[j];
        const Distance expected = std::min(via, Distance(12 * nM));
        v.require(ecc[gg.role(idx("y_out", j))] == expected, "ecc(y_out) differs from 11nM + replacement");
      }
      const auto rad = radius(gg.graph);
      bool center_is_y_out = false;
      for (std::size_t j = 0; j < l; ++j) center_is_y_out |= rad.center == gg.role(idx("y_out", j));
      v.require(center_is_y_out, "radius center is not a y_out vertex");
    }
  }
  v.detail << gadgets << " radius gadgets; ";
}

void bc_monotone(Verdict& v, std::mt19937_64& rng) {
  std::size_t instances = 0;
  std::size_t probes = 0;
  while (instances < 50) {
    const std::size_t n = 3 + rng() % 6;
    const std::size_t m = std::min<std::size_t>(max_simple_edges(n, true), n + rng() % (2 * n));
    const Graph g = random_graph(GraphSpec{n, m, true, 1, 8, true}, rng());
    const auto dist = brute::floyd_warshall(g);
    std::vector<Vertex> targets;
    for (Vertex t = 1; t < n; ++t) {
      if (dist[t].is_finite()) targets.push_back(t);
    }
    if (targets.empty()) continue;
    const Vertex t = targets[rng() % targets.size()];
    ++instances;
    const auto rp = replacement_paths_naive(g, 0, t);
    const Weight nM = n * weight_profile(g).max_weight;
    std::uint64_t previous = ~std::uint64_t{0};
    for (Weight q = 0; q <= nM; ++q) {
      const auto gg = build_2sisp_bc_gadget(g, 0, t, q);
      const std::uint64_t bc = bc_strict(gg.graph, gg.role("A"));
      std::uint64_t expected = 0;
      for (const Distance d : rp.avoiding) expected += Distance(q) < d ? 1 : 0;
      v.require(bc == expected, "BC(A) differs from the count of longer replacement paths");
      v.require(bc <= previous, "BC(A) increased with q");
      previous = bc;
      ++probes;
    }
  }
  v.detail << instances << " BC instances, " << probes << " probes";
}

void criterion7(Verdict& v) {
  std::mt19937_64 rng(7);
  critical_edges(v, rng);
  mwc_path_property(v, rng);
  radius_gadgets(v);
  bc_monotone(v, rng);
}

void criterion8(Verdict& v) {
  auto bound = [](std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
    return TimeBound{Rational(an, ad), Rational(bn, bd)};
  };
  struct Case {
    const char* label;
    TimeBound b1, b2;
    BoundComparison expected;
  };
  const std::vector<Case> cases{
      {"m^(3/2) < mn", bound(3, 2, 0, 1), bound(1, 1, 1, 1), BoundComparison::Smaller},
      {"m^(3/2) < n^2", bound(3, 2, 0, 1), bound(0, 1, 2, 1), BoundComparison::Smaller},
      {"m^2 < n^3", bound(2, 1, 0, 1), bound(0, 1, 3, 1), BoundComparison::Smaller},
      {"m^3/n^2 < m^(3/2)", bound(3, 1, -2, 1), bound(3, 2, 0, 1), BoundComparison::Smaller},
      {"n sqrt(m) weakly < m sqrt(n)", bound(1, 2, 1, 1), bound(1, 1, 1, 2), BoundComparison::WeaklySmaller},
  };
  for (const auto& c : cases) {
    const auto got = compare_bounds(c.b1, c.b2);
    v.require(got == c.expected, std::string(c.label) + " gave " + std::string(to_string(got)));
    // The reverse direction must not claim the same ordering.
    v.require(compare_bounds(c.b2, c.b1) == BoundComparison::NotComparableBySufficientCondition,
              std::string(c.label) + " also holds reversed");
  }
  v.detail << cases.size() << " orderings";
}

void criterion9(Verdict& v) {
  for (const char* name : {"mwc-to-apsp", "mwc-to-2sisp"}) {
    const auto s = campaign(name, 300, 7, true);
    std::size_t artifacts = 0;
    for (const auto& t : s.trials) {
      if (!t.passed && !t.artifact.empty() && std::filesystem::exists(t.artifact)) ++artifacts;
    }
    v.require(s.failed() >= 1, std::string(name) + ": injected fault went unnoticed");
    v.require(artifacts >= 1, std::string(name) + ": no failure artifact written");
    v.detail << name << " fault: " << s.failed() << "/" << s.trials.size() << " failed; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Verdict&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::printf("criterion %d: %s (%.1fs) %s\n", id, v.pass ? "PASS" : "FAIL", secs, v.detail.str().c_str());
    for (const auto& p : v.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
