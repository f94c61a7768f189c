#include "brute_force.hpp"
#include "doctest.h"
#include "sprs/directed.hpp"
#include "sprs/error.hpp"
#include "sprs/generate.hpp"

using namespace sprs;

namespace {

Graph directed_triangle() { return Graph(3, true, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}); }

// s = 0, a = 1, t = 2: s->t weighs 5, s->a->t weighs 4.
Graph shortcut() { return Graph(3, true, {{0, 2, 5}, {0, 1, 2}, {1, 2, 2}}); }

// Path 0->1->2->3 with detours 0->4->2 and 1->5->3.
Graph three_edge_path() {
  return Graph(6, true, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 4, 2}, {4, 2, 2}, {1, 5, 3}, {5, 3, 1}});
}

std::optional<Vertex> reachable_target(const Graph& g, Vertex s, std::uint64_t salt) {
  const auto d = brute::floyd_warshall(g);
  std::vector<Vertex> ts;
  for (Vertex t = 0; t < g.n(); ++t) {
    if (t != s && d[s * g.n() + t].is_finite()) ts.push_back(t);
  }
  if (ts.empty()) return std::nullopt;
  return ts[salt % ts.size()];
}

std::size_t count_edges_between(const GadgetGraph& gg, const std::string& prefix_u, const std::string& prefix_v) {
  std::set<Vertex> us, vs;
  for (const auto& [name, v] : gg.roles) {
    if (name.rfind(prefix_u, 0) == 0) us.insert(v);
    if (name.rfind(prefix_v, 0) == 0) vs.insert(v);
  }
  std::size_t c = 0;
  for (const auto& e : gg.graph.edges()) c += (us.count(e.u) && vs.count(e.v)) ? 1 : 0;
  return c;
}

// Subgraph holding only arcs that touch the C layer.
Graph c_layer(const GadgetGraph& gg) {
  std::set<Vertex> cs;
  for (const auto& [name, v] : gg.roles) {
    if (name.rfind("C[", 0) == 0) cs.insert(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : gg.graph.edges()) {
    if (cs.count(e.u) || cs.count(e.v)) edges.push_back(e);
  }
  return Graph(gg.graph.n(), true, std::move(edges), true);
}

std::string idx(const char* base, std::size_t j) { return std::string(base) + "[" + std::to_string(j) + "]"; }

}  // namespace

TEST_CASE("radius gadget shape for a three-edge path") {
  const Graph g = three_edge_path();
  const auto gg = build_2sisp_radius_gadget(g, 0, 3);
  const std::size_t n = g.n();
  const std::size_t l = 3;
  const Weight nM = gg.param("nM");
  CHECK(gg.param("l") == l);
  CHECK(nM == n * 3);
  CHECK(gg.graph.n() == radius_gadget_vertices(n, l));
  CHECK(gg.graph.n() == n + 4 * l + 2 + 2 * 2);
  CHECK(gg.roles.count("C[2][1]") == 1);
  CHECK(gg.roles.count("C[3][0]") == 0);
  // P's arcs are gone, the detours remain.
  CHECK_FALSE(gg.graph.weight(0, 1).has_value());
  CHECK(gg.graph.weight(0, 4) == Weight{2});

  for (std::size_t j = 0; j < l; ++j) {
    const Vertex zo = gg.role(idx("z_out", j));
    const Vertex zi = gg.role(idx("z_in", j));
    const Vertex yo = gg.role(idx("y_out", j));
    const Vertex yi = gg.role(idx("y_in", j));
    CHECK(gg.graph.weight(zo, static_cast<Vertex>(j)) == Weight{j});
    CHECK(gg.graph.weight(static_cast<Vertex>(j + 1), zi) == Weight{l - j - 1});
    CHECK(gg.graph.weight(zi, zo) == Weight{0});
    if (j > 0) CHECK(gg.graph.weight(zo, gg.role(idx("z_in", j - 1))) == Weight{0});
    CHECK(gg.graph.weight(yo, zo) == Weight{0});
    CHECK(gg.graph.weight(zi, yi) == 11 * nM);
    CHECK(gg.graph.weight(yo, gg.role("A")) == Weight{0});
    CHECK(gg.graph.weight(gg.role("B"), yo) == 9 * nM);
  }
  CHECK(gg.graph.weight(gg.role("A"), gg.role("B")) == Weight{0});
  // Each C vertex touches every y index once, on one side or the other.
  CHECK(count_edges_between(gg, "y_out", "C[") + count_edges_between(gg, "C[", "y_in") == 2 * 2 * l);
  for (const auto& e : gg.graph.edges()) {
    if (e.v == gg.role("C[1][0]") && e.u == gg.role("A")) {
      CHECK(e.w == 9 * nM);
    } else if (e.u == gg.role("C[1][0]") || e.v == gg.role("C[1][0]")) {
      CHECK(e.w == 3 * nM);
    }
  }
}

TEST_CASE("radius gadget C layer") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(GraphSpec{8, 16, true, 1, 9, true}, seed);
    const auto t = reachable_target(g, 0, seed);
    if (!t) continue;
    const auto gg = build_2sisp_radius_gadget(g, 0, *t);
    const std::size_t l = gg.param("l");
    const Graph layer = c_layer(gg);
    for (std::size_t j = 0; j < l; ++j) {
      const auto d = dijkstra(layer, gg.role(idx("y_out", j))).dist;
      for (std::size_t k = 0; k < l; ++k) {
        const Distance expected = j == k ? Distance::infinity() : Distance(6 * gg.param("nM"));
        CHECK(d[gg.role(idx("y_in", k))] == expected);
      }
    }
  }
}

TEST_CASE("radius gadget worked example") {
  // s = 0, a = 1, t = 2, b = 3; detour s->b->t weighs 4.
  const Graph g(4, true, {{0, 1, 1}, {1, 2, 1}, {0, 3, 2}, {3, 2, 2}});
  const auto gg = build_2sisp_radius_gadget(g, 0, 2);
  const Weight nM = 4 * 2;
  CHECK(radius(gg.graph).value == Distance(11 * nM + 4));
  CHECK(two_sisp_via_radius(g, 0, 2).weight == Distance(4));
  CHECK(replacement_paths_naive(g, 0, 2).avoiding == std::vector<Distance>{Distance(4), Distance(4)});
  CHECK(replacement_paths_via_eccentricities(g, 0, 2).avoiding ==
        std::vector<Distance>{Distance(4), Distance(4)});
}

TEST_CASE("second shortest path via radius examples") {
  CHECK(two_sisp_via_radius(shortcut(), 0, 2).weight == Distance(5));
  CHECK(two_sisp_via_radius(Graph(3, true, {{0, 1, 1}, {1, 2, 1}}), 0, 2).weight.is_infinite());
  CHECK(two_sisp_via_radius(Graph(3, true, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}}), 0, 2).weight == Distance(3));
}

TEST_CASE("eccentricity of y_out tracks the replacement path") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(GraphSpec{7, 14, true, 1, 9, true}, seed);
    const auto t = reachable_target(g, 0, seed);
    if (!t) continue;
    const auto gg = build_2sisp_radius_gadget(g, 0, *t);
    const std::size_t l = gg.param("l");
    const Weight nM = gg.param("nM");
    const auto ecc = eccentricities(gg.graph);
    const auto rp = replacement_paths_naive(g, 0, *t);
    for (std::size_t j = 0; j < l; ++j) {
      const Distance via = Distance(11 * nM) + rp.avoiding[j];
      const Distance expected = std::min(via, Distance(12 * nM));
      CHECK(ecc[gg.role(idx("y_out", j))] == expected);
    }
    const auto rad = radius(gg.graph);
    bool center_is_y_out = false;
    for (std::size_t j = 0; j < l; ++j) center_is_y_out |= rad.center == gg.role(idx("y_out", j));
    CHECK(center_is_y_out);
    CHECK(rad.value <= Distance(12 * nM));
  }
}

TEST_CASE("minimum weight cycle gadget") {
  const Graph tri = directed_triangle();
  const auto gg = build_mwc_2sisp_gadget(tri);
  const std::size_t n = 3;
  CHECK(gg.graph.n() == 2 * n + n + 1);
  CHECK(gg.graph.m() == n + tri.m() + n + 2 * n);
  const Weight Q = gg.param("Q");
  CHECK(Q == n * 1);
  CHECK(gg.param("offset") == (n + 1) * Q);
  for (std::size_t j = 0; j < n; ++j) CHECK(gg.graph.weight(gg.role(idx("p", j)), gg.role(idx("p", j + 1))) == Weight{0});
  // x = 0 is the first vertex: p_0 -> out(0) weighs nQ, in(0) -> p_1 weighs Q.
  CHECK(gg.graph.weight(gg.role("p[0]"), static_cast<Vertex>(n)) == n * Q);
  CHECK(gg.graph.weight(0, gg.role("p[1]")) == Q);
  const auto paths = k_sisp_yen(gg.graph, gg.role("p[0]"), gg.role(idx("p", n)), 2);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].weight == 0);
  CHECK(paths[1].weight == (n + 1) * Q + 3);

  CHECK(mwc_via_2sisp(tri).weight == Distance(3));
  CHECK(mwc_via_2sisp(Graph(3, true, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).weight.is_infinite());
  CHECK(mwc_via_2sisp(tri, oracle::two_sisp(), {true}).weight != Distance(3));
}

TEST_CASE("replacement paths through ansc") {
  const Graph g = three_edge_path();
  const auto gg = build_repl_ansc_gadget(g, 0, 3);
  CHECK(gg.graph.n() == g.n() + 3);
  CHECK(gg.graph.m() == g.m() - 3 + 2 * 3 + 2);
  CHECK(gg.graph.weight(gg.role("z[1]"), gg.role("z[0]")) == Weight{0});
  CHECK(gg.graph.weight(gg.role("z[2]"), 2) == Weight{2});
  CHECK(gg.graph.weight(3, gg.role("z[2]")) == Weight{0});

  CHECK(replacement_paths_via_ansc(shortcut(), 0, 2).avoiding == std::vector<Distance>{Distance(5), Distance(5)});
  CHECK(replacement_paths_via_ansc(g, 0, 3).avoiding == replacement_paths_naive(g, 0, 3).avoiding);
}

TEST_CASE("ansc through replacement paths examples") {
  CHECK(ansc_via_replacement_paths(directed_triangle()).weights == std::vector<Distance>(3, Distance(3)));
  CHECK(ansc_via_replacement_paths(Graph(3, true, {{0, 1, 1}, {1, 2, 1}})).weights ==
        std::vector<Distance>(3, Distance::infinity()));
  CHECK(two_sisp_via_replacement_paths(shortcut(), 0, 2).weight == Distance(5));
}

TEST_CASE("betweenness gadget") {
  const Graph g = three_edge_path();
  const auto gg = build_2sisp_bc_gadget(g, 0, 3, 0);
  const std::size_t l = 3;
  const Weight nM = gg.param("nM");
  CHECK(gg.graph.n() == bc_gadget_vertices(g.n(), l));
  CHECK(gg.graph.n() == g.n() + 4 * l + 2 * 2 + 1);
  CHECK(gg.roles.count("B") == 0);
  for (std::size_t j = 0; j < l; ++j) {
    CHECK(gg.graph.weight(gg.role(idx("z_in", j)), gg.role(idx("y_in", j))) == 9 * nM);
    CHECK(gg.graph.weight(gg.role("A"), gg.role(idx("y_in", j))) == 9 * nM);
  }
  CHECK(bc_strict(gg.graph, gg.role("A")) == l);
  CHECK_THROWS_AS(build_2sisp_bc_gadget(g, 0, 3, nM + 1), Error);

  const auto r = two_sisp_via_bc(shortcut(), 0, 2);
  CHECK(r.weight == Distance(5));
  CHECK(r.transcript.calls() <= binary_search_budget(3, 5));
  CHECK(two_sisp_via_bc(Graph(3, true, {{0, 1, 1}, {1, 2, 1}}), 0, 2).weight.is_infinite());
}

TEST_CASE("betweenness of A is monotone in q") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(GraphSpec{6, 11, true, 1, 5, true}, seed);
    const auto t = reachable_target(g, 0, seed);
    if (!t) continue;
    const auto rp = replacement_paths_naive(g, 0, *t);
    const Weight nM = 6 * weight_profile(g).max_weight;
    std::uint64_t prev = ~std::uint64_t{0};
    for (Weight q = 0; q <= nM; ++q) {
      const auto gg = build_2sisp_bc_gadget(g, 0, *t, q);
      const auto bc = bc_strict(gg.graph, gg.role("A"));
      std::uint64_t expected = 0;
      for (const Distance d : rp.avoiding) expected += Distance(q) < d ? 1 : 0;
      CHECK(bc == expected);
      CHECK(bc <= prev);
      prev = bc;
    }
  }
}

TEST_CASE("pos anbc gadget") {
  const Graph tri = directed_triangle();
  const auto gg = build_pos_anbc_gadget(tri, {1, 2, 3});
  CHECK(gg.graph.n() == 9);
  CHECK(gg.graph.m() == 3 + 3 + 6);
  CHECK(gg.graph.weight(3, gg.role("z[0]")) == Weight{0});
  CHECK(gg.graph.weight(gg.role("z[2]"), 2) == Weight{3});

  const auto r = ansc_via_pos_anbc(tri);
  CHECK(r.weights == std::vector<Distance>(3, Distance(3)));
  CHECK(r.transcript.calls() <= binary_search_budget(3, 1));
  CHECK(r.report.oracle_calls() == r.transcript.calls());
}

TEST_CASE("directed chain agrees with direct solvers") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const std::size_t m = std::min<std::size_t>(max_simple_edges(n, true), n + seed % 9);
    const Graph g = random_graph(GraphSpec{n, m, true, 1, 8, true}, seed);
    const Distance mwc = brute::min_cycle(g);
    const auto through = brute::min_cycle_through(g);
    CHECK(mwc_via_2sisp(g).weight == mwc);
    CHECK(ansc_via_replacement_paths(g).weights == through);
    CHECK(ansc_via_pos_anbc(g).weights == through);

    const auto t = reachable_target(g, 0, seed);
    if (!t) continue;
    const auto rp = replacement_paths_naive(g, 0, *t);
    Distance best;
    for (const Distance d : rp.avoiding) best = std::min(best, d);
    CHECK(two_sisp_via_radius(g, 0, *t).weight == best);
    CHECK(two_sisp_via_replacement_paths(g, 0, *t).weight == best);
    CHECK(two_sisp_via_bc(g, 0, *t).weight == best);
    CHECK(two_sisp_yen(g, 0, *t) == best);
    CHECK(replacement_paths_via_eccentricities(g, 0, *t).avoiding == rp.avoiding);
    CHECK(replacement_paths_via_ansc(g, 0, *t).avoiding == rp.avoiding);
  }
}

TEST_CASE("binary search budget") {
  CHECK(binary_search_budget(3, 1) == 4);   // nM + 2 = 5 -> 3 + 1
  CHECK(binary_search_budget(2, 1) == 3);   // 4 -> 2 + 1
  CHECK(binary_search_budget(10, 16) == 9); // 162 -> 8 + 1
}
