#include "sprs/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sprs/error.hpp"

namespace sprs {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle, bool directed) {
  if (cycle.empty()) return cycle;
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (!directed && cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
  const auto& vs = c.vertices;
  const std::size_t min_len = g.directed() ? 2 : 3;
  if (vs.size() < min_len) return false;
  std::set<Vertex> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return false;
  Weight total = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto w = g.weight(vs[i], vs[(i + 1) % vs.size()]);
    if (!w) return false;
    total += *w;
  }
  return total == c.weight;
}

bool is_valid_path(const Graph& g, const PathWitness& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  std::set<Vertex> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return false;
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto w = g.weight(vs[i], vs[i + 1]);
    if (!w) return false;
    total += *w;
  }
  return total == p.weight;
}

PathWitness canonical_shortest_path(const Graph& g, Vertex s, Vertex t) {
  if (s >= g.n() || t >= g.n()) throw Error(ErrorCode::EndpointOutOfRange, "s or t out of range");
  const auto tree = dijkstra(g, s);
  if (tree.dist[t].is_infinite()) {
    throw Error(ErrorCode::NoPath, std::to_string(t) + " unreachable from " + std::to_string(s));
  }
  return PathWitness{tree.dist[t].value(), tree.path_to(t)};
}

namespace {

bool better(const std::optional<CycleWitness>& current, Weight candidate) {
  return !current || candidate < current->weight;
}

}  // namespace

std::optional<CycleWitness> mwc_direct(const Graph& g) {
  std::optional<CycleWitness> best;
  if (g.directed()) {
    const auto all = apsp(g);
    for (const auto& e : g.edges()) {
      const Distance back = all.dist(e.v, e.u);
      if (back.is_infinite() || !better(best, back.value() + e.w)) continue;
      best = CycleWitness{back.value() + e.w, all.path(e.v, e.u)};
    }
  } else {
    for (std::uint32_t i = 0; i < g.m(); ++i) {
      const Edge& e = g.edge(i);
      Exclusions without_e;
      without_e.ban_edge(i, g.m());
      const auto tree = dijkstra(g, e.u, &without_e);
      const Distance around = tree.dist[e.v];
      if (around.is_infinite() || !better(best, around.value() + e.w)) continue;
      best = CycleWitness{around.value() + e.w, tree.path_to(e.v)};
    }
  }
  if (best) best->vertices = canonical_cycle(std::move(best->vertices), g.directed());
  return best;
}

std::vector<std::optional<CycleWitness>> ansc_direct(const Graph& g) {
  std::vector<std::optional<CycleWitness>> best(g.n());
  if (g.directed()) {
    const auto all = apsp(g);
    for (Vertex v = 0; v < g.n(); ++v) {
      for (const Arc& arc : g.in(v)) {
        const Distance back = all.dist(v, arc.to);
        if (back.is_infinite() || !better(best[v], back.value() + arc.w)) continue;
        best[v] = CycleWitness{back.value() + arc.w, all.path(v, arc.to)};
      }
    }
  } else {
    // The lightest cycle through e = (a, b) closes the shortest a-b path in
    // G - e; the lightest cycle through v is the best over v's edges.
    for (std::uint32_t i = 0; i < g.m(); ++i) {
      const Edge& e = g.edge(i);
      Exclusions without_e;
      without_e.ban_edge(i, g.m());
      const auto tree = dijkstra(g, e.u, &without_e);
      if (tree.dist[e.v].is_infinite()) continue;
      const Weight w = tree.dist[e.v].value() + e.w;
      for (const Vertex end : {e.u, e.v}) {
        if (better(best[end], w)) best[end] = CycleWitness{w, tree.path_to(e.v)};
      }
    }
  }
  for (auto& c : best) {
    if (c) c->vertices = canonical_cycle(std::move(c->vertices), g.directed());
  }
  return best;
}

std::vector<Distance> ansc_weights(const Graph& g) {
  const auto cycles = ansc_direct(g);
  std::vector<Distance> out(cycles.size());
  for (std::size_t v = 0; v < cycles.size(); ++v) {
    if (cycles[v]) out[v] = Distance(cycles[v]->weight);
  }
  return out;
}

std::vector<PathWitness> k_sisp_yen(const Graph& g, Vertex s, Vertex t, std::size_t k) {
  std::vector<PathWitness> accepted;
  if (k == 0 || s >= g.n() || t >= g.n()) return accepted;
  const auto first = dijkstra(g, s);
  if (first.dist[t].is_infinite()) return accepted;
  accepted.push_back({first.dist[t].value(), first.path_to(t)});

  using Candidate = std::pair<Weight, std::vector<Vertex>>;
  std::set<Candidate> candidates;
  std::set<std::vector<Vertex>> known{accepted.front().vertices};

  while (accepted.size() < k) {
    const auto prev = accepted.back().vertices;
    Weight root_weight = 0;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      const Vertex spur = prev[i];
      Exclusions ex;
      for (const auto& p : accepted) {
        if (p.vertices.size() > i + 1 &&
            std::equal(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.vertices.begin())) {
          if (auto e = g.edge_index(p.vertices[i], p.vertices[i + 1])) ex.ban_edge(*e, g.m());
        }
      }
      for (std::size_t r = 0; r < i; ++r) ex.ban_vertex(prev[r], g.n());
      const auto spur_tree = dijkstra(g, spur, &ex);
      if (spur_tree.dist[t].is_finite()) {
        std::vector<Vertex> full(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(i));
        const auto tail = spur_tree.path_to(t);
        full.insert(full.end(), tail.begin(), tail.end());
        if (known.insert(full).second) {
          candidates.emplace(root_weight + spur_tree.dist[t].value(), std::move(full));
        }
      }
      root_weight += *g.weight(prev[i], prev[i + 1]);
    }
    if (candidates.empty()) break;
    auto best = candidates.begin();
    accepted.push_back({best->first, best->second});
    candidates.erase(best);
  }
  return accepted;
}

ReplacementPaths replacement_paths_naive(const Graph& g, Vertex s, Vertex t) {
  ReplacementPaths out;
  out.path = canonical_shortest_path(g, s, t);
  const auto& p = out.path.vertices;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    Exclusions without_e;
    without_e.ban_edge(*g.edge_index(p[j], p[j + 1]), g.m());
    out.avoiding.push_back(dijkstra(g, s, &without_e).dist[t]);
  }
  return out;
}

std::vector<Distance> eccentricities(const Graph& g) {
  const auto all = apsp(g);
  std::vector<Distance> ecc(g.n(), Distance(0));
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y = 0; y < g.n(); ++y) ecc[x] = std::max(ecc[x], all.dist(x, y));
  }
  return ecc;
}

RadiusResult radius(const Graph& g) {
  const auto ecc = eccentricities(g);
  RadiusResult r;
  for (Vertex x = 0; x < ecc.size(); ++x) {
    if (r.center == kNoVertex || ecc[x] < r.value) {
      r.value = ecc[x];
      r.center = x;
    }
  }
  return r;
}

Distance diameter(const Graph& g) {
  Distance d(0);
  for (const auto e : eccentricities(g)) d = std::max(d, e);
  return d;
}

std::vector<CycleWitness> k_sisc_bruteforce(const Graph& g, Vertex x, std::size_t k) {
  if (g.n() > 15) throw Error(ErrorCode::InstanceTooLarge, "exhaustive cycle search is capped at n = 15");
  if (x >= g.n()) throw Error(ErrorCode::EndpointOutOfRange, "x out of range");
  const std::size_t min_len = g.directed() ? 2 : 3;
  std::map<std::vector<Vertex>, Weight> found;
  std::vector<Vertex> path{x};
  std::vector<char> on_path(g.n(), 0);
  on_path[x] = 1;

  const auto extend = [&](auto&& self, Vertex u, Weight w) -> void {
    for (const Arc& arc : g.out(u)) {
      if (arc.to == x) {
        if (path.size() >= min_len) found.emplace(canonical_cycle(path, g.directed()), w + arc.w);
        continue;
      }
      if (on_path[arc.to]) continue;
      on_path[arc.to] = 1;
      path.push_back(arc.to);
      self(self, arc.to, w + arc.w);
      path.pop_back();
      on_path[arc.to] = 0;
    }
  };
  extend(extend, x, 0);

  std::vector<CycleWitness> cycles;
  cycles.reserve(found.size());
  for (auto& [vs, w] : found) cycles.push_back({w, vs});
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const CycleWitness& a, const CycleWitness& b) { return a.weight < b.weight; });
  if (cycles.size() > k) cycles.resize(k);
  return cycles;
}

std::optional<std::vector<Vertex>> k_dominating_set_bruteforce(const Graph& g, std::size_t k) {
  if (g.directed()) throw Error(ErrorCode::ParamOutOfRange, "dominating set needs an undirected graph");
  const std::size_t n = g.n();
  if (n > 64) throw Error(ErrorCode::InstanceTooLarge, "dominating set brute force is capped at n = 64");
  if (k == 0 || k > n) return std::nullopt;
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (const Arc& arc : g.out(v)) closed[v] |= std::uint64_t{1} << arc.to;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    std::uint64_t covered = 0;
    for (const Vertex v : pick) covered |= closed[v];
    if (covered == all) return pick;
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace sprs
