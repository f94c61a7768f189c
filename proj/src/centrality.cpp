#include "sprs/centrality.hpp"

#include "sprs/shortest_paths.hpp"

namespace sprs {

namespace {

constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;

// Adds, for every v != source, the number of vertices strictly dominated
// by v in the tight subgraph rooted at source.
void accumulate_source(const Graph& g, Vertex source, std::vector<std::uint64_t>& bc) {
  const std::size_t n = g.n();
  const auto tree = dijkstra(g, source);
  const auto& dist = tree.dist;
  const auto tight = [&](Vertex u, const Arc& arc, Vertex v) {
    return dist[u].is_finite() && dist[u] + arc.w == dist[v];
  };

  // Iterative DFS for postorder numbers over tight arcs.
  std::vector<std::uint32_t> post(n, kUnvisited);
  std::vector<Vertex> order;  // postorder
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  stack.emplace_back(source, 0);
  seen[source] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back().first;
    const auto arcs = g.out(u);
    if (std::size_t& next = stack.back().second; next < arcs.size()) {
      const Arc& arc = arcs[next++];
      if (!seen[arc.to] && tight(u, arc, arc.to)) {
        seen[arc.to] = 1;
        stack.emplace_back(arc.to, 0);
      }
      continue;
    }
    post[u] = static_cast<std::uint32_t>(order.size());
    order.push_back(u);
    stack.pop_back();
  }

  // Cooper-Harvey-Kennedy iterative dominators.
  std::vector<Vertex> idom(n, kNoVertex);
  idom[source] = source;
  const auto intersect = [&](Vertex a, Vertex b) {
    while (a != b) {
      while (post[a] < post[b]) a = idom[a];
      while (post[b] < post[a]) b = idom[b];
    }
    return a;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex v = *it;
      if (v == source) continue;
      Vertex candidate = kNoVertex;
      for (const Arc& arc : g.in(v)) {
        const Vertex u = arc.to;
        if (post[u] == kUnvisited || idom[u] == kNoVertex || !tight(u, arc, v)) continue;
        candidate = (candidate == kNoVertex) ? u : intersect(u, candidate);
      }
      if (candidate != idom[v]) {
        idom[v] = candidate;
        changed = true;
      }
    }
  }

  // Postorder visits children before their immediate dominator.
  std::vector<std::uint64_t> subtree(n, 0);
  for (const Vertex v : order) {
    subtree[v] += 1;
    if (v != source) {
      bc[v] += subtree[v] - 1;
      subtree[idom[v]] += subtree[v];
    }
  }
}

}  // namespace

std::vector<std::uint64_t> anbc_strict_serial(const Graph& g) {
  std::vector<std::uint64_t> bc(g.n(), 0);
  for (Vertex s = 0; s < g.n(); ++s) accumulate_source(g, s, bc);
  return bc;
}

std::vector<std::uint64_t> anbc_strict(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.n());
  std::vector<std::uint64_t> bc(g.n(), 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(g.n(), 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t s = 0; s < n; ++s) accumulate_source(g, static_cast<Vertex>(s), local);
#pragma omp critical
    for (std::size_t v = 0; v < local.size(); ++v) bc[v] += local[v];
  }
  return bc;
}

std::uint64_t bc_strict(const Graph& g, Vertex v) { return anbc_strict(g).at(v); }

std::uint64_t bc_strict_by_removal(const Graph& g, Vertex v) {
  Exclusions without_v;
  without_v.ban_vertex(v, g.n());
  std::uint64_t count = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (s == v) continue;
    const auto full = dijkstra(g, s);
    const auto cut = dijkstra(g, s, &without_v);
    for (Vertex t = 0; t < g.n(); ++t) {
      if (t == s || t == v || full.dist[t].is_infinite()) continue;
      if (cut.dist[t] > full.dist[t]) ++count;
    }
  }
  return count;
}

std::vector<bool> pos_anbc(const Graph& g) {
  const auto bc = anbc_strict(g);
  std::vector<bool> out(bc.size());
  for (std::size_t v = 0; v < bc.size(); ++v) out[v] = bc[v] > 0;
  return out;
}

}  // namespace sprs
