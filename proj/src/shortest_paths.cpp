#include "sprs/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace sprs {

std::vector<Vertex> ShortestPathTree::path_to(Vertex target) const {
  if (target >= dist.size() || dist[target].is_infinite()) return {};
  std::vector<Vertex> path;
  for (Vertex v = target; v != kNoVertex; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

ShortestPathTree dijkstra(const Graph& g, Vertex source, const Exclusions* excluded) {
  const std::size_t n = g.n();
  ShortestPathTree tree;
  tree.dist.assign(n, Distance::infinity());
  tree.pred.assign(n, kNoVertex);
  if (excluded && excluded->vertex_banned(source)) return tree;

  std::vector<char> settled(n, 0);
  using Entry = std::pair<Weight, Vertex>;  // (distance, id): ties settle by id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  tree.dist[source] = Distance(0);
  queue.emplace(0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u] || Distance(d) != tree.dist[u]) continue;
    settled[u] = 1;
    for (const Arc& arc : g.out(u)) {
      const Vertex v = arc.to;
      if (settled[v]) continue;
      if (excluded && (excluded->edge_banned(arc.edge) || excluded->vertex_banned(v))) continue;
      const Distance candidate(d + arc.w);
      if (candidate < tree.dist[v]) {
        tree.dist[v] = candidate;
        tree.pred[v] = u;
        queue.emplace(candidate.value(), v);
      } else if (candidate == tree.dist[v] && u < tree.pred[v]) {
        tree.pred[v] = u;
      }
    }
  }
  return tree;
}

void ApspResult::set_row(Vertex x, const ShortestPathTree& tree) {
  std::copy(tree.dist.begin(), tree.dist.end(), dist_.begin() + static_cast<std::ptrdiff_t>(std::size_t{x} * n_));
  std::copy(tree.pred.begin(), tree.pred.end(), last_.begin() + static_cast<std::ptrdiff_t>(std::size_t{x} * n_));
}

std::vector<Vertex> ApspResult::path(Vertex x, Vertex y) const {
  if (dist(x, y).is_infinite()) return {};
  std::vector<Vertex> out;
  for (Vertex v = y; v != kNoVertex; v = (v == x ? kNoVertex : last(x, v))) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

ApspResult apsp_serial(const Graph& g) {
  ApspResult result(g.n());
  for (Vertex x = 0; x < g.n(); ++x) result.set_row(x, dijkstra(g, x));
  return result;
}

ApspResult apsp(const Graph& g) {
  ApspResult result(g.n());
  const auto n = static_cast<std::int64_t>(g.n());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t x = 0; x < n; ++x) {
    result.set_row(static_cast<Vertex>(x), dijkstra(g, static_cast<Vertex>(x)));
  }
  return result;
}

std::vector<Distance> apsd(const Graph& g) {
  const auto full = apsp(g);
  std::vector<Distance> out(g.n() * g.n());
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y = 0; y < g.n(); ++y) out[std::size_t{x} * g.n() + y] = full.dist(x, y);
  }
  return out;
}

}  // namespace sprs
