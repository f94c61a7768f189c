#pragma once

#include <vector>

#include "sprs/graph.hpp"

namespace sprs {

/// Edges (by index) and vertices that a search must ignore.
struct Exclusions {
  std::vector<char> edges;
  std::vector<char> vertices;

  bool edge_banned(std::uint32_t e) const { return e < edges.size() && edges[e]; }
  bool vertex_banned(Vertex v) const { return v < vertices.size() && vertices[v]; }
  void ban_edge(std::uint32_t e, std::size_t m) {
    if (edges.size() < m) edges.resize(m, 0);
    edges[e] = 1;
  }
  void ban_vertex(Vertex v, std::size_t n) {
    if (vertices.size() < n) vertices.resize(n, 0);
    vertices[v] = 1;
  }
};

struct ShortestPathTree {
  std::vector<Distance> dist;
  std::vector<Vertex> pred;  // kNoVertex for the source and unreachable vertices

  /// Vertex sequence source..target, empty if unreachable.
  std::vector<Vertex> path_to(Vertex target) const;
};

/// Single-source shortest paths. Equal-distance vertices settle in
/// increasing id order; among tight predecessors settled before a vertex,
/// the smallest id is recorded. This fixes one canonical path per target.
ShortestPathTree dijkstra(const Graph& g, Vertex source, const Exclusions* excluded = nullptr);

/// All-pairs distances plus the Last matrix: last(x, y) is the predecessor
/// of y on the recorded shortest x -> y path.
class ApspResult {
 public:
  ApspResult() = default;
  explicit ApspResult(std::size_t n) : n_(n), dist_(n * n), last_(n * n, kNoVertex) {}

  std::size_t n() const { return n_; }
  Distance dist(Vertex x, Vertex y) const { return dist_[std::size_t{x} * n_ + y]; }
  Vertex last(Vertex x, Vertex y) const { return last_[std::size_t{x} * n_ + y]; }

  void set_row(Vertex x, const ShortestPathTree& tree);

  std::vector<Vertex> path(Vertex x, Vertex y) const;

  friend bool operator==(const ApspResult&, const ApspResult&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  std::vector<Vertex> last_;
};

/// Reference kernel: one Dijkstra per source, in order.
ApspResult apsp_serial(const Graph& g);

/// OpenMP kernel: sources distributed across threads; identical output.
ApspResult apsp(const Graph& g);

/// Distances only, row-major n x n.
std::vector<Distance> apsd(const Graph& g);

}  // namespace sprs
