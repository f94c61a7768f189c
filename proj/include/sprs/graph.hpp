#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sprs/distance.hpp"
#include "sprs/rational.hpp"

namespace sprs {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list. `edge` indexes Graph::edges().
struct Arc {
  Vertex to = 0;
  Weight w = 0;
  std::uint32_t edge = 0;
};

/// Immutable simple weighted graph on vertices 0..n-1.
///
/// Undirected edges are normalised so that u < v and the edge list is kept
/// sorted, which makes equality structural. Zero weights are only accepted
/// when the graph is flagged as a gadget graph.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, bool directed, std::vector<Edge> edges, bool gadget = false);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool is_gadget() const { return gadget_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  /// Outgoing arcs (undirected: all incident edges), sorted by target.
  std::span<const Arc> out(Vertex v) const {
    return {out_arcs_.data() + out_begin_[v], out_arcs_.data() + out_begin_[v + 1]};
  }
  /// Incoming arcs, sorted by source; `to` holds the source vertex.
  std::span<const Arc> in(Vertex v) const {
    return {in_arcs_.data() + in_begin_[v], in_arcs_.data() + in_begin_[v + 1]};
  }

  std::optional<Weight> weight(Vertex u, Vertex v) const;
  std::optional<std::uint32_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.gadget_ == b.gadget_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  bool gadget_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_begin_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_begin_{0};
  std::vector<Arc> in_arcs_;
};

struct WeightProfile {
  Weight max_weight = 0;  // M
  Weight min_weight = 0;
  Rational rho;           // M / min_weight
};

WeightProfile weight_profile(const Graph& g);

/// Number of label bits: max(1, ceil(log2 n)).
unsigned label_width(std::size_t n);

/// i-th bit (1-based, least significant first) of a vertex label.
/// Throws BitIndexOutOfRange unless 1 <= i <= width.
unsigned label_bit(Vertex v, unsigned i, unsigned width = 64);

/// Vertex roles of a constructed graph, e.g. "y_out[2]" -> 17.
using RoleMap = std::map<std::string, Vertex>;

/// Label per vertex derived from a role map; unnamed vertices get "".
std::vector<std::string> role_labels(const RoleMap& roles, std::size_t n);

/// A reduced graph together with its vertex roles and the exact integers
/// needed to translate an answer on it back to the source instance.
struct GadgetGraph {
  Graph graph;
  RoleMap roles;
  std::map<std::string, Weight> recovery;

  Vertex role(const std::string& name) const;
  Weight param(const std::string& name) const;
};

/// Splits every vertex z into z_in = z and z_out = n + z joined by a
/// zero-weight arc; each arc (u, v, w) becomes (u_out, v_in, w).
GadgetGraph split_all_vertices(const Graph& g);

inline Vertex split_in(Vertex z) { return z; }
inline Vertex split_out(Vertex z, std::size_t n) { return static_cast<Vertex>(n) + z; }

/// Weakly connected (ignores direction).
bool is_weakly_connected(const Graph& g);

}  // namespace sprs
