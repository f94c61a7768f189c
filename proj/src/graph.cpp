#include "sprs/graph.hpp"

#include <algorithm>
#include <numeric>

#include "sprs/error.hpp"

namespace sprs {

Graph::Graph(std::size_t n, bool directed, std::vector<Edge> edges, bool gadget)
    : n_(n), directed_(directed), gadget_(gadget), edges_(std::move(edges)) {
  if (n_ >= kNoVertex) throw Error(ErrorCode::EndpointOutOfRange, "too many vertices");
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" +
                      std::to_string(n_));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "at vertex " + std::to_string(e.u));
    if (e.w == 0 && !gadget_) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error(ErrorCode::DuplicateEdge, "(" + std::to_string(edges_[i].u) + "," +
                                                std::to_string(edges_[i].v) + ")");
    }
  }

  // Counting sort into CSR arrays.
  std::vector<std::size_t> out_deg(n_, 0), in_deg(n_, 0);
  for (const auto& e : edges_) {
    ++out_deg[e.u];
    ++in_deg[e.v];
    if (!directed_) {
      ++out_deg[e.v];
      ++in_deg[e.u];
    }
  }
  out_begin_.assign(n_ + 1, 0);
  in_begin_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    out_begin_[v + 1] = out_begin_[v] + out_deg[v];
    in_begin_[v + 1] = in_begin_[v] + in_deg[v];
  }
  out_arcs_.resize(out_begin_[n_]);
  in_arcs_.resize(in_begin_[n_]);
  std::vector<std::size_t> out_pos(out_begin_.begin(), out_begin_.end() - 1);
  std::vector<std::size_t> in_pos(in_begin_.begin(), in_begin_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    out_arcs_[out_pos[e.u]++] = Arc{e.v, e.w, i};
    in_arcs_[in_pos[e.v]++] = Arc{e.u, e.w, i};
    if (!directed_) {
      out_arcs_[out_pos[e.v]++] = Arc{e.u, e.w, i};
      in_arcs_[in_pos[e.u]++] = Arc{e.v, e.w, i};
    }
  }
  const auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(out_arcs_.begin() + static_cast<std::ptrdiff_t>(out_begin_[v]),
              out_arcs_.begin() + static_cast<std::ptrdiff_t>(out_begin_[v + 1]), by_target);
    std::sort(in_arcs_.begin() + static_cast<std::ptrdiff_t>(in_begin_[v]),
              in_arcs_.begin() + static_cast<std::ptrdiff_t>(in_begin_[v + 1]), by_target);
  }
}

std::optional<std::uint32_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  const auto arcs = out(u);
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                                   [](const Arc& a, Vertex target) { return a.to < target; });
  if (it == arcs.end() || it->to != v) return std::nullopt;
  return it->edge;
}

std::optional<Weight> Graph::weight(Vertex u, Vertex v) const {
  if (auto idx = edge_index(u, v)) return edges_[*idx].w;
  return std::nullopt;
}

WeightProfile weight_profile(const Graph& g) {
  if (g.m() == 0) throw Error(ErrorCode::EmptyEdgeSet, "weight profile needs an edge");
  WeightProfile p;
  p.max_weight = 0;
  p.min_weight = std::numeric_limits<Weight>::max();
  for (const auto& e : g.edges()) {
    p.max_weight = std::max(p.max_weight, e.w);
    p.min_weight = std::min(p.min_weight, e.w);
  }
  if (p.min_weight == 0) throw Error(ErrorCode::NonPositiveWeight, "weight profile of zero weight");
  p.rho = Rational(static_cast<std::int64_t>(p.max_weight), static_cast<std::int64_t>(p.min_weight));
  return p;
}

unsigned label_width(std::size_t n) {
  unsigned width = 0;
  while ((std::size_t{1} << width) < n) ++width;
  return std::max(width, 1u);
}

unsigned label_bit(Vertex v, unsigned i, unsigned width) {
  if (i < 1 || i > width || i > 32) {
    throw Error(ErrorCode::BitIndexOutOfRange,
                "bit " + std::to_string(i) + " outside 1.." + std::to_string(width));
  }
  return (v >> (i - 1)) & 1u;
}

std::vector<std::string> role_labels(const RoleMap& roles, std::size_t n) {
  std::vector<std::string> labels(n);
  for (const auto& [name, v] : roles) {
    if (v < n) labels[v] = name;
  }
  return labels;
}

Vertex GadgetGraph::role(const std::string& name) const {
  const auto it = roles.find(name);
  if (it == roles.end()) throw Error(ErrorCode::ParamOutOfRange, "no role " + name);
  return it->second;
}

Weight GadgetGraph::param(const std::string& name) const {
  const auto it = recovery.find(name);
  if (it == recovery.end()) throw Error(ErrorCode::ParamOutOfRange, "no recovery parameter " + name);
  return it->second;
}

GadgetGraph split_all_vertices(const Graph& g) {
  if (!g.directed()) throw Error(ErrorCode::ParamOutOfRange, "split_all_vertices needs a directed graph");
  const std::size_t n = g.n();
  std::vector<Edge> edges;
  edges.reserve(g.m() + n);
  GadgetGraph out;
  for (Vertex z = 0; z < n; ++z) {
    edges.push_back({split_in(z), split_out(z, n), 0});
    out.roles["in[" + std::to_string(z) + "]"] = split_in(z);
    out.roles["out[" + std::to_string(z) + "]"] = split_out(z, n);
  }
  for (const auto& e : g.edges()) edges.push_back({split_out(e.u, n), split_in(e.v), e.w});
  out.graph = Graph(2 * n, true, std::move(edges), true);
  return out;
}

bool is_weakly_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.n();
  for (const auto& e : g.edges()) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace sprs
