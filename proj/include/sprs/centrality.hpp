#pragma once

#include <cstdint>
#include <vector>

#include "sprs/graph.hpp"

namespace sprs {

// Betweenness here is the strict all-shortest-paths count: BC(v) is the
// number of ordered pairs (s, t), s != t, both != v, t reachable from s,
// such that every shortest s -> t path passes through v. On graphs with
// unique shortest paths this is the usual unique-path count.
//
// The kernels compute it per source as dominator-tree subtree sizes over
// the tight-edge subgraph {(u, v) : d(s,u) + w(u,v) = d(s,v)}. Every
// s -> t path in that subgraph is a shortest path, so v lies on all
// shortest s -> t paths iff v dominates t. Zero-weight cycles (which the
// gadget graphs contain) are handled without path counting.

/// OpenMP kernel over sources.
std::vector<std::uint64_t> anbc_strict(const Graph& g);

/// Serial reference of the same kernel.
std::vector<std::uint64_t> anbc_strict_serial(const Graph& g);

std::uint64_t bc_strict(const Graph& g, Vertex v);

/// Independent route: counts pairs whose distance grows once v is deleted.
std::uint64_t bc_strict_by_removal(const Graph& g, Vertex v);

std::vector<bool> pos_anbc(const Graph& g);

}  // namespace sprs
