#pragma once

#include <optional>
#include <vector>

#include "sprs/centrality.hpp"
#include "sprs/graph.hpp"
#include "sprs/shortest_paths.hpp"

namespace sprs {

/// A simple cycle listed without repeating the first vertex.
struct CycleWitness {
  Weight weight = 0;
  std::vector<Vertex> vertices;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct PathWitness {
  Weight weight = 0;
  std::vector<Vertex> vertices;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Rotates the minimum id to the front; an undirected cycle additionally
/// takes the direction whose second vertex is smaller.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle, bool directed);

/// Checks edges, weight sum and simplicity (and length >= 3 if undirected).
bool is_valid_cycle(const Graph& g, const CycleWitness& c);
bool is_valid_path(const Graph& g, const PathWitness& p);

/// Shortest s -> t path under the deterministic tie rule.
/// Throws NoPath if t is unreachable.
PathWitness canonical_shortest_path(const Graph& g, Vertex s, Vertex t);

std::optional<CycleWitness> mwc_direct(const Graph& g);

/// Lightest simple cycle through each vertex.
std::vector<std::optional<CycleWitness>> ansc_direct(const Graph& g);

/// Lightest-cycle weights only; infinity where no cycle passes.
std::vector<Distance> ansc_weights(const Graph& g);

/// Yen's k shortest simple paths, non-decreasing weight; ties broken by
/// vertex sequence. Empty if t is unreachable.
std::vector<PathWitness> k_sisp_yen(const Graph& g, Vertex s, Vertex t, std::size_t k);

struct ReplacementPaths {
  PathWitness path;                // canonical shortest path P
  std::vector<Distance> avoiding;  // avoiding[j]: shortest s-t path without edge (v_j, v_j+1)
};

/// One Dijkstra per edge of P. Throws NoPath if t is unreachable.
ReplacementPaths replacement_paths_naive(const Graph& g, Vertex s, Vertex t);

std::vector<Distance> eccentricities(const Graph& g);

struct RadiusResult {
  Distance value;
  Vertex center = kNoVertex;  // smallest id attaining the minimum
};

RadiusResult radius(const Graph& g);
Distance diameter(const Graph& g);

/// Every simple cycle through x, sorted by (weight, canonical sequence),
/// truncated to k. Exhaustive; n is capped at 15.
std::vector<CycleWitness> k_sisc_bruteforce(const Graph& g, Vertex x, std::size_t k);

/// First size-k dominating set in lexicographic order, if any.
std::optional<std::vector<Vertex>> k_dominating_set_bruteforce(const Graph& g, std::size_t k);

}  // namespace sprs
