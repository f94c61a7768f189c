#pragma once

#include <cstdint>

#include "sprs/graph.hpp"

namespace sprs {

struct GraphSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  bool directed = false;
  Weight w_lo = 1;
  Weight w_hi = 1;
  bool connected = false;  // weakly connected
};

/// Deterministic random simple graph for a fixed seed. With `connected`, a
/// random spanning tree is laid down first and the rest of the edge slots
/// are sampled uniformly among the remaining ones.
Graph random_graph(const GraphSpec& spec, std::uint64_t seed);

inline Graph random_graph(std::size_t n, std::size_t m, bool directed, Weight lo, Weight hi,
                          std::uint64_t seed, bool connected = false) {
  return random_graph(GraphSpec{n, m, directed, lo, hi, connected}, seed);
}

std::size_t max_simple_edges(std::size_t n, bool directed);

/// splitmix64 finaliser; used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sprs
