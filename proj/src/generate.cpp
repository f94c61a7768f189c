#include "sprs/generate.hpp"

#include <algorithm>
#include <random>

#include "sprs/error.hpp"

namespace sprs {

std::size_t max_simple_edges(std::size_t n, bool directed) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0));
  return directed ? pairs : pairs / 2;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Slot numbering: directed slots are ordered pairs (u, v), u != v;
// undirected slots are pairs u < v.
std::pair<Vertex, Vertex> slot_pair(std::size_t slot, std::size_t n, bool directed) {
  if (directed) {
    const auto u = static_cast<Vertex>(slot / (n - 1));
    auto v = static_cast<Vertex>(slot % (n - 1));
    if (v >= u) ++v;
    return {u, v};
  }
  Vertex u = 0;
  std::size_t row = n - 1;
  while (slot >= row) {
    slot -= row;
    ++u;
    --row;
  }
  return {u, static_cast<Vertex>(u + 1 + slot)};
}

std::size_t pair_slot(Vertex u, Vertex v, std::size_t n, bool directed) {
  if (directed) return std::size_t{u} * (n - 1) + (v > u ? v - 1 : v);
  if (u > v) std::swap(u, v);
  // Offset of row u is sum_{r<u} (n-1-r).
  const std::size_t row_offset = std::size_t{u} * (n - 1) - std::size_t{u} * (u - 1) / 2;
  return row_offset + (v - u - 1);
}

}  // namespace

Graph random_graph(const GraphSpec& spec, std::uint64_t seed) {
  const std::size_t n = spec.n;
  const std::size_t slots = max_simple_edges(n, spec.directed);
  if (spec.m > slots) {
    throw Error(ErrorCode::TooManyEdges,
                std::to_string(spec.m) + " edges requested, at most " + std::to_string(slots));
  }
  if (spec.w_lo < 1 || spec.w_hi < spec.w_lo) {
    throw Error(ErrorCode::ParamOutOfRange, "weight range must satisfy 1 <= lo <= hi");
  }
  if (spec.connected && n > 1 && spec.m < n - 1) {
    throw Error(ErrorCode::ParamOutOfRange, "a connected graph needs at least n-1 edges");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> weight(spec.w_lo, spec.w_hi);
  std::vector<char> taken(slots, 0);
  std::vector<std::pair<Vertex, Vertex>> chosen;
  chosen.reserve(spec.m);

  if (spec.connected && n > 1) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      Vertex a = order[pick(rng)];
      Vertex b = order[i];
      if (spec.directed && (rng() & 1u)) std::swap(a, b);
      taken[pair_slot(a, b, n, spec.directed)] = 1;
      chosen.emplace_back(a, b);
    }
  }

  std::vector<std::size_t> free_slots;
  free_slots.reserve(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    if (!taken[s]) free_slots.push_back(s);
  }
  const std::size_t extra = spec.m - chosen.size();
  for (std::size_t i = 0; i < extra; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, free_slots.size() - 1);
    std::swap(free_slots[i], free_slots[pick(rng)]);
    chosen.push_back(slot_pair(free_slots[i], n, spec.directed));
  }

  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (const auto& [u, v] : chosen) edges.push_back({u, v, weight(rng)});
  return Graph(n, spec.directed, std::move(edges));
}

}  // namespace sprs
