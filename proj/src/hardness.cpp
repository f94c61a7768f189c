#include "sprs/hardness.hpp"

#include "sprs/error.hpp"

namespace sprs {

std::string TimeBound::str() const { return "m^(" + alpha.str() + ") n^(" + beta.str() + ")"; }

TimeBound TimeBound::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "time bound must be 'alpha,beta': " + std::string(text));
  }
  const auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  return {Rational::parse(trim(text.substr(0, comma))), Rational::parse(trim(text.substr(comma + 1)))};
}

std::string_view to_string(BoundComparison c) {
  switch (c) {
    case BoundComparison::Smaller:
      return "Smaller";
    case BoundComparison::WeaklySmaller:
      return "WeaklySmaller";
    case BoundComparison::NotComparableBySufficientCondition:
      return "NotComparableBySufficientCondition";
  }
  return "?";
}

bool is_sub_mn(const TimeBound& b) {
  if (b.alpha < Rational(0) || b.beta < Rational(0)) {
    throw Error(ErrorCode::InvalidBound, "negative exponent in " + b.str());
  }
  return b.degree() < Rational(2);
}

BoundComparison compare_bounds(const TimeBound& b1, const TimeBound& b2) {
  if (b2.degree() > b1.degree()) return BoundComparison::Smaller;
  if (b2.degree() == b1.degree() && b2.alpha > b1.alpha) return BoundComparison::WeaklySmaller;
  return BoundComparison::NotComparableBySufficientCondition;
}

std::vector<std::vector<Vertex>> lexicographic_subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<Vertex>> out;
  if (r > n) return out;
  std::vector<Vertex> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    out.push_back(pick);
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) return out;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

namespace {

std::vector<std::vector<char>> closed_neighbourhoods(const Graph& g) {
  std::vector<std::vector<char>> closed(g.n(), std::vector<char>(g.n(), 0));
  for (Vertex v = 0; v < g.n(); ++v) {
    closed[v][v] = 1;
    for (const Arc& a : g.out(v)) closed[v][a.to] = 1;
  }
  return closed;
}

GadgetGraph subset_gadget(const Graph& g, std::size_t r, const std::vector<Vertex>& targets) {
  const auto closed = closed_neighbourhoods(g);
  const auto subsets = lexicographic_subsets(g.n(), r);
  const auto base = static_cast<Vertex>(subsets.size());
  GadgetGraph gadget;
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::string name = "S[";
    for (std::size_t i = 0; i < subsets[s].size(); ++i) name += (i ? "," : "") + std::to_string(subsets[s][i]);
    gadget.roles[name + "]"] = static_cast<Vertex>(s);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      bool dominated = false;
      for (const Vertex u : subsets[s]) dominated = dominated || closed[u][targets[t]];
      if (!dominated) edges.push_back({static_cast<Vertex>(s), static_cast<Vertex>(base + t), 1});
    }
  }
  for (std::size_t a = 0; a < targets.size(); ++a) {
    gadget.roles["v[" + std::to_string(targets[a]) + "]"] = static_cast<Vertex>(base + a);
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      edges.push_back({static_cast<Vertex>(base + a), static_cast<Vertex>(base + b), 1});
    }
  }
  gadget.graph = Graph(subsets.size() + targets.size(), false, std::move(edges));
  gadget.recovery["subsets"] = subsets.size();
  gadget.recovery["r"] = r;
  return gadget;
}

void require_undirected(const Graph& g) {
  if (g.directed()) throw Error(ErrorCode::ParamOutOfRange, "dominating set needs an undirected graph");
}

}  // namespace

GadgetGraph build_kds_diameter_even(const Graph& g, std::size_t k) {
  require_undirected(g);
  if (k % 2 != 0) throw Error(ErrorCode::KOdd, "k = " + std::to_string(k));
  if (k < 2 || k > g.n()) throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k));
  std::vector<Vertex> all(g.n());
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  auto gadget = subset_gadget(g, k / 2, all);
  gadget.recovery["k"] = k;
  return gadget;
}

GadgetGraph build_kds_diameter_odd(const Graph& g, std::size_t k, Vertex x) {
  require_undirected(g);
  if (k % 2 == 0) throw Error(ErrorCode::KEven, "k = " + std::to_string(k));
  if (k < 3 || k > g.n()) throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k));
  if (x >= g.n()) throw Error(ErrorCode::EndpointOutOfRange, "x out of range");
  const auto closed = closed_neighbourhoods(g);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!closed[x][v]) rest.push_back(v);
  }
  auto gadget = subset_gadget(g, (k - 1) / 2, rest);
  gadget.recovery["k"] = k;
  gadget.recovery["x"] = x;
  return gadget;
}

KdsResult k_dominating_via_diameter(const Graph& g, std::size_t k, const DiameterOracle& diameter_oracle) {
  require_undirected(g);
  KdsResult out;
  auto& report = out.report;
  report.reduction = "kds-diameter";
  report.source_n = g.n();
  report.source_m = g.m();
  if (k == 0) throw Error(ErrorCode::KOutOfRange, "k must be positive");
  if (k > g.n()) return out;
  if (k == 1) {
    const auto closed = closed_neighbourhoods(g);
    for (Vertex v = 0; v < g.n() && !out.exists; ++v) {
      bool all = true;
      for (Vertex u = 0; u < g.n(); ++u) all = all && closed[v][u];
      out.exists = all;
    }
    return out;
  }
  Stopwatch watch;
  if (k % 2 == 0) {
    const auto gadget = build_kds_diameter_even(g, k);
    report.construction_seconds = watch.lap();
    report.budget = {1, gadget.graph.n(), gadget.graph.m()};
    const Distance d = call_oracle(report, diameter_oracle, gadget.graph);
    out.diameters.push_back(d);
    out.exists = d >= Distance(3);
    return out;
  }
  const std::size_t subsets = lexicographic_subsets(g.n(), (k - 1) / 2).size();
  report.budget = {g.n(), subsets + g.n(), subsets * g.n() + g.n() * (g.n() - 1) / 2};
  const auto closed = closed_neighbourhoods(g);
  for (Vertex x = 0; x < g.n(); ++x) {
    bool covers = true;
    for (Vertex v = 0; v < g.n(); ++v) covers = covers && closed[x][v];
    if (covers) {  // nothing left to dominate
      out.exists = true;
      continue;
    }
    watch.lap();
    const auto gadget = build_kds_diameter_odd(g, k, x);
    report.construction_seconds += watch.lap();
    const Distance d = call_oracle(report, diameter_oracle, gadget.graph);
    out.diameters.push_back(d);
    if (d > Distance(2)) out.exists = true;
  }
  return out;
}

}  // namespace sprs
