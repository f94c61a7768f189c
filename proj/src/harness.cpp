#include "sprs/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <sstream>

#include "sprs/directed.hpp"
#include "sprs/error.hpp"
#include "sprs/generate.hpp"
#include "sprs/hardness.hpp"
#include "sprs/io.hpp"
#include "sprs/solvers.hpp"
#include "sprs/undirected.hpp"

namespace sprs {

using nlohmann::json;

namespace {

json distances_json(const std::vector<Distance>& ds) {
  json out = json::array();
  for (const Distance d : ds) out.push_back(sprs::to_json(d));
  return out;
}

json cycle_weights_json(const std::vector<CycleWitness>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.weight);
  return out;
}

Vertex param_vertex(const json& p, const char* key) { return p.at(key).get<Vertex>(); }

// s uniformly at random, then a random target reachable from it.
std::optional<json> choose_st(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> sources(g.n());
  std::iota(sources.begin(), sources.end(), Vertex{0});
  std::shuffle(sources.begin(), sources.end(), rng);
  for (const Vertex s : sources) {
    const auto tree = dijkstra(g, s);
    std::vector<Vertex> targets;
    for (Vertex t = 0; t < g.n(); ++t) {
      if (t != s && tree.dist[t].is_finite()) targets.push_back(t);
    }
    if (targets.empty()) continue;
    const Vertex t = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    return json{{"source", s}, {"target", t}};
  }
  return std::nullopt;
}

std::optional<json> no_params(const Graph&, std::mt19937_64&) { return json::object(); }

json single_graph(const Graph& g) { return json::array({sprs::to_json(g)}); }

TrialOutcome finish(TrialOutcome t, const json& reduced, const json& direct, ReductionReport report) {
  t.reduced_answer = reduced;
  t.direct_answer = direct;
  t.answers_match = reduced == direct;
  t.budget_ok = report.within_budget();
  t.report = std::move(report);
  return t;
}

Distance min_of(const std::vector<Distance>& ds) {
  Distance best;
  for (const Distance d : ds) best = std::min(best, d);
  return best;
}

CampaignConfig envelope(std::size_t trials, std::size_t n_min, std::size_t n_max, std::size_t m_min,
                        std::size_t m_max, Weight w_min, Weight w_max) {
  CampaignConfig c;
  c.trials = trials;
  c.n_min = n_min;
  c.n_max = n_max;
  c.m_min = m_min;
  c.m_max = m_max;
  c.w_min = w_min;
  c.w_max = w_max;
  return c;
}

std::vector<ReductionEntry> build_registry() {
  std::vector<ReductionEntry> r;

  {
    ReductionEntry e;
    e.name = "mwc-to-apsp";
    e.description = "undirected minimum weight cycle via 2*width*K + 1 APSP calls";
    e.defaults = envelope(300, 5, 40, 5, 120, 1, 64);
    e.choose_params = no_params;
    e.run = [](const Graph& g, const json&, bool fault) {
      auto got = mwc_via_apsp(g, oracle::apsp(), {fault});
      const auto direct = mwc_direct(g);
      TrialOutcome t = finish({}, to_json(got.weight), to_json(direct ? Distance(direct->weight) : Distance()),
                              got.report);
      t.budget_ok = t.budget_ok && t.report.oracle_calls() == t.report.budget.max_calls;
      return t;
    };
    e.reduced_graphs = [](const Graph& g, const json&) {
      json out = json::array();
      if (g.m() == 0) return out;
      const unsigned K = bucket_count(weight_profile(g));
      for (unsigned i = 1; i <= label_width(g.n()); ++i) {
        for (unsigned j = 0; j <= 1; ++j) {
          for (unsigned k = 1; k <= K; ++k) {
            out.push_back(sprs::to_json(build_gijk(g, i, j, k).graph, {{"i", i}, {"j", j}, {"k", k}}));
          }
        }
      }
      return out;
    };
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "ansc-to-apsp";
    e.description = "unweighted undirected shortest cycle through every vertex via 2*width + 1 APSP calls";
    e.unit_weights = true;
    e.defaults = envelope(200, 5, 60, 5, 120, 1, 1);
    e.choose_params = no_params;
    e.run = [](const Graph& g, const json&, bool) {
      auto got = ansc_via_apsp_unweighted(g);
      TrialOutcome t = finish({}, distances_json(got.weights), distances_json(ansc_weights(g)), got.report);
      t.budget_ok = t.budget_ok && t.report.oracle_calls() == t.report.budget.max_calls;
      return t;
    };
    e.reduced_graphs = [](const Graph& g, const json&) {
      json out = json::array();
      for (unsigned i = 1; i <= label_width(g.n()); ++i) {
        for (unsigned j = 0; j <= 1; ++j) {
          out.push_back(sprs::to_json(build_gijk(g, i, j, std::nullopt).graph, {{"i", i}, {"j", j}}));
        }
      }
      return out;
    };
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "ksisc-to-ksisp";
    e.description = "k shortest simple cycles through x via width k-SiSP calls";
    e.defaults = envelope(100, 4, 12, 4, 24, 1, 8);
    e.choose_params = [](const Graph& g, std::mt19937_64& rng) -> std::optional<json> {
      const auto x = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(g.n() - 1))(rng);
      const auto k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
      return json{{"x", x}, {"k", k}};
    };
    e.run = [](const Graph& g, const json& p, bool) {
      const Vertex x = param_vertex(p, "x");
      const std::size_t k = p.at("k").get<std::size_t>();
      auto got = k_sisc_via_k_sisp(g, x, k);
      TrialOutcome t = finish({}, cycle_weights_json(got.cycles), cycle_weights_json(k_sisc_bruteforce(g, x, k)),
                              got.report);
      for (const auto& c : got.cycles) {
        if (!is_valid_cycle(g, c) || std::find(c.vertices.begin(), c.vertices.end(), x) == c.vertices.end()) {
          t.note = "returned an invalid cycle";
        }
      }
      return t;
    };
    e.reduced_graphs = [](const Graph& g, const json& p) {
      json out = json::array();
      for (unsigned i = 1; i <= label_width(g.n()); ++i) {
        out.push_back(sprs::to_json(build_ksisc_split(g, param_vertex(p, "x"), i), {{"i", i}}));
      }
      return out;
    };
    r.push_back(std::move(e));
  }

  const CampaignConfig directed_env = envelope(300, 3, 30, 3, 90, 1, 32);
  const auto st_gadget = [](GadgetGraph (*build)(const Graph&, Vertex, Vertex)) {
    return [build](const Graph& g, const json& p) {
      return json::array({sprs::to_json(build(g, param_vertex(p, "source"), param_vertex(p, "target")))});
    };
  };
  {
    ReductionEntry e;
    e.name = "mwc-to-2sisp";
    e.description = "directed minimum weight cycle via one 2-SiSP call";
    e.directed = true;
    e.defaults = directed_env;
    e.choose_params = no_params;
    e.run = [](const Graph& g, const json&, bool fault) {
      MwcVia2SispOptions opt;
      opt.offset_fault = fault;
      auto got = mwc_via_2sisp(g, oracle::two_sisp(), opt);
      const auto direct = mwc_direct(g);
      return finish({}, to_json(got.weight), to_json(direct ? Distance(direct->weight) : Distance()), got.report);
    };
    e.reduced_graphs = [](const Graph& g, const json&) {
      return g.m() == 0 ? json::array() : json::array({sprs::to_json(build_mwc_2sisp_gadget(g))});
    };
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "2sisp-to-radius";
    e.description = "second simple shortest path via one Radius call";
    e.directed = true;
    e.defaults = directed_env;
    e.choose_params = choose_st;
    e.run = [](const Graph& g, const json& p, bool) {
      const Vertex s = param_vertex(p, "source");
      const Vertex t = param_vertex(p, "target");
      auto got = two_sisp_via_radius(g, s, t);
      const Distance direct = min_of(replacement_paths_naive(g, s, t).avoiding);
      TrialOutcome out = finish({}, to_json(got.weight), to_json(direct), got.report);
      if (two_sisp_yen(g, s, t) != direct) out.note = "Yen disagrees with the minimum replacement path";
      return out;
    };
    e.reduced_graphs = st_gadget(&build_2sisp_radius_gadget);
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "rp-to-ecc";
    e.description = "replacement paths via one Eccentricities call";
    e.directed = true;
    e.defaults = directed_env;
    e.choose_params = choose_st;
    e.run = [](const Graph& g, const json& p, bool) {
      const Vertex s = param_vertex(p, "source");
      const Vertex t = param_vertex(p, "target");
      auto got = replacement_paths_via_eccentricities(g, s, t);
      return finish({}, distances_json(got.avoiding), distances_json(replacement_paths_naive(g, s, t).avoiding),
                    got.report);
    };
    e.reduced_graphs = st_gadget(&build_2sisp_radius_gadget);
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "rp-to-ansc";
    e.description = "replacement paths via one ANSC call";
    e.directed = true;
    e.defaults = directed_env;
    e.choose_params = choose_st;
    e.run = [](const Graph& g, const json& p, bool) {
      const Vertex s = param_vertex(p, "source");
      const Vertex t = param_vertex(p, "target");
      auto got = replacement_paths_via_ansc(g, s, t);
      return finish({}, distances_json(got.avoiding), distances_json(replacement_paths_naive(g, s, t).avoiding),
                    got.report);
    };
    e.reduced_graphs = st_gadget(&build_repl_ansc_gadget);
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "ansc-to-rp";
    e.description = "directed shortest cycle through every vertex via one replacement-paths call";
    e.directed = true;
    e.defaults = directed_env;
    e.choose_params = no_params;
    e.run = [](const Graph& g, const json&, bool) {
      auto got = ansc_via_replacement_paths(g);
      return finish({}, distances_json(got.weights), distances_json(ansc_weights(g)), got.report);
    };
    e.reduced_graphs = [](const Graph& g, const json&) {
      return g.m() == 0 ? json::array() : json::array({sprs::to_json(build_mwc_2sisp_gadget(g))});
    };
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "2sisp-to-rp";
    e.description = "second simple shortest path as the minimum replacement path";
    e.directed = true;
    e.defaults = directed_env;
    e.choose_params = choose_st;
    e.run = [](const Graph& g, const json& p, bool) {
      const Vertex s = param_vertex(p, "source");
      const Vertex t = param_vertex(p, "target");
      auto got = two_sisp_via_replacement_paths(g, s, t);
      return finish({}, to_json(got.weight), to_json(two_sisp_yen(g, s, t)), got.report);
    };
    e.reduced_graphs = [](const Graph& g, const json&) { return single_graph(g); };
    r.push_back(std::move(e));
  }

  const CampaignConfig search_env = envelope(200, 3, 20, 3, 50, 1, 16);
  {
    ReductionEntry e;
    e.name = "2sisp-to-bc";
    e.description = "second simple shortest path by binary search over BC(A)";
    e.directed = true;
    e.defaults = search_env;
    e.choose_params = choose_st;
    e.run = [](const Graph& g, const json& p, bool) {
      const Vertex s = param_vertex(p, "source");
      const Vertex t = param_vertex(p, "target");
      auto got = two_sisp_via_bc(g, s, t);
      return finish({}, to_json(got.weight), to_json(min_of(replacement_paths_naive(g, s, t).avoiding)),
                    got.report);
    };
    e.reduced_graphs = [](const Graph& g, const json& p) {
      return json::array(
          {sprs::to_json(build_2sisp_bc_gadget(g, param_vertex(p, "source"), param_vertex(p, "target"), 0))});
    };
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "ansc-to-posanbc";
    e.description = "directed shortest cycle through every vertex by simultaneous binary search over Pos ANBC";
    e.directed = true;
    e.defaults = search_env;
    e.choose_params = no_params;
    e.run = [](const Graph& g, const json&, bool) {
      auto got = ansc_via_pos_anbc(g);
      return finish({}, distances_json(got.weights), distances_json(ansc_weights(g)), got.report);
    };
    e.reduced_graphs = [](const Graph& g, const json&) {
      return json::array({sprs::to_json(build_pos_anbc_gadget(g, std::vector<Weight>(g.n(), 0)))});
    };
    r.push_back(std::move(e));
  }
  {
    ReductionEntry e;
    e.name = "kds-diameter";
    e.description = "k-dominating set via Diameter calls on subset gadgets";
    e.unit_weights = true;
    e.defaults = envelope(100, 3, 10, 2, 20, 1, 1);
    e.choose_params = [](const Graph& g, std::mt19937_64& rng) -> std::optional<json> {
      const auto k = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(4, g.n()))(rng);
      return json{{"k", k}};
    };
    e.run = [](const Graph& g, const json& p, bool) {
      const std::size_t k = p.at("k").get<std::size_t>();
      auto got = k_dominating_via_diameter(g, k);
      TrialOutcome t =
          finish({}, json(got.exists), json(k_dominating_set_bruteforce(g, k).has_value()), got.report);
      // Even gadget: diameter 2 or 3 unless some half-size subset dominates alone.
      if (k % 2 == 0 && !k_dominating_set_bruteforce(g, k / 2) && !got.diameters.empty()) {
        const Distance d = got.diameters.front();
        if (d != Distance(2) && d != Distance(3)) t.note = "even gadget diameter " + d.str();
      }
      return t;
    };
    e.reduced_graphs = [](const Graph& g, const json& p) {
      const std::size_t k = p.at("k").get<std::size_t>();
      json out = json::array();
      if (k % 2 == 0) {
        out.push_back(sprs::to_json(build_kds_diameter_even(g, k)));
      } else if (k >= 3) {
        for (Vertex x = 0; x < g.n(); ++x) out.push_back(sprs::to_json(build_kds_diameter_odd(g, k, x)));
      }
      return out;
    };
    r.push_back(std::move(e));
  }

  for (auto& e : r) e.defaults.reduction = e.name;
  return r;
}

std::string artifact_root(const CampaignConfig& cfg) { return cfg.artifact_dir; }

std::pair<std::size_t, std::size_t> range_of(const json& doc, const char* key, std::size_t lo, std::size_t hi) {
  if (!doc.contains(key)) return {lo, hi};
  const auto& v = doc.at(key);
  if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::ParseError, std::string(key) + ": expected [lo, hi]");
  return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
}

}  // namespace

const std::vector<ReductionEntry>& reduction_registry() {
  static const std::vector<ReductionEntry> registry = build_registry();
  return registry;
}

const ReductionEntry& find_reduction(const std::string& name) {
  const std::string canonical = name == "ansc-unweighted" ? "ansc-to-apsp" : name;
  for (const auto& e : reduction_registry()) {
    if (e.name == canonical) return e;
  }
  throw Error(ErrorCode::UnknownReduction, name);
}

CampaignConfig CampaignConfig::defaults(const std::string& reduction) {
  CampaignConfig c = find_reduction(reduction).defaults;
  if (const char* env = std::getenv(kArtifactDirEnv); env && *env) c.artifact_dir = env;
  return c;
}

CampaignConfig CampaignConfig::from_json(const json& doc) {
  try {
    CampaignConfig c = defaults(doc.at("reduction").get<std::string>());
    c.trials = doc.value("trials", c.trials);
    c.seed = doc.value("seed", c.seed);
    std::tie(c.n_min, c.n_max) = range_of(doc, "n", c.n_min, c.n_max);
    std::tie(c.m_min, c.m_max) = range_of(doc, "m", c.m_min, c.m_max);
    const auto w = range_of(doc, "w", c.w_min, c.w_max);
    c.w_min = w.first;
    c.w_max = w.second;
    c.artifact_dir = doc.value("artifact_dir", c.artifact_dir);
    c.inject_fault = doc.value("inject_fault", c.inject_fault);
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("campaign config: ") + e.what());
  }
}

json CampaignConfig::to_json() const {
  return {{"reduction", reduction},     {"trials", trials},
          {"seed", seed},               {"n", {n_min, n_max}},
          {"m", {m_min, m_max}},        {"w", {w_min, w_max}},
          {"artifact_dir", artifact_dir}, {"inject_fault", inject_fault}};
}

void CampaignConfig::validate() const {
  const auto& entry = find_reduction(reduction);
  if (n_min < 2 || n_min > n_max) throw Error(ErrorCode::ParamOutOfRange, "n range must satisfy 2 <= lo <= hi");
  if (m_min > m_max) throw Error(ErrorCode::ParamOutOfRange, "m range is empty");
  if (w_min < 1 || w_min > w_max) throw Error(ErrorCode::ParamOutOfRange, "w range must satisfy 1 <= lo <= hi");
  if (entry.unit_weights && (w_min != 1 || w_max != 1)) {
    throw Error(ErrorCode::ParamOutOfRange, reduction + " needs unit weights");
  }
}

TrialInstance draw_instance(const ReductionEntry& entry, const CampaignConfig& cfg, std::size_t index) {
  TrialInstance inst;
  inst.seed = mix_seed(cfg.seed, index);
  std::mt19937_64 rng(inst.seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (attempt > 1000) throw Error(ErrorCode::ParamOutOfRange, "no admissible instance in the envelope");
    const auto n = std::uniform_int_distribution<std::size_t>(cfg.n_min, cfg.n_max)(rng);
    const std::size_t cap = max_simple_edges(n, entry.directed);
    const std::size_t floor_m = entry.connected ? n - 1 : 0;
    const std::size_t hi = std::min(cfg.m_max, cap);
    const std::size_t lo = std::min(std::max(cfg.m_min, floor_m), hi);
    if (hi < floor_m) continue;
    const auto m = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    GraphSpec spec{n, m, entry.directed, cfg.w_min, cfg.w_max, entry.connected};
    inst.graph = random_graph(spec, mix_seed(inst.seed, attempt + 1));
    if (auto p = entry.choose_params(inst.graph, rng)) {
      inst.params = std::move(*p);
      return inst;
    }
  }
}

TrialOutcome run_trial(const std::string& reduction, const Graph& g, const json& params, bool fault) {
  return find_reduction(reduction).run(g, params, fault);
}

CampaignSummary verify_reduction(const CampaignConfig& cfg) {
  cfg.validate();
  const ReductionEntry& entry = find_reduction(cfg.reduction);
  CampaignSummary summary;
  summary.config = cfg;
  summary.config.reduction = entry.name;
  summary.trials.resize(cfg.trials);
  const std::string root = artifact_root(cfg);
  const auto count = static_cast<std::int64_t>(cfg.trials);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    TrialRecord& rec = summary.trials[static_cast<std::size_t>(i)];
    rec.index = static_cast<std::size_t>(i);
    TrialInstance inst;
    TrialOutcome out;
    try {
      inst = draw_instance(entry, cfg, rec.index);
      rec.seed = inst.seed;
      out = entry.run(inst.graph, inst.params, cfg.inject_fault);
      rec.passed = out.passed();
      rec.budget_ok = out.budget_ok;
      rec.oracle_calls = out.report.oracle_calls();
      rec.max_call_vertices = out.report.max_call_vertices();
      rec.max_call_edges = out.report.max_call_edges();
      if (!out.note.empty()) rec.error = out.note;
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.error = e.what();
    }
    if (rec.passed) continue;
    try {
      json artifact{{"reduction", entry.name},
                    {"trial", rec.index},
                    {"seed", rec.seed},
                    {"params", inst.params},
                    {"instance", to_json(inst.graph)},
                    {"reduced_answer", out.reduced_answer},
                    {"direct_answer", out.direct_answer},
                    {"report", out.report.to_json()},
                    {"error", rec.error}};
      try {
        artifact["reduced_graphs"] = entry.reduced_graphs(inst.graph, inst.params);
      } catch (const std::exception& e) {
        artifact["reduced_graphs_error"] = e.what();
      }
      const auto path = std::filesystem::path(root) / (entry.name + "-trial" + std::to_string(rec.index) + ".json");
      write_text(path, artifact.dump(2) + "\n");
      rec.artifact = path.string();
    } catch (const std::exception& e) {
      rec.error += (rec.error.empty() ? "" : "; ") + std::string("artifact not written: ") + e.what();
    }
  }
  return summary;
}

std::size_t CampaignSummary::passed() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.passed; }));
}

std::size_t CampaignSummary::budget_violations() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const auto& t) { return !t.budget_ok; }));
}

json CampaignSummary::to_json() const {
  json failures = json::array();
  std::size_t max_calls = 0, total_calls = 0, max_v = 0, max_e = 0;
  for (const auto& t : trials) {
    max_calls = std::max(max_calls, t.oracle_calls);
    total_calls += t.oracle_calls;
    max_v = std::max(max_v, t.max_call_vertices);
    max_e = std::max(max_e, t.max_call_edges);
    if (!t.passed) {
      failures.push_back({{"trial", t.index}, {"seed", t.seed}, {"artifact", t.artifact}, {"error", t.error}});
    }
  }
  return {{"config", config.to_json()},
          {"trials", trials.size()},
          {"passed", passed()},
          {"failed", failed()},
          {"budget_violations", budget_violations()},
          {"oracle_calls", {{"max", max_calls}, {"total", total_calls}}},
          {"max_call_size", {{"vertices", max_v}, {"edges", max_e}}},
          {"failures", failures}};
}

std::string CampaignSummary::table() const {
  std::ostringstream os;
  os << "reduction          trials  passed  failed  budget-violations\n";
  os << config.reduction << std::string(config.reduction.size() < 19 ? 19 - config.reduction.size() : 1, ' ');
  os << trials.size() << "\t" << passed() << "\t" << failed() << "\t" << budget_violations() << "\n";
  for (const auto& t : trials) {
    if (t.passed) continue;
    os << "  trial " << t.index << " (seed " << t.seed << ")";
    if (!t.error.empty()) os << ": " << t.error;
    if (!t.artifact.empty()) os << " -> " << t.artifact;
    os << "\n";
  }
  return os.str();
}

ReductionReport sparsity_report(const std::string& reduction, const Graph& g, json params) {
  const ReductionEntry& entry = find_reduction(reduction);
  std::mt19937_64 rng(0);
  if (auto drawn = entry.choose_params(g, rng)) {
    for (auto& [key, value] : drawn->items()) {
      if (!params.contains(key)) params[key] = value;
    }
  } else if (params.empty()) {
    throw Error(ErrorCode::NoPath, "no admissible parameters for " + reduction + " on this graph");
  }
  return entry.run(g, params, false).report;
}

}  // namespace sprs
