#include "sprs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "sprs/centrality.hpp"
#include "sprs/directed.hpp"
#include "sprs/error.hpp"
#include "sprs/generate.hpp"
#include "sprs/hardness.hpp"
#include "sprs/harness.hpp"
#include "sprs/io.hpp"
#include "sprs/solvers.hpp"
#include "sprs/undirected.hpp"

namespace sprs {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

json distances(const std::vector<Distance>& ds) {
  json out = json::array();
  for (const Distance d : ds) out.push_back(to_json(d));
  return out;
}

json path_json(const PathWitness& p) { return {{"weight", p.weight}, {"vertices", p.vertices}}; }
json cycle_json(const CycleWitness& c) { return {{"weight", c.weight}, {"vertices", c.vertices}}; }

// Options shared by solve / reduce / report / verify.
struct InstanceParams {
  std::optional<Vertex> source;
  std::optional<Vertex> target;
  std::optional<Vertex> x;
  std::optional<std::size_t> k;

  void attach(CLI::App* cmd) {
    cmd->add_option("--source,-s", source, "source vertex s");
    cmd->add_option("--target,-t", target, "target vertex t");
    cmd->add_option("--x", x, "designated vertex x");
    cmd->add_option("--k", k, "k");
  }
  json to_json() const {
    json p = json::object();
    if (source) p["source"] = *source;
    if (target) p["target"] = *target;
    if (x) p["x"] = *x;
    if (k) p["k"] = *k;
    return p;
  }
  Vertex need_source() const { return need(source, "--source"); }
  Vertex need_target() const { return need(target, "--target"); }
  Vertex need_x() const { return need(x, "--x"); }
  std::size_t need_k() const {
    if (!k) throw Error(ErrorCode::ParamOutOfRange, "--k is required");
    return *k;
  }

 private:
  static Vertex need(const std::optional<Vertex>& v, const char* flag) {
    if (!v) throw Error(ErrorCode::ParamOutOfRange, std::string(flag) + " is required");
    return *v;
  }
};

json solve(const std::string& problem, const Graph& g, const InstanceParams& p) {
  if (problem == "apsp" || problem == "apsd") {
    const auto all = apsp(g);
    json dist = json::array();
    json last = json::array();
    for (Vertex x = 0; x < g.n(); ++x) {
      json drow = json::array();
      json lrow = json::array();
      for (Vertex y = 0; y < g.n(); ++y) {
        drow.push_back(to_json(all.dist(x, y)));
        lrow.push_back(all.last(x, y) == kNoVertex ? json(nullptr) : json(all.last(x, y)));
      }
      dist.push_back(drow);
      last.push_back(lrow);
    }
    json out{{"dist", dist}};
    if (problem == "apsp") out["last"] = last;
    return out;
  }
  if (problem == "mwc") {
    const auto c = mwc_direct(g);
    return c ? cycle_json(*c) : json{{"weight", "inf"}};
  }
  if (problem == "ansc") {
    json cycles = json::array();
    for (const auto& c : ansc_direct(g)) cycles.push_back(c ? cycle_json(*c) : json(nullptr));
    return {{"weights", distances(ansc_weights(g))}, {"cycles", cycles}};
  }
  if (problem == "ksisp") {
    json paths = json::array();
    for (const auto& path : k_sisp_yen(g, p.need_source(), p.need_target(), p.need_k())) {
      paths.push_back(path_json(path));
    }
    return {{"paths", paths}};
  }
  if (problem == "2sisp") return {{"weight", to_json(two_sisp_yen(g, p.need_source(), p.need_target()))}};
  if (problem == "rp") {
    const auto rp = replacement_paths_naive(g, p.need_source(), p.need_target());
    return {{"path", path_json(rp.path)}, {"avoiding", distances(rp.avoiding)}};
  }
  if (problem == "ecc") return {{"eccentricities", distances(eccentricities(g))}};
  if (problem == "radius") {
    const auto r = radius(g);
    return {{"value", to_json(r.value)}, {"center", r.center == kNoVertex ? json(nullptr) : json(r.center)}};
  }
  if (problem == "diameter") return {{"value", to_json(diameter(g))}};
  if (problem == "bc") return {{"bc", anbc_strict(g)}};
  if (problem == "posanbc") return {{"positive", pos_anbc(g)}};
  if (problem == "ksisc") {
    json cycles = json::array();
    for (const auto& c : k_sisc_bruteforce(g, p.need_x(), p.need_k())) cycles.push_back(cycle_json(c));
    return {{"cycles", cycles}};
  }
  if (problem == "kds") {
    const auto set = k_dominating_set_bruteforce(g, p.need_k());
    return {{"exists", set.has_value()}, {"set", set ? json(*set) : json(nullptr)}};
  }
  throw Error(ErrorCode::ParamOutOfRange, "unknown problem '" + problem + "'");
}

void emit_reduced(const ReductionEntry& entry, const Graph& g, const json& params, const std::string& dir,
                  bool family_names, const json& report) {
  const json graphs = entry.reduced_graphs(g, params);
  for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
    std::string name = "gadget_" + std::to_string(idx) + ".json";
    if (family_names && graphs[idx].contains("meta") && graphs[idx]["meta"].contains("k")) {
      const auto& meta = graphs[idx]["meta"];
      name = "g_i" + meta["i"].dump() + "_j" + meta["j"].dump() + "_k" + meta["k"].dump() + ".json";
    }
    write_text(std::filesystem::path(dir) / name, graphs[idx].dump(2) + "\n");
  }
  write_text(std::filesystem::path(dir) / "report.json", report.dump(2) + "\n");
}

// Fills in missing parameters the same way a campaign would.
json complete_params(const ReductionEntry& entry, const Graph& g, json params) {
  std::mt19937_64 rng(0);
  if (auto drawn = entry.choose_params(g, rng)) {
    for (auto& [key, value] : drawn->items()) {
      if (!params.contains(key)) params[key] = value;
    }
  }
  return params;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparsity-preserving graph reductions with brute-force verification", "sprs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random graph");
  GraphSpec spec{10, 20, false, 1, 16, false};
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", spec.n, "vertices")->required();
  gen->add_option("--m", spec.m, "edges")->required();
  gen->add_flag("--directed", spec.directed);
  gen->add_flag("--connected", spec.connected, "weakly connected");
  gen->add_option("--w-min", spec.w_lo, "minimum weight");
  gen->add_option("--w-max", spec.w_hi, "maximum weight");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run a direct solver");
  std::string problem, graph_path;
  solve_cmd->add_option("problem", problem,
                        "apsp | apsd | mwc | ansc | ksisp | 2sisp | rp | ecc | radius | diameter | bc | "
                        "posanbc | ksisc | kds")
      ->required();
  solve_cmd->add_option("graph", graph_path, "graph JSON")->required();
  InstanceParams solve_params;
  solve_params.attach(solve_cmd);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "run a reduction against its direct solver");
  std::string reduction_name, emit_dir, emit_family_dir;
  bool with_timings = false;
  reduce_cmd->add_option("reduction", reduction_name, "registered reduction name")->required();
  reduce_cmd->add_option("graph", graph_path, "graph JSON")->required();
  reduce_cmd->add_option("--emit", emit_dir, "write reduced graph(s) and report.json here");
  reduce_cmd->add_option("--emit-family", emit_family_dir, "like --emit, naming G_ijk files g_i<i>_j<j>_k<k>.json");
  reduce_cmd->add_flag("--timings", with_timings, "include wall-clock timings in the report");
  InstanceParams reduce_params;
  reduce_params.attach(reduce_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "randomised campaign, or replay of one instance");
  std::string verify_reduction_name, config_path, summary_path, artifacts, instance_path;
  std::optional<std::size_t> trials, n_min, n_max, m_min, m_max;
  std::optional<Weight> w_min, w_max;
  std::optional<std::uint64_t> seed;
  bool inject_fault = false;
  verify_cmd->add_option("--reduction,-r", verify_reduction_name, "registered reduction name");
  verify_cmd->add_option("--config", config_path, "campaign config JSON");
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--n-min", n_min);
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--m-min", m_min);
  verify_cmd->add_option("--m-max", m_max);
  verify_cmd->add_option("--w-min", w_min);
  verify_cmd->add_option("--w-max", w_max);
  verify_cmd->add_option("--artifacts", artifacts, "failure artifact directory");
  verify_cmd->add_option("--summary", summary_path, "write the JSON summary here");
  verify_cmd->add_option("--instance", instance_path, "replay a graph JSON or a failure artifact");
  verify_cmd->add_flag("--inject-fault", inject_fault, "run the deliberately broken variant");
  InstanceParams verify_params;
  verify_params.attach(verify_cmd);

  // report
  auto* report_cmd = app.add_subcommand("report", "sparsity report of one reduction on one graph");
  report_cmd->add_option("reduction", reduction_name)->required();
  report_cmd->add_option("graph", graph_path)->required();
  InstanceParams report_params;
  report_params.attach(report_cmd);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "compare m^a n^b time bounds");
  bounds_cmd->require_subcommand(1);
  auto* compare_cmd = bounds_cmd->add_subcommand("compare", "is b1 smaller than b2 on sparse graphs?");
  std::string b1_text, b2_text;
  compare_cmd->add_option("--b1", b1_text, "alpha,beta")->required();
  compare_cmd->add_option("--b2", b2_text, "alpha,beta")->required();
  auto* submn_cmd = bounds_cmd->add_subcommand("sub-mn", "is the bound sub-mn?");
  std::string b_text;
  submn_cmd->add_option("--b", b_text, "alpha,beta")->required();

  // hardness
  auto* hardness_cmd = app.add_subcommand("hardness", "conditional-hardness gadgets");
  hardness_cmd->require_subcommand(1);
  auto* kds_cmd = hardness_cmd->add_subcommand("kds-diameter", "k-dominating set via Diameter");
  std::size_t kds_k = 2;
  kds_cmd->add_option("graph", graph_path)->required();
  kds_cmd->add_option("--k", kds_k)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      const Graph g = random_graph(spec, gen_seed);
      const std::string text = serialize(g, {{"seed", gen_seed}});
      if (gen_out.empty()) {
        out << text << "\n";
      } else {
        write_text(gen_out, text + "\n");
      }
      return kOk;
    }
    if (solve_cmd->parsed()) {
      out << solve(problem, load_graph(graph_path), solve_params).dump(2) << "\n";
      return kOk;
    }
    if (reduce_cmd->parsed()) {
      const auto& entry = find_reduction(reduction_name);
      const Graph g = load_graph(graph_path);
      const json params = complete_params(entry, g, reduce_params.to_json());
      const TrialOutcome t = entry.run(g, params, false);
      const json report = t.report.to_json(with_timings);
      json result{{"reduction", entry.name},     {"params", params},
                  {"answer", t.reduced_answer},  {"direct", t.direct_answer},
                  {"match", t.answers_match},    {"report", report}};
      if (!t.note.empty()) result["note"] = t.note;
      if (!emit_dir.empty()) emit_reduced(entry, g, params, emit_dir, false, report);
      if (!emit_family_dir.empty()) emit_reduced(entry, g, params, emit_family_dir, true, report);
      out << result.dump(2) << "\n";
      return t.passed() ? kOk : kVerifyFailed;
    }
    if (verify_cmd->parsed()) {
      if (!instance_path.empty()) {
        std::ifstream in(instance_path);
        if (!in) throw Error(ErrorCode::Io, "cannot open " + instance_path);
        json doc;
        try {
          doc = json::parse(in);
        } catch (const json::parse_error& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        json params = verify_params.to_json();
        Graph g;
        if (doc.contains("instance")) {  // failure artifact
          g = graph_from_json(doc.at("instance"));
          if (verify_reduction_name.empty()) verify_reduction_name = doc.at("reduction").get<std::string>();
          for (auto& [key, value] : doc.value("params", json::object()).items()) {
            if (!params.contains(key)) params[key] = value;
          }
        } else {
          g = graph_from_json(doc);
        }
        if (verify_reduction_name.empty()) throw Error(ErrorCode::UnknownReduction, "--reduction is required");
        const auto& entry = find_reduction(verify_reduction_name);
        params = complete_params(entry, g, params);
        const TrialOutcome t = entry.run(g, params, inject_fault);
        out << json{{"reduction", entry.name}, {"params", params}, {"answer", t.reduced_answer},
                    {"direct", t.direct_answer}, {"passed", t.passed()}, {"report", t.report.to_json()}}
                   .dump(2)
            << "\n";
        return t.passed() ? kOk : kVerifyFailed;
      }
      CampaignConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw Error(ErrorCode::Io, "cannot open " + config_path);
        json doc;
        try {
          doc = json::parse(in);
        } catch (const json::parse_error& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        if (!verify_reduction_name.empty()) doc["reduction"] = verify_reduction_name;
        cfg = CampaignConfig::from_json(doc);
      } else {
        if (verify_reduction_name.empty()) throw Error(ErrorCode::UnknownReduction, "--reduction is required");
        cfg = CampaignConfig::defaults(verify_reduction_name);
      }
      if (trials) cfg.trials = *trials;
      if (seed) cfg.seed = *seed;
      if (n_min) cfg.n_min = *n_min;
      if (n_max) cfg.n_max = *n_max;
      if (m_min) cfg.m_min = *m_min;
      if (m_max) cfg.m_max = *m_max;
      if (w_min) cfg.w_min = *w_min;
      if (w_max) cfg.w_max = *w_max;
      if (!artifacts.empty()) cfg.artifact_dir = artifacts;
      cfg.inject_fault = cfg.inject_fault || inject_fault;
      const CampaignSummary summary = verify_reduction(cfg);
      out << summary.table();
      if (!summary_path.empty()) write_text(summary_path, summary.to_json().dump(2) + "\n");
      return summary.failed() == 0 ? kOk : kVerifyFailed;
    }
    if (report_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      const ReductionReport r = sparsity_report(reduction_name, g, report_params.to_json());
      out << r.to_json().dump(2) << "\n";
      return r.within_budget() ? kOk : kVerifyFailed;
    }
    if (compare_cmd->parsed()) {
      const auto b1 = TimeBound::parse(b1_text);
      const auto b2 = TimeBound::parse(b2_text);
      const auto verdict = compare_bounds(b1, b2);
      out << to_string(verdict) << "\n";
      out << "b1 = " << b1.str() << ", b2 = " << b2.str() << "\n";
      out << "alpha1+beta1 = " << b1.degree().str() << ", alpha2+beta2 = " << b2.degree().str()
          << ", alpha1 = " << b1.alpha.str() << ", alpha2 = " << b2.alpha.str() << "\n";
      return kOk;
    }
    if (submn_cmd->parsed()) {
      const auto b = TimeBound::parse(b_text);
      out << (is_sub_mn(b) ? "true" : "false") << "\n";
      return kOk;
    }
    if (kds_cmd->parsed()) {
      const Graph g = load_graph(graph_path);
      const auto r = k_dominating_via_diameter(g, kds_k);
      out << json{{"k", kds_k},
                  {"exists", r.exists},
                  {"diameters", distances(r.diameters)},
                  {"report", r.report.to_json()}}
                 .dump(2)
          << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace sprs
