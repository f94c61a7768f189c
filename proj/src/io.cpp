#include "sprs/io.hpp"

#include <fstream>
#include <sstream>

#include "sprs/error.hpp"

namespace sprs {

using nlohmann::json;

json to_json(Distance d) {
  if (d.is_finite()) return d.value();
  return "inf";
}

json to_json(const Graph& g, const json& meta) {
  json doc;
  doc["n"] = g.n();
  doc["directed"] = g.directed();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  doc["edges"] = std::move(edges);
  json m = meta.is_object() ? meta : json::object();
  if (g.is_gadget()) m["gadget"] = true;
  doc["meta"] = std::move(m);
  return doc;
}

std::string serialize(const Graph& g, const json& meta) { return to_json(g, meta).dump(); }

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ParseError, field + ": " + why);
}

std::uint64_t read_unsigned(const json& value, const std::string& field) {
  if (!value.is_number_integer()) parse_fail(field, "expected an integer, got " + value.dump());
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  const auto signed_value = value.get<std::int64_t>();
  if (signed_value < 0) parse_fail(field, "must be non-negative, got " + value.dump());
  return static_cast<std::uint64_t>(signed_value);
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) parse_fail("<root>", "expected an object");
  if (!doc.contains("n")) parse_fail("n", "missing");
  if (!doc.contains("directed") || !doc["directed"].is_boolean()) parse_fail("directed", "missing or not a boolean");
  if (!doc.contains("edges") || !doc["edges"].is_array()) parse_fail("edges", "missing or not an array");
  const auto n = read_unsigned(doc["n"], "n");
  bool gadget = false;
  if (doc.contains("meta") && doc["meta"].is_object() && doc["meta"].contains("gadget")) {
    gadget = doc["meta"]["gadget"].is_boolean() && doc["meta"]["gadget"].get<bool>();
  }
  std::vector<Edge> edges;
  const auto& list = doc["edges"];
  edges.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const auto& triple = list[i];
    if (!triple.is_array() || triple.size() != 3) parse_fail(field, "expected [u, v, w]");
    const auto u = read_unsigned(triple[0], field + "[0]");
    const auto v = read_unsigned(triple[1], field + "[1]");
    const auto w = read_unsigned(triple[2], field + "[2]");
    if (u >= n || v >= n) parse_fail(field, "endpoint out of range for n=" + std::to_string(n));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  try {
    return Graph(n, doc["directed"].get<bool>(), std::move(edges), gadget);
  } catch (const Error& e) {
    parse_fail("edges", e.what());
  }
}

Graph deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

json to_json(const GadgetGraph& gadget, const json& meta) {
  json doc = to_json(gadget.graph, meta);
  json roles = json::object();
  for (const auto& [name, v] : gadget.roles) roles[name] = v;
  json recovery = json::object();
  for (const auto& [name, value] : gadget.recovery) recovery[name] = value;
  doc["roles"] = std::move(roles);
  doc["recovery"] = std::move(recovery);
  return doc;
}

std::string export_dot(const Graph& g, const RoleMap* roles) {
  std::ostringstream os;
  const char* arrow = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph" : "graph") << " G {\n";
  const auto labels = roles ? role_labels(*roles, g.n()) : std::vector<std::string>(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (!labels[v].empty()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << e.u << arrow << e.v << " [label=\"" << e.w << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize(buffer.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
}

}  // namespace sprs
