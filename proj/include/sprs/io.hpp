#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sprs/graph.hpp"

namespace sprs {

/// Canonical JSON: {"n", "directed", "edges": [[u,v,w],...], "meta": {...}}
/// with edges sorted lexicographically. Gadget graphs carry meta.gadget.
nlohmann::json to_json(const Graph& g, const nlohmann::json& meta = nlohmann::json::object());
Graph graph_from_json(const nlohmann::json& doc);

std::string serialize(const Graph& g, const nlohmann::json& meta = nlohmann::json::object());

/// Throws Error(ParseError) with a field path such as "edges[3][2]", or the
/// parser's line/column for malformed JSON text.
Graph deserialize(const std::string& text);

/// Gadget JSON: the canonical graph plus "roles" and "recovery" objects.
nlohmann::json to_json(const GadgetGraph& gadget, const nlohmann::json& meta = nlohmann::json::object());

std::string export_dot(const Graph& g, const RoleMap* roles = nullptr);

Graph load_graph(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Distances render as numbers or the string "inf".
nlohmann::json to_json(Distance d);

}  // namespace sprs
