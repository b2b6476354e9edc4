#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "turan/graph.hpp"

namespace turan {

/// graph6 encoding (no ">>graph6<<" header). Bit-exact with nauty's format.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace turan
