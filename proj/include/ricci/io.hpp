#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Edge list: header "n m", then m lines "u v". Blank lines are skipped;
// anything else is a ParseError naming the offending line.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// JSON object {"n": vertices, "edges": [[u, v], ...]}.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json graph_to_json(const Graph& g);

// Format is sniffed from the first non-space byte: '{' means JSON.
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

// {"num": ..., "den": ..., "decimal": "..."}; num and den are JSON numbers
// when they fit in 64 bits and decimal strings otherwise.
nlohmann::ordered_json rational_to_json(const Rational& r);

} // namespace ricci
