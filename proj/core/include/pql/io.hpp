#pragma once

#include "pql/graph.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pql {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integer weights that fit int64 become JSON integers, everything else "p/q" strings.
json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j, const std::string& where);

// {"n": int, "labels"?: [string], "edges": [[u, v, w], ...]}
WeightedGraph graph_from_json(const json& j);
json graph_to_json(const WeightedGraph& g);
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

// {"order": [...], "k": int, "pages": {"u-v": page}}; with embed_graph also "graph": {...}.
json layout_to_json(const Layout& l, bool embed_graph = false);
// Uses the embedded "graph" member when present, else `g`.
Layout layout_from_json(const json& j, const WeightedGraph* g = nullptr);
std::string serialize_layout(const Layout& l, bool embed_graph = false);
Layout parse_layout(std::string_view text, const WeightedGraph* g = nullptr);

// Accepts a bare array or an object with an "order" member.
VertexOrdering ordering_from_json(const json& j);
VertexOrdering parse_ordering(std::string_view text);

json parse_json(std::string_view text);
std::string read_file(const std::string& path);

}  // namespace pql
