#include "pql/io.hpp"

#include <fstream>
#include <sstream>

namespace pql {

json weight_to_json(const Weight& w) {
    if (auto i = w.as_int64()) return *i;
    return w.str();
}

Weight weight_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Weight(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Weight(Weight::integer(j.get<std::uint64_t>()), Weight::integer(1));
    if (j.is_string()) {
        if (auto w = Weight::parse(j.get<std::string>())) return *w;
    }
    throw ParseError(where + ": weight must be an integer or a \"p/q\" string, got " + j.dump());
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer, got " + j.dump());
    auto v = j.get<std::int64_t>();
    if (v < 0 || v > (1 << 30)) throw ParseError(where + ": integer out of range");
    return static_cast<int>(v);
}

}  // namespace

WeightedGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("graph: expected an object");
    if (!j.contains("n")) throw ParseError("graph: missing \"n\"");
    int n = get_int(j["n"], "graph.n");
    WeightedGraph g(n);
    if (j.contains("edges")) {
        const auto& es = j["edges"];
        if (!es.is_array()) throw ParseError("graph.edges: expected an array");
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::string where = "graph.edges[" + std::to_string(i) + "]";
            const auto& e = es[i];
            if (!e.is_array() || e.size() != 3) throw ParseError(where + ": expected [u, v, w]");
            int u = get_int(e[0], where + "[0]");
            int v = get_int(e[1], where + "[1]");
            Weight w = weight_from_json(e[2], where);
            try {
                g.add_edge(u, v, std::move(w));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(where + ": " + ex.what());
            }
        }
    }
    if (j.contains("labels")) {
        const auto& ls = j["labels"];
        if (!ls.is_array()) throw ParseError("graph.labels: expected an array");
        std::vector<std::string> labels;
        for (const auto& l : ls) {
            if (!l.is_string()) throw ParseError("graph.labels: expected strings");
            labels.push_back(l.get<std::string>());
        }
        try {
            g.set_labels(std::move(labels));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string("graph.labels: ") + ex.what());
        }
    }
    return g;
}

json graph_to_json(const WeightedGraph& g) {
    json j;
    j["n"] = g.n();
    if (!g.labels().empty()) j["labels"] = g.labels();
    json es = json::array();
    for (const auto& e : g.edges()) es.push_back(json::array({e.u, e.v, weight_to_json(e.w)}));
    j["edges"] = std::move(es);
    return j;
}

WeightedGraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string serialize_graph(const WeightedGraph& g) { return graph_to_json(g).dump(); }

json layout_to_json(const Layout& l, bool embed_graph) {
    json j;
    j["order"] = l.ordering.order();
    j["k"] = l.k;
    json pages = json::object();
    for (int e = 0; e < l.graph.m(); ++e) {
        const auto& ed = l.graph.edge(e);
        pages[std::to_string(ed.u) + "-" + std::to_string(ed.v)] = l.page[e];
    }
    j["pages"] = std::move(pages);
    if (embed_graph) j["graph"] = graph_to_json(l.graph);
    return j;
}

VertexOrdering ordering_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("order")) throw ParseError("ordering: missing \"order\"");
        arr = &j["order"];
    }
    if (!arr->is_array()) throw ParseError("ordering: expected an array");
    std::vector<int> order;
    for (std::size_t i = 0; i < arr->size(); ++i) order.push_back(get_int((*arr)[i], "order[" + std::to_string(i) + "]"));
    try {
        return VertexOrdering(std::move(order));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("ordering: ") + ex.what());
    }
}

VertexOrdering parse_ordering(std::string_view text) { return ordering_from_json(parse_json(text)); }

Layout layout_from_json(const json& j, const WeightedGraph* g) {
    if (!j.is_object()) throw ParseError("layout: expected an object");
    Layout l;
    if (j.contains("graph"))
        l.graph = graph_from_json(j["graph"]);
    else if (g)
        l.graph = *g;
    else
        throw ParseError("layout: no graph given and none embedded");
    l.ordering = ordering_from_json(j);
    if (l.ordering.size() != l.graph.n()) throw ParseError("layout: order length does not match graph");
    if (!j.contains("k")) throw ParseError("layout: missing \"k\"");
    l.k = get_int(j["k"], "layout.k");
    l.page.assign(l.graph.m(), -1);
    if (!j.contains("pages") || !j["pages"].is_object()) throw ParseError("layout: missing \"pages\" object");
    for (const auto& [key, val] : j["pages"].items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw ParseError("layout.pages: bad key \"" + key + "\"");
        int u, v;
        try {
            u = std::stoi(key.substr(0, dash));
            v = std::stoi(key.substr(dash + 1));
        } catch (const std::exception&) {
            throw ParseError("layout.pages: bad key \"" + key + "\"");
        }
        auto e = l.graph.find_edge(u, v);
        if (!e) throw ParseError("layout.pages: \"" + key + "\" is not an edge");
        int p = get_int(val, "layout.pages[" + key + "]");
        if (p >= l.k) throw ParseError("layout.pages: page of \"" + key + "\" out of range");
        l.page[*e] = p;
    }
    for (int e = 0; e < l.graph.m(); ++e)
        if (l.page[e] < 0)
            throw ParseError("layout.pages: edge " + std::to_string(l.graph.edge(e).u) + "-" +
                             std::to_string(l.graph.edge(e).v) + " has no page");
    return l;
}

std::string serialize_layout(const Layout& l, bool embed_graph) { return layout_to_json(l, embed_graph).dump(); }

Layout parse_layout(std::string_view text, const WeightedGraph* g) { return layout_from_json(parse_json(text), g); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pql
