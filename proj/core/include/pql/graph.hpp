#pragma once

#include "pql/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pql {

struct Edge {
    int u = 0;  // u < v always
    int v = 0;
    Weight w;

    int other(int x) const { return x == u ? v : u; }
};

struct Incidence {
    int to;
    int edge;
};

class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    // Throws std::invalid_argument on self-loop, parallel edge or bad endpoint.
    int add_edge(int u, int v, Weight w);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<Incidence>& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::optional<int> find_edge(int u, int v) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(int v) const;

    void set_weight(int e, Weight w) { edges_[e].w = std::move(w); }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::vector<std::string> labels_;
};

// Dense ranks of edge weights: equal weights share a rank, rank order = weight order.
std::vector<int> weight_ranks(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);
// Component id per vertex, numbered by smallest member.
std::vector<int> components(const WeightedGraph& g, int* count = nullptr);
// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertices);

class VertexOrdering {
public:
    VertexOrdering() = default;
    // Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
    explicit VertexOrdering(std::vector<int> order);
    static VertexOrdering identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    const std::vector<int>& positions() const { return pos_; }
    int at(int i) const { return order_[i]; }
    int pos(int v) const { return pos_[v]; }
    VertexOrdering reversed() const;

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) { return a.order_ == b.order_; }

private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

struct Layout {
    WeightedGraph graph;
    VertexOrdering ordering;
    std::vector<int> page;  // per edge index
    int k = 0;

    // Throws std::invalid_argument if sizes or page indices are inconsistent.
    void check() const;
    // Orientation of edge e along the spine: {left, right}.
    std::pair<int, int> span(int e) const;

    friend bool operator==(const Layout& a, const Layout& b) {
        return a.graph == b.graph && a.ordering == b.ordering && a.page == b.page && a.k == b.k;
    }
};

Layout single_page_layout(WeightedGraph g, VertexOrdering ord);

// Structural descriptors consumed by the constructors.
struct RootedTree {
    WeightedGraph graph;
    int root = 0;
};

struct Caterpillar {
    WeightedGraph graph;
    std::vector<int> path;  // underlying path p_1 .. p_k
};

struct LeggedCycle {
    WeightedGraph graph;
    std::vector<int> cycle;  // cyclic order
};

// Each returns an empty string when consistent, else a reason.
std::string check_tree(const RootedTree& t);
std::string check_caterpillar(const Caterpillar& c);
std::string check_legged_cycle(const LeggedCycle& l);

// Parent of every vertex in a BFS tree from `root`; -1 for the root and unreachable vertices.
std::vector<int> bfs_parents(const WeightedGraph& g, int root);

struct ContractionResult {
    struct Merge {
        int neighbor;  // id in the contracted graph
        Weight kept;   // weight of the edge to the first endpoint
        Weight dropped;
    };
    WeightedGraph graph;
    int merged = 0;                // id of x_uv
    std::vector<int> old_to_new;   // per old vertex
    std::vector<int> edge_origin;  // per new edge: old edge index that supplied it
    std::vector<Merge> merges;
};

// G/e for e = {u, v}. x_uv takes id min(u, v); ids above max(u, v) shift down by one.
// Where both u and v see the same neighbor, the edge from u (the first argument) survives.
ContractionResult contract_edge(const WeightedGraph& g, int u, int v);

}  // namespace pql
