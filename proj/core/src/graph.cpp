#include "pql/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace pql {

WeightedGraph::WeightedGraph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
}

int WeightedGraph::add_edge(int u, int v, Weight w) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (find_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(std::min(u, v)) + "-" +
                                    std::to_string(std::max(u, v)));
    if (u > v) std::swap(u, v);
    int id = m();
    edges_.push_back({u, v, std::move(w)});
    adj_[u].push_back({v, id});
    adj_[v].push_back({u, id});
    return id;
}

std::optional<int> WeightedGraph::find_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return std::nullopt;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    for (const auto& inc : a)
        if (inc.to == target) return inc.edge;
    return std::nullopt;
}

void WeightedGraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n())
        throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

std::string WeightedGraph::label(int v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n() != b.n() || a.m() != b.m() || a.labels_ != b.labels_) return false;
    for (int i = 0; i < a.m(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || !(x.w == y.w)) return false;
    }
    return true;
}

std::vector<int> weight_ranks(const WeightedGraph& g) {
    std::vector<int> idx(g.m());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return g.edge(a).w < g.edge(b).w; });
    std::vector<int> rank(g.m());
    int r = -1;
    for (int i = 0; i < g.m(); ++i) {
        if (i == 0 || g.edge(idx[i - 1]).w < g.edge(idx[i]).w) ++r;
        rank[idx[i]] = r;
    }
    return rank;
}

std::vector<int> components(const WeightedGraph& g, int* count) {
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, e] : g.adj(x))
                if (comp[y] == -1) {
                    comp[y] = c;
                    stack.push_back(y);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const WeightedGraph& g) {
    int c = 0;
    components(g, &c);
    return c <= 1;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vertices) {
    std::vector<int> to_new(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) to_new[vertices[i]] = i;
    WeightedGraph h(static_cast<int>(vertices.size()));
    for (const auto& e : g.edges())
        if (to_new[e.u] >= 0 && to_new[e.v] >= 0) h.add_edge(to_new[e.u], to_new[e.v], e.w);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (int v : vertices) labels.push_back(g.labels()[v]);
        h.set_labels(std::move(labels));
    }
    return h;
}

VertexOrdering::VertexOrdering(std::vector<int> order) : order_(std::move(order)), pos_(order_.size(), -1) {
    int n = size();
    for (int i = 0; i < n; ++i) {
        int v = order_[i];
        if (v < 0 || v >= n || pos_[v] != -1) throw std::invalid_argument("ordering is not a permutation");
        pos_[v] = i;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    return VertexOrdering(std::move(o));
}

VertexOrdering VertexOrdering::reversed() const {
    return VertexOrdering(std::vector<int>(order_.rbegin(), order_.rend()));
}

void Layout::check() const {
    if (ordering.size() != graph.n()) throw std::invalid_argument("ordering size does not match graph");
    if (static_cast<int>(page.size()) != graph.m()) throw std::invalid_argument("page assignment size mismatch");
    if (k < 0) throw std::invalid_argument("negative page count");
    for (int p : page)
        if (p < 0 || p >= k) throw std::invalid_argument("page index out of range");
}

std::pair<int, int> Layout::span(int e) const {
    const auto& ed = graph.edge(e);
    if (ordering.pos(ed.u) < ordering.pos(ed.v)) return {ed.u, ed.v};
    return {ed.v, ed.u};
}

Layout single_page_layout(WeightedGraph g, VertexOrdering ord) {
    Layout l;
    l.page.assign(g.m(), 0);
    l.k = g.m() > 0 ? 1 : 0;
    l.graph = std::move(g);
    l.ordering = std::move(ord);
    return l;
}

std::vector<int> bfs_parents(const WeightedGraph& g, int root) {
    std::vector<int> parent(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (auto [y, e] : g.adj(x))
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                q.push(y);
            }
    }
    return parent;
}

std::string check_tree(const RootedTree& t) {
    const auto& g = t.graph;
    if (g.n() == 0) return "empty graph";
    if (t.root < 0 || t.root >= g.n()) return "root not in graph";
    if (g.m() != g.n() - 1 || !is_connected(g)) return "graph is not a tree";
    return {};
}

std::string check_caterpillar(const Caterpillar& c) {
    const auto& g = c.graph;
    if (g.n() == 0) return "empty graph";
    if (g.m() != g.n() - 1 || !is_connected(g)) return "graph is not a tree";
    if (c.path.empty()) return "empty underlying path";
    std::vector<char> on(g.n(), 0);
    for (int v : c.path) {
        if (v < 0 || v >= g.n() || on[v]) return "underlying path repeats or leaves the graph";
        on[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < c.path.size(); ++i)
        if (!g.find_edge(c.path[i], c.path[i + 1])) return "underlying path uses a non-edge";
    for (int v = 0; v < g.n(); ++v) {
        if (on[v]) continue;
        if (g.degree(v) != 1 || !on[g.adj(v)[0].to]) return "vertex " + std::to_string(v) + " is not a leaf of the path";
    }
    return {};
}

std::string check_legged_cycle(const LeggedCycle& l) {
    const auto& g = l.graph;
    int L = static_cast<int>(l.cycle.size());
    if (L < 3) return "cycle shorter than 3";
    if (g.m() != g.n() || !is_connected(g)) return "graph is not unicyclic";
    std::vector<char> on(g.n(), 0);
    for (int v : l.cycle) {
        if (v < 0 || v >= g.n() || on[v]) return "cycle repeats or leaves the graph";
        on[v] = 1;
    }
    for (int i = 0; i < L; ++i)
        if (!g.find_edge(l.cycle[i], l.cycle[(i + 1) % L])) return "cycle uses a non-edge";
    for (int v = 0; v < g.n(); ++v) {
        if (on[v]) continue;
        if (g.degree(v) != 1 || !on[g.adj(v)[0].to]) return "vertex " + std::to_string(v) + " is not a leg";
    }
    return {};
}

ContractionResult contract_edge(const WeightedGraph& g, int u, int v) {
    if (!g.find_edge(u, v)) throw std::invalid_argument("edge to contract is not in the graph");
    int lo = std::min(u, v), hi = std::max(u, v);
    ContractionResult r;
    r.merged = lo;
    r.old_to_new.resize(g.n());
    for (int x = 0; x < g.n(); ++x) r.old_to_new[x] = x == hi ? lo : (x > hi ? x - 1 : x);
    r.graph = WeightedGraph(g.n() - 1);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (int x = 0; x < g.n(); ++x) {
            if (x == hi) continue;
            labels.push_back(x == lo ? g.label(u) + "+" + g.label(v) : g.label(x));
        }
        r.graph.set_labels(std::move(labels));
    }
    // Edges at u first so they win the merge, then the rest in index order.
    std::vector<int> order;
    for (auto [y, e] : g.adj(u)) order.push_back(e);
    std::sort(order.begin(), order.end());
    std::vector<char> taken(g.m(), 0);
    for (int e : order) taken[e] = 1;
    for (int e = 0; e < g.m(); ++e)
        if (!taken[e]) order.push_back(e);
    std::map<int, Weight> first_weight;
    for (int e : order) {
        const auto& ed = g.edge(e);
        int a = r.old_to_new[ed.u], b = r.old_to_new[ed.v];
        if (a == b) continue;
        if (auto ex = r.graph.find_edge(a, b)) {
            int nb = a == lo ? b : a;
            r.merges.push_back({nb, r.graph.edge(*ex).w, ed.w});
            continue;
        }
        r.graph.add_edge(a, b, ed.w);
        r.edge_origin.push_back(e);
    }
    return r;
}

}  // namespace pql
