#include "pql/validate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace pql {

std::string to_string(PairKind k) {
    switch (k) {
        case PairKind::nesting: return "nesting";
        case PairKind::pseudo_nesting: return "pseudo-nesting";
        case PairKind::crossing: return "crossing";
    }
    return "?";
}

namespace {

struct Spans {
    std::vector<int> l, r;  // spine positions of left and right endpoint per edge
};

Spans spans(const WeightedGraph& g, const VertexOrdering& ord) {
    Spans s;
    s.l.resize(g.m());
    s.r.resize(g.m());
    for (int e = 0; e < g.m(); ++e) {
        int a = ord.pos(g.edge(e).u), b = ord.pos(g.edge(e).v);
        s.l[e] = std::min(a, b);
        s.r[e] = std::max(a, b);
    }
    return s;
}

// e (heavier) must end strictly before f while f already started.
inline bool forbidden(const Spans& s, const std::vector<int>& rank, int e, int f) {
    return rank[e] > rank[f] && s.l[f] < s.r[e] && s.r[e] < s.r[f];
}

PairKind kind_of(const Spans& s, int e, int f) {
    if (s.l[e] == s.l[f]) return PairKind::pseudo_nesting;
    if (s.l[f] < s.l[e]) return PairKind::nesting;
    return PairKind::crossing;
}

}  // namespace

std::vector<ForbiddenPair> find_forbidden_pairs(const Layout& layout) {
    layout.check();
    const auto& g = layout.graph;
    auto s = spans(g, layout.ordering);
    auto rank = weight_ranks(g);
    std::vector<ForbiddenPair> out;
    for (int e = 0; e < g.m(); ++e)
        for (int f = 0; f < g.m(); ++f) {
            if (e == f || layout.page[e] != layout.page[f]) continue;
            if (forbidden(s, rank, e, f)) out.push_back({e, f, kind_of(s, e, f), layout.ordering.at(s.r[e])});
        }
    std::sort(out.begin(), out.end(), [&](const ForbiddenPair& a, const ForbiddenPair& b) {
        if (s.r[a.e] != s.r[b.e]) return s.r[a.e] < s.r[b.e];
        if (a.e != b.e) return a.e < b.e;
        return a.e_prime < b.e_prime;
    });
    return out;
}

std::optional<SweepViolation> simulate_sweep(const Layout& layout) {
    layout.check();
    const auto& g = layout.graph;
    const auto& ord = layout.ordering;
    auto rank = weight_ranks(g);
    using Item = std::pair<int, int>;  // (rank, edge)
    std::vector<std::priority_queue<Item, std::vector<Item>, std::greater<>>> queue(layout.k);
    std::vector<std::vector<int>> ending(layout.k);
    for (int t = 0; t < g.n(); ++t) {
        int v = ord.at(t);
        for (auto& list : ending) list.clear();
        for (auto [y, e] : g.adj(v))
            if (ord.pos(y) < t) ending[layout.page[e]].push_back(e);
        // O.1: pull the edges ending at v; C.1: they must be the smallest keys.
        for (int p = 0; p < layout.k; ++p) {
            if (ending[p].empty()) continue;
            int top = -1, heaviest = -1;
            for (int e : ending[p])
                if (rank[e] > top) top = rank[e], heaviest = e;
            std::vector<Item> keep;
            auto& q = queue[p];
            while (!q.empty() && q.top().first <= top) {
                auto it = q.top();
                q.pop();
                const auto& ed = g.edge(it.second);
                bool ends_here = ed.u == v || ed.v == v;
                if (ends_here) continue;
                if (it.first < top) return SweepViolation{v, heaviest, it.second, p};
                keep.push_back(it);
            }
            for (auto& it : keep) q.push(it);
        }
        // O.2: insert the edges starting at v.
        for (auto [y, e] : g.adj(v))
            if (ord.pos(y) > t) queue[layout.page[e]].push({rank[e], e});
    }
    return std::nullopt;
}

bool ConflictGraph::adjacent(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

ConflictGraph build_conflict_graph(const WeightedGraph& g, const VertexOrdering& ord) {
    auto s = spans(g, ord);
    auto rank = weight_ranks(g);
    ConflictGraph h;
    h.m = g.m();
    h.adj.assign(g.m(), {});
    for (int e = 0; e < g.m(); ++e)
        for (int f = 0; f < g.m(); ++f) {
            if (e == f || !forbidden(s, rank, e, f)) continue;
            h.pairs.emplace_back(e, f);
            h.adj[e].push_back(f);
            h.adj[f].push_back(e);
        }
    for (auto& a : h.adj) std::sort(a.begin(), a.end());
    return h;
}

Inversion longest_inversion(const WeightedGraph& g, const VertexOrdering& ord) {
    auto s = spans(g, ord);
    auto rank = weight_ranks(g);
    std::vector<int> by_right(g.m());
    std::iota(by_right.begin(), by_right.end(), 0);
    std::sort(by_right.begin(), by_right.end(), [&](int a, int b) {
        return s.r[a] != s.r[b] ? s.r[a] < s.r[b] : a < b;
    });

    std::vector<int> best;
    std::vector<char> is_right(g.n(), 0);
    for (int e = 0; e < g.m(); ++e) is_right[s.r[e]] = 1;
    std::vector<int> pred(g.m()), tail_key, tail_item, len(g.m());
    for (int t = 0; t < g.n(); ++t) {
        if (!is_right[t]) continue;
        // Longest chain in {e : l < t <= r} with right end increasing and weight decreasing,
        // i.e. a strictly increasing subsequence of -rank over strictly increasing right ends.
        tail_key.clear();
        tail_item.clear();
        std::size_t i = 0;
        int last_item = -1, last_len = 0;
        while (i < by_right.size()) {
            std::size_t j = i;
            while (j < by_right.size() && s.r[by_right[j]] == s.r[by_right[i]]) ++j;
            std::vector<std::pair<std::size_t, int>> updates;
            for (std::size_t q = i; q < j; ++q) {
                int e = by_right[q];
                if (!(s.l[e] < t && t <= s.r[e])) continue;
                int key = -rank[e];
                auto pos = static_cast<std::size_t>(std::lower_bound(tail_key.begin(), tail_key.end(), key) - tail_key.begin());
                pred[e] = pos == 0 ? -1 : tail_item[pos - 1];
                len[e] = static_cast<int>(pos) + 1;
                updates.emplace_back(pos, e);
                if (len[e] > last_len) last_len = len[e], last_item = e;
            }
            for (auto [pos, e] : updates) {
                int key = -rank[e];
                if (pos == tail_key.size()) {
                    tail_key.push_back(key);
                    tail_item.push_back(e);
                } else if (key < tail_key[pos]) {
                    tail_key[pos] = key;
                    tail_item[pos] = e;
                }
            }
            i = j;
        }
        if (last_len > static_cast<int>(best.size())) {
            best.clear();
            for (int e = last_item; e != -1; e = pred[e]) best.push_back(e);
        }
    }
    Inversion inv;
    // `best` runs from the rightmost right end (lightest) back to the leftmost: e_1 .. e_k.
    inv.edges = best;
    if (!best.empty()) {
        inv.right_end = ord.at(s.r[best.front()]);
        inv.left_end = ord.at(s.r[best.back()]);
    }
    return inv;
}

bool is_inversion(const WeightedGraph& g, const VertexOrdering& ord, const std::vector<int>& edges) {
    if (edges.empty()) return true;
    auto s = spans(g, ord);
    int vk = s.r[edges.back()];
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int e = edges[i];
        if (s.l[e] >= vk) return false;
        if (i + 1 < edges.size()) {
            int f = edges[i + 1];
            if (!(s.r[f] < s.r[e])) return false;
            if (!(g.edge(e).w < g.edge(f).w)) return false;
        }
    }
    return true;
}

bool is_cycle_graph(const WeightedGraph& g) {
    if (g.n() < 3 || g.m() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

bool last_vertex_heavy_check(const Layout& layout) {
    const auto& g = layout.graph;
    if (!is_cycle_graph(g)) throw std::invalid_argument("graph is not a cycle");
    Weight top = g.edge(0).w;
    for (const auto& e : g.edges()) top = std::max(top, e.w);
    int last = layout.ordering.at(g.n() - 1);
    for (auto [y, e] : g.adj(last))
        if (g.edge(e).w == top) return true;
    return false;
}

}  // namespace pql
