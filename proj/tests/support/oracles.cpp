#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace pql::oracle {

Weight random_weight(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    return Weight(Weight::integer(num(rng)), Weight::integer(den(rng)));
}

void randomize_weights(WeightedGraph& g, std::mt19937_64& rng, int max_num, int max_den) {
    for (int e = 0; e < g.m(); ++e) g.set_weight(e, random_weight(rng, max_num, max_den));
}

WeightedGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v, random_weight(rng));
    return g;
}

WeightedGraph random_tree(int n, std::mt19937_64& rng) {
    WeightedGraph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        g.add_edge(parent(rng), v, random_weight(rng));
    }
    return g;
}

VertexOrdering random_ordering(int n, std::mt19937_64& rng) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    return VertexOrdering(o);
}

bool conflicts(const WeightedGraph& g, const VertexOrdering& ord, int e, int f) {
    auto test = [&](int a, int b) {
        const auto& x = g.edge(a);
        const auto& y = g.edge(b);
        int lx = std::min(ord.pos(x.u), ord.pos(x.v)), rx = std::max(ord.pos(x.u), ord.pos(x.v));
        int ly = std::min(ord.pos(y.u), ord.pos(y.v)), ry = std::max(ord.pos(y.u), ord.pos(y.v));
        return x.w > y.w && lx < rx && ly < rx && rx < ry;
    };
    return test(e, f) || test(f, e);
}

std::vector<std::vector<char>> conflict_matrix(const WeightedGraph& g, const VertexOrdering& ord) {
    int m = g.m();
    std::vector<std::vector<char>> c(m, std::vector<char>(m, 0));
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
            if (e != f) c[e][f] = conflicts(g, ord, e, f);
    return c;
}

bool valid_by_definition(const WeightedGraph& g, const VertexOrdering& ord, const std::vector<int>& page) {
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f)
            if (page[e] == page[f] && conflicts(g, ord, e, f)) return false;
    return true;
}

int min_pages(const WeightedGraph& g, const VertexOrdering& ord, std::vector<int>* assignment) {
    int m = g.m();
    if (m == 0) {
        if (assignment) assignment->clear();
        return 0;
    }
    auto c = conflict_matrix(g, ord);
    int best = m + 1;
    std::vector<int> page(m, -1), best_page;
    // Restricted growth strings enumerate each set partition once.
    std::function<void(int, int)> rec = [&](int e, int used) {
        if (used >= best) return;
        if (e == m) {
            best = used;
            best_page = page;
            return;
        }
        for (int p = 0; p <= used; ++p) {
            bool ok = true;
            for (int f = 0; f < e && ok; ++f)
                if (page[f] == p && c[e][f]) ok = false;
            if (!ok) continue;
            page[e] = p;
            rec(e + 1, std::max(used, p + 1));
            page[e] = -1;
        }
    };
    rec(0, 0);
    if (assignment) *assignment = best_page;
    return best;
}

int min_pages_free(const WeightedGraph& g) {
    std::vector<int> o(g.n());
    std::iota(o.begin(), o.end(), 0);
    int best = g.m();
    do {
        best = std::min(best, min_pages(g, VertexOrdering(o)));
    } while (best > (g.m() ? 1 : 0) && std::next_permutation(o.begin(), o.end()));
    return best;
}

bool has_one_page_ordering(const WeightedGraph& g) {
    std::vector<int> o(g.n());
    std::iota(o.begin(), o.end(), 0);
    std::vector<int> zero(g.m(), 0);
    do {
        if (valid_by_definition(g, VertexOrdering(o), zero)) return true;
    } while (std::next_permutation(o.begin(), o.end()));
    return false;
}

bool universal_one_page(const WeightedGraph& g) {
    std::vector<int> rank(g.m());
    std::iota(rank.begin(), rank.end(), 0);
    do {
        WeightedGraph h = g;
        for (int e = 0; e < g.m(); ++e) h.set_weight(e, rank[e] + 1);
        if (!has_one_page_ordering(h)) return false;
    } while (std::next_permutation(rank.begin(), rank.end()));
    return true;
}

int longest_inversion_length(const WeightedGraph& g, const VertexOrdering& ord) {
    int m = g.m(), best = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> es;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) es.push_back(e);
        if (static_cast<int>(es.size()) <= best) continue;
        auto right = [&](int e) { return std::max(ord.pos(g.edge(e).u), ord.pos(g.edge(e).v)); };
        auto left = [&](int e) { return std::min(ord.pos(g.edge(e).u), ord.pos(g.edge(e).v)); };
        // e_1 has the rightmost right endpoint.
        std::sort(es.begin(), es.end(), [&](int a, int b) { return right(a) > right(b); });
        bool ok = true;
        for (std::size_t i = 0; i + 1 < es.size() && ok; ++i)
            if (right(es[i]) == right(es[i + 1]) || !(g.edge(es[i]).w < g.edge(es[i + 1]).w)) ok = false;
        int vk = right(es.back());
        for (int e : es)
            if (left(e) >= vk) ok = false;
        if (ok) best = static_cast<int>(es.size());
    }
    return best;
}

int longest_decreasing_path(const std::vector<std::vector<char>>& cell) {
    int rows = static_cast<int>(cell.size());
    int cols = rows ? static_cast<int>(cell[0].size()) : 0;
    int best = 0;
    std::function<void(int, int, int)> walk = [&](int r, int c, int len) {
        best = std::max(best, len);
        for (int r2 = 0; r2 < r; ++r2)
            for (int c2 = c + 1; c2 < cols; ++c2)
                if (cell[r2][c2]) walk(r2, c2, len + 1);
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (cell[r][c]) walk(r, c, 1);
    return best;
}

int chromatic_number(const WeightedGraph& g) {
    int n = g.n();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n, -1);
        std::function<bool(int)> rec = [&](int v) {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (auto [u, e] : g.adj(v))
                    if (col[u] == c) ok = false;
                if (!ok) continue;
                col[v] = c;
                if (rec(v + 1)) return true;
                col[v] = -1;
            }
            return false;
        };
        if (rec(0)) return k;
    }
    return n;
}

bool is_minor_model(const WeightedGraph& host, const WeightedGraph& pattern,
                    const std::vector<std::vector<int>>& branch) {
    if (static_cast<int>(branch.size()) != pattern.n()) return false;
    std::vector<int> owner(host.n(), -1);
    for (int i = 0; i < pattern.n(); ++i) {
        if (branch[i].empty()) return false;
        for (int v : branch[i]) {
            if (v < 0 || v >= host.n() || owner[v] != -1) return false;
            owner[v] = i;
        }
    }
    for (int i = 0; i < pattern.n(); ++i) {
        std::set<int> seen{branch[i][0]};
        std::vector<int> stack{branch[i][0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : host.adj(v))
                if (owner[u] == i && seen.insert(u).second) stack.push_back(u);
        }
        if (seen.size() != branch[i].size()) return false;
    }
    for (const auto& pe : pattern.edges()) {
        bool found = false;
        for (const auto& he : host.edges())
            if ((owner[he.u] == pe.u && owner[he.v] == pe.v) || (owner[he.u] == pe.v && owner[he.v] == pe.u))
                found = true;
        if (!found) return false;
    }
    return true;
}

namespace {

int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    int idx = 0;
    for (int a = 0; a < u; ++a) idx += n - 1 - a;
    return idx + (v - u - 1);
}

}  // namespace

unsigned edge_mask(const WeightedGraph& g) {
    unsigned mask = 0;
    for (const auto& e : g.edges()) mask |= 1u << pair_index(g.n(), e.u, e.v);
    return mask;
}

WeightedGraph graph_from_mask(int n, unsigned mask) {
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> pair_index(n, u, v) & 1) g.add_edge(u, v, 1);
    return g;
}

unsigned canonical_form(int n, unsigned mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> pair_index(n, u, v) & 1) pairs.emplace_back(u, v);
    unsigned best = ~0u;
    do {
        unsigned m2 = 0;
        for (auto [u, v] : pairs) m2 |= 1u << pair_index(n, perm[u], perm[v]);
        best = std::min(best, m2);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<WeightedGraph> graphs_up_to_iso(int n, bool connected_only) {
    int pairs = n * (n - 1) / 2;
    std::set<unsigned> seen;
    std::vector<WeightedGraph> out;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        auto g = graph_from_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        unsigned c = canonical_form(n, mask);
        if (seen.insert(c).second) out.push_back(graph_from_mask(n, c));
    }
    return out;
}

}  // namespace pql::oracle
