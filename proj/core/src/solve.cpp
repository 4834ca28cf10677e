#include "pql/solve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace pql {

std::string to_string(SolveStatus s) { return s == SolveStatus::optimal ? "optimal" : "budget-exceeded"; }

std::string to_string(UniversalResult::Verdict v) {
    switch (v) {
        case UniversalResult::Verdict::yes: return "yes";
        case UniversalResult::Verdict::no: return "no";
        case UniversalResult::Verdict::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

int solver_threads(const SolveOptions& opt) {
    int t = opt.threads;
    if (t <= 0) {
        if (const char* env = std::getenv("PQL_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, t);
}

// ---------------------------------------------------------------------------------------------
// Coloring

namespace {

struct DsaturState {
    const ConflictGraph& h;
    std::vector<int> color;
    std::vector<std::vector<int>> seen;  // seen[v][c]: neighbors of v with color c
    std::vector<int> sat;

    explicit DsaturState(const ConflictGraph& g, int max_colors)
        : h(g), color(g.m, -1), seen(g.m, std::vector<int>(max_colors + 1, 0)), sat(g.m, 0) {}

    void assign(int v, int c) {
        color[v] = c;
        for (int y : h.adj[v])
            if (seen[y][c]++ == 0) ++sat[y];
    }
    void unassign(int v) {
        int c = color[v];
        color[v] = -1;
        for (int y : h.adj[v])
            if (--seen[y][c] == 0) --sat[y];
    }
    int pick() const {
        int best = -1;
        for (int v = 0; v < h.m; ++v) {
            if (color[v] != -1) continue;
            if (best == -1 || sat[v] > sat[best] ||
                (sat[v] == sat[best] && h.adj[v].size() > h.adj[best].size()))
                best = v;
        }
        return best;
    }
};

}  // namespace

Coloring color_dsatur_greedy(const ConflictGraph& h) {
    Coloring out;
    DsaturState st(h, h.m);
    int used = 0;
    for (int step = 0; step < h.m; ++step) {
        int v = st.pick();
        int c = 0;
        while (st.seen[v][c] > 0) ++c;
        st.assign(v, c);
        used = std::max(used, c + 1);
    }
    out.k = used;
    out.color = st.color;
    out.exact = false;
    return out;
}

Coloring color_exact(const ConflictGraph& h, std::vector<int> seed_clique, long long node_budget) {
    Coloring best = color_dsatur_greedy(h);
    // Greedy clique extension of the seed, highest degree first.
    std::vector<int> by_degree(h.m);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return h.adj[a].size() > h.adj[b].size(); });
    for (int v : by_degree) {
        if (std::find(seed_clique.begin(), seed_clique.end(), v) != seed_clique.end()) continue;
        if (std::all_of(seed_clique.begin(), seed_clique.end(), [&](int u) { return h.adjacent(u, v); }))
            seed_clique.push_back(v);
    }
    best.clique = seed_clique;
    best.exact = true;
    int lb = static_cast<int>(seed_clique.size());
    if (h.m == 0 || best.k <= std::max(lb, 1)) return best;
    DsaturState st(h, best.k);
    for (int i = 0; i < lb; ++i) st.assign(seed_clique[i], i);
    long long nodes = 0;
    bool aborted = false;
    std::function<void(int, int)> go = [&](int colored, int used) {
        if (aborted || best.k <= lb) return;
        if (++nodes > node_budget) {
            aborted = true;
            return;
        }
        if (colored == h.m) {
            best.k = used;
            best.color = st.color;
            return;
        }
        int v = st.pick();
        int limit = std::min(used + 1, best.k - 1);
        for (int c = 0; c < limit && !aborted; ++c) {
            if (st.seen[v][c] > 0) continue;
            st.assign(v, c);
            go(colored + 1, std::max(used, c + 1));
            st.unassign(v);
            if (best.k <= std::max(used, lb)) return;
        }
    };
    go(lb, lb);
    best.nodes = nodes;
    best.exact = !aborted;
    return best;
}

// ---------------------------------------------------------------------------------------------
// Fixed order

SolveResult solve_fixed_order(const WeightedGraph& g, const VertexOrdering& ord, const SolveOptions& opt) {
    if (ord.size() != g.n()) throw std::invalid_argument("solve_fixed_order: ordering size does not match the graph");
    SolveResult res;
    auto h = build_conflict_graph(g, ord);
    auto inv = longest_inversion(g, ord);
    auto col = color_exact(h, inv.edges, opt.node_budget);
    Layout l;
    l.graph = g;
    l.ordering = ord;
    l.k = col.k;
    l.page = col.color;
    res.k = col.k;
    res.witness = std::move(l);
    res.clique = col.clique;
    res.lower_bound = col.exact ? col.k : static_cast<int>(col.clique.size());
    res.status = col.exact ? SolveStatus::optimal : SolveStatus::budget_exceeded;
    res.nodes = col.nodes;
    return res;
}

// ---------------------------------------------------------------------------------------------
// One-page ordering by search over placed sets

namespace {

struct BitGraph {
    int n = 0, m = 0;
    std::vector<std::uint64_t> inc;       // per vertex: bits of incident edges (edges in rank order)
    std::vector<std::uint64_t> below;     // per edge bit: bits of edges with strictly smaller rank
    std::vector<int> edge_of_bit;
    std::vector<std::pair<int, int>> ends;  // per bit
};

BitGraph make_bitgraph(const WeightedGraph& g, const std::vector<int>& rank) {
    BitGraph b;
    b.n = g.n();
    b.m = g.m();
    std::vector<int> idx(g.m());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return rank[x] < rank[y]; });
    b.edge_of_bit = idx;
    b.inc.assign(g.n(), 0);
    b.below.assign(g.m(), 0);
    b.ends.resize(g.m());
    for (int i = 0; i < g.m(); ++i) {
        const auto& e = g.edge(idx[i]);
        b.inc[e.u] |= 1ULL << i;
        b.inc[e.v] |= 1ULL << i;
        b.ends[i] = {e.u, e.v};
        for (int j = 0; j < i; ++j)
            if (rank[idx[j]] < rank[idx[i]]) b.below[i] |= 1ULL << j;
    }
    return b;
}

inline int top_bit(std::uint64_t x) { return 63 - __builtin_clzll(x); }

std::optional<std::vector<int>> one_page_search(const BitGraph& b) {
    int n = b.n;
    std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    std::vector<char> dead(std::size_t(1) << n, 0);
    std::vector<int> order;
    std::function<bool(std::uint32_t, std::uint64_t)> go = [&](std::uint32_t placed, std::uint64_t cut) -> bool {
        if (placed == full) return true;
        if (dead[placed]) return false;
        for (int v = 0; v < n; ++v) {
            if (placed >> v & 1) continue;
            std::uint64_t ending = cut & b.inc[v];
            if (ending) {
                std::uint64_t others = cut & ~b.inc[v];
                if (others & b.below[top_bit(ending)]) continue;
            }
            order.push_back(v);
            if (go(placed | (1u << v), cut ^ b.inc[v])) return true;
            order.pop_back();
        }
        dead[placed] = 1;
        return false;
    };
    if (go(0, 0)) return order;
    return std::nullopt;
}

// `ending` is a rank-ordered bit set, so its top bit is a heaviest ending edge. Edges of equal
// rank are in `ending` or not below it, which keeps ties legal.

}  // namespace

std::optional<VertexOrdering> find_one_page_ordering(const WeightedGraph& g, const std::vector<int>& rank) {
    if (g.n() > 24) throw std::invalid_argument("find_one_page_ordering: at most 24 vertices");
    if (g.m() > 64) return std::nullopt;  // never a one-page graph: m <= n + 2 for those
    if (g.n() == 0) return VertexOrdering::identity(0);
    auto order = one_page_search(make_bitgraph(g, rank));
    if (!order) return std::nullopt;
    return VertexOrdering(*order);
}

std::optional<VertexOrdering> find_one_page_ordering(const WeightedGraph& g) {
    return find_one_page_ordering(g, weight_ranks(g));
}

// ---------------------------------------------------------------------------------------------
// Universal oracle

UniversalResult universal_pqn1_oracle(const WeightedGraph& g, const SolveOptions& opt) {
    UniversalResult res;
    int m = g.m();
    auto fail_with = [&](const std::vector<int>& rank, bool sampled) {
        res.verdict = UniversalResult::Verdict::no;
        res.witness_rank = rank;
        res.sampled = sampled;
        res.witness = g;
        for (int e = 0; e < m; ++e) res.witness.set_weight(e, Weight(rank[e] + 1));
    };
    auto fits = [&](const std::vector<int>& rank) {
        ++res.orders_checked;
        if (m > 64) return false;
        return one_page_search(make_bitgraph(g, rank)).has_value();
    };
    if (m <= opt.max_universal_edges) {
        std::vector<int> rank(m);
        std::iota(rank.begin(), rank.end(), 0);
        do {
            if (!fits(rank)) {
                fail_with(rank, false);
                return res;
            }
        } while (std::next_permutation(rank.begin(), rank.end()));
        res.verdict = UniversalResult::Verdict::yes;
        return res;
    }
    // Beyond the exhaustive budget only a no-witness can be certified.
    std::mt19937_64 rng(opt.seed);
    std::vector<int> rank(m);
    std::iota(rank.begin(), rank.end(), 0);
    for (int s = 0; s < opt.universal_samples; ++s) {
        std::shuffle(rank.begin(), rank.end(), rng);
        if (!fits(rank)) {
            fail_with(rank, true);
            return res;
        }
    }
    res.verdict = UniversalResult::Verdict::budget_exceeded;
    return res;
}

// ---------------------------------------------------------------------------------------------
// Automorphism orbits

std::vector<int> automorphism_orbits(const WeightedGraph& g, long long node_budget) {
    int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

    // Invariant per vertex: sorted incident weights.
    std::vector<std::vector<Weight>> sig(n);
    for (int v = 0; v < n; ++v) {
        for (auto [y, e] : g.adj(v)) sig[v].push_back(g.edge(e).w);
        std::sort(sig[v].begin(), sig[v].end());
    }
    auto weight_between = [&](int a, int b) -> std::optional<Weight> {
        if (auto e = g.find_edge(a, b)) return g.edge(*e).w;
        return std::nullopt;
    };

    auto exists_map = [&](int from, int to) -> bool {
        std::vector<int> f(n, -1), used(n, 0);
        // Assignment order: from first, then BFS order from it, then the rest.
        std::vector<int> seq{from};
        std::vector<char> in(n, 0);
        in[from] = 1;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (auto [y, e] : g.adj(seq[i]))
                if (!in[y]) in[y] = 1, seq.push_back(y);
        for (int v = 0; v < n; ++v)
            if (!in[v]) seq.push_back(v);
        long long nodes = 0;
        std::function<int(std::size_t)> go = [&](std::size_t i) -> int {  // 1 found, 0 none, -1 budget
            if (i == seq.size()) return 1;
            if (++nodes > node_budget) return -1;
            int x = seq[i];
            for (int y = 0; y < n; ++y) {
                if (used[y] || sig[y] != sig[x]) continue;
                if (i == 0 && y != to) continue;
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j) {
                    int z = seq[j];
                    ok = weight_between(x, z) == weight_between(y, f[z]);
                }
                if (!ok) continue;
                f[x] = y;
                used[y] = 1;
                int r = go(i + 1);
                if (r != 0) return r;
                f[x] = -1;
                used[y] = 0;
            }
            return 0;
        };
        return go(0) == 1;
    };

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (find(u) == find(v) || sig[u] != sig[v]) continue;
            if (exists_map(u, v)) parent[find(v)] = find(u);
        }
    std::vector<int> orbit(n);
    std::vector<int> smallest(n, n);
    for (int v = 0; v < n; ++v) smallest[find(v)] = std::min(smallest[find(v)], v);
    for (int v = 0; v < n; ++v) orbit[v] = smallest[find(v)];
    return orbit;
}

// ---------------------------------------------------------------------------------------------
// Free order: search over prefixes, assigning pages to edges as they start

namespace {

struct FreeSearch {
    const WeightedGraph& g;
    std::vector<int> rank;
    int k;
    long long budget;
    std::atomic<long long>& nodes;
    bool aborted = false;
    std::vector<int> page;   // per edge, -1 unassigned
    std::vector<int> order;
    std::unordered_set<std::string> failed;

    FreeSearch(const WeightedGraph& graph, int pages, long long b, std::atomic<long long>& counter)
        : g(graph), rank(weight_ranks(graph)), k(pages), budget(b), nodes(counter), page(graph.m(), -1) {}

    // Placed set plus the cut edges' partition into pages, with pages renamed by first use.
    std::string key(std::uint32_t placed) const {
        std::string s(reinterpret_cast<const char*>(&placed), sizeof placed);
        std::vector<int> rename(k, -1);
        int next = 0;
        for (int e = 0; e < g.m(); ++e) {
            const auto& ed = g.edge(e);
            bool a = placed >> ed.u & 1, b = placed >> ed.v & 1;
            if (a == b) continue;
            int p = page[e];
            if (rename[p] == -1) rename[p] = next++;
            s.push_back(static_cast<char>('0' + rename[p]));
        }
        return s;
    }

    bool ending_ok(std::uint32_t placed, int v) const {
        for (int p = 0; p < k; ++p) {
            int top = -1;
            for (auto [y, e] : g.adj(v))
                if ((placed >> y & 1) && page[e] == p) top = std::max(top, rank[e]);
            if (top < 0) continue;
            for (int e = 0; e < g.m(); ++e) {
                if (page[e] != p) continue;
                const auto& ed = g.edge(e);
                bool a = placed >> ed.u & 1, b = placed >> ed.v & 1;
                if (a == b || ed.u == v || ed.v == v) continue;
                if (rank[e] < top) return false;
            }
        }
        return true;
    }

    // Assign pages to the edges starting at v, then continue.
    bool assign(std::uint32_t placed, const std::vector<int>& starting, std::size_t i) {
        if (i == starting.size()) return go(placed);
        int e = starting[i];
        int used = 0;
        for (int x = 0; x < g.m(); ++x)
            if (page[x] >= 0) used = std::max(used, page[x] + 1);
        for (int p = 0; p < std::min(k, used + 1); ++p) {
            page[e] = p;
            if (assign(placed, starting, i + 1)) return true;
            if (aborted) break;
        }
        page[e] = -1;
        return false;
    }

    bool place(std::uint32_t placed, int v) {
        if (!ending_ok(placed, v)) return false;
        std::vector<int> starting;
        for (auto [y, e] : g.adj(v))
            if (!(placed >> y & 1)) starting.push_back(e);
        std::sort(starting.begin(), starting.end());
        order.push_back(v);
        if (assign(placed | (1u << v), starting, 0)) return true;
        order.pop_back();
        return false;
    }

    bool go(std::uint32_t placed) {
        if (static_cast<int>(order.size()) == g.n()) return true;
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        auto kk = key(placed);
        if (failed.count(kk)) return false;
        for (int v = 0; v < g.n() && !aborted; ++v) {
            if (placed >> v & 1) continue;
            if (place(placed, v)) return true;
        }
        if (!aborted) failed.insert(std::move(kk));
        return false;
    }
};

}  // namespace

SolveResult solve_free_order(const WeightedGraph& g, const SolveOptions& opt) {
    SolveResult res;
    // Upper bound from the fixed-order solver on the identity ordering.
    auto ub = solve_fixed_order(g, VertexOrdering::identity(g.n()), opt);
    res.k = ub.k;
    res.witness = ub.witness;
    res.lower_bound = g.m() > 0 ? 1 : 0;
    res.clique = ub.clique;
    if (g.n() > opt.max_vertices || g.n() > 31) {
        res.status = SolveStatus::budget_exceeded;
        return res;
    }
    auto orbit = automorphism_orbits(g);
    std::vector<int> reps;
    for (int v = 0; v < g.n(); ++v)
        if (orbit[v] == v) reps.push_back(v);
    int threads = std::min<int>(solver_threads(opt), static_cast<int>(reps.size()));

    std::atomic<long long> nodes{0};
    for (int k = res.lower_bound; k < res.k; ++k) {
        // One search per first vertex; the first successful representative in id order wins.
        std::vector<std::optional<std::pair<std::vector<int>, std::vector<int>>>> found(reps.size());
        std::vector<char> aborted(reps.size(), 0);
        auto run = [&](std::size_t i) {
            FreeSearch s(g, k, opt.node_budget, nodes);
            bool ok = s.place(0, reps[i]);
            if (ok) found[i] = std::make_pair(s.order, s.page);
            aborted[i] = s.aborted;
        };
        if (threads <= 1) {
            for (std::size_t i = 0; i < reps.size(); ++i) {
                run(i);
                if (found[i]) break;
            }
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next++) < reps.size();) run(i);
                });
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (!found[i]) {
                if (aborted[i]) break;  // an earlier branch is undecided
                continue;
            }
            Layout l;
            l.graph = g;
            l.ordering = VertexOrdering(found[i]->first);
            l.page = found[i]->second;
            l.k = k;
            res.k = k;
            res.witness = std::move(l);
            res.lower_bound = k;
            res.nodes = nodes;
            res.clique = color_exact(build_conflict_graph(g, res.witness->ordering),
                                     longest_inversion(g, res.witness->ordering).edges, 0)
                             .clique;
            return res;
        }
        if (std::any_of(aborted.begin(), aborted.end(), [](char c) { return c != 0; })) {
            res.status = SolveStatus::budget_exceeded;
            res.lower_bound = k;
            res.nodes = nodes;
            return res;
        }
        res.lower_bound = k + 1;
    }
    res.lower_bound = res.k;
    res.nodes = nodes;
    return res;
}

// ---------------------------------------------------------------------------------------------
// Separated orderings

SolveResult solve_separated(const WeightedGraph& g, const std::vector<int>& left, const SolveOptions& opt) {
    std::vector<char> is_left(g.n(), 0);
    for (int v : left) {
        if (v < 0 || v >= g.n() || is_left[v]) throw std::invalid_argument("solve_separated: bad left part");
        is_left[v] = 1;
    }
    for (const auto& e : g.edges())
        if (is_left[e.u] == is_left[e.v]) throw std::invalid_argument("solve_separated: edge inside one part");
    std::vector<int> right;
    for (int v = 0; v < g.n(); ++v)
        if (!is_left[v]) right.push_back(v);
    // Every left endpoint precedes every right endpoint, so only the order of the right part
    // changes the conflict graph; the left part keeps its given order.
    SolveResult best;
    best.k = -1;
    long long total = 0;
    bool exhausted = false;
    std::sort(right.begin(), right.end());
    do {
        if (total > opt.node_budget) {
            exhausted = true;
            break;
        }
        std::vector<int> order = left;
        order.insert(order.end(), right.begin(), right.end());
        auto r = solve_fixed_order(g, VertexOrdering(order), opt);
        total += r.nodes + 1;
        if (r.status != SolveStatus::optimal) exhausted = true;
        if (best.k < 0 || r.k < best.k) best = r;
        if (best.k <= (g.m() > 0 ? 1 : 0)) break;
    } while (std::next_permutation(right.begin(), right.end()));
    best.nodes = total;
    if (exhausted) {
        best.status = SolveStatus::budget_exceeded;
        best.lower_bound = std::min(best.lower_bound, g.m() > 0 ? 1 : 0);
    } else {
        best.status = SolveStatus::optimal;
        best.lower_bound = best.k;
    }
    return best;
}

}  // namespace pql
