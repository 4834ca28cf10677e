#include "pql/construct.hpp"

#include "pql/solve.hpp"
#include "pql/validate.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>
#include <tuple>

namespace pql {

std::string to_string(Family f) {
    switch (f) {
        case Family::tree: return "tree";
        case Family::caterpillar: return "caterpillar";
        case Family::cycle: return "cycle";
        case Family::legged_cycle: return "legged-cycle";
        case Family::cycle_caterpillar: return "cycle+caterpillar";
        case Family::quadrangle: return "quadrangle";
        case Family::triangle: return "triangle";
        case Family::k23: return "K23";
        case Family::k4_minus_e: return "K4-e";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (auto f : {Family::tree, Family::caterpillar, Family::cycle, Family::legged_cycle, Family::cycle_caterpillar,
                   Family::quadrangle, Family::triangle, Family::k23, Family::k4_minus_e})
        if (to_string(f) == s) return f;
    if (s == "k23") return Family::k23;
    if (s == "k4-e" || s == "k4_minus_e") return Family::k4_minus_e;
    if (s == "cycle-caterpillar" || s == "cycle_caterpillar") return Family::cycle_caterpillar;
    if (s == "legged_cycle") return Family::legged_cycle;
    return std::nullopt;
}

namespace {

using Mask = std::vector<char>;

Weight edge_weight(const WeightedGraph& g, int u, int v) {
    auto e = g.find_edge(u, v);
    if (!e) throw std::logic_error("missing edge");
    return g.edge(*e).w;
}

Mask all_of(const WeightedGraph& g) { return Mask(g.n(), 1); }

// Tree layout on the component of `root` inside `in`: every child follows its parent and
// the placed suffix after the last expanded vertex stays sorted by (weight, id).
std::vector<int> tree_order(const WeightedGraph& g, int root, const Mask& in, const TreeObserver& obs) {
    std::vector<int> order{root};
    std::vector<int> parent(g.n(), -1);
    std::vector<char> placed(g.n(), 0);
    placed[root] = 1;
    std::map<std::pair<Weight, int>, int> suffix;  // key -> vertex
    auto place_children = [&](int v) {
        for (auto [y, e] : g.adj(v)) {
            if (!in[y] || placed[y]) continue;
            placed[y] = 1;
            parent[y] = v;
            suffix.emplace(std::make_pair(g.edge(e).w, y), y);
        }
    };
    place_children(root);
    if (obs) {
        std::vector<int> s;
        for (auto& [key, v] : suffix) s.push_back(v);
        obs(root, s);
    }
    while (!suffix.empty()) {
        auto it = suffix.begin();
        int v = it->second;
        suffix.erase(it);
        order.push_back(v);
        place_children(v);
        if (obs) {
            std::vector<int> s;
            for (auto& [key, x] : suffix) s.push_back(x);
            obs(v, s);
        }
    }
    return order;
}

// Caterpillar: path p_1 .. p_k, leaves of p_i (ascending weight) right before p_i.
std::vector<int> caterpillar_order(const WeightedGraph& g, const std::vector<int>& path, const Mask& in) {
    Mask on(g.n(), 0);
    for (int p : path) on[p] = 1;
    std::vector<int> order;
    for (int p : path) {
        std::vector<std::pair<Weight, int>> leaves;
        for (auto [y, e] : g.adj(p))
            if (in[y] && !on[y]) leaves.emplace_back(g.edge(e).w, y);
        std::sort(leaves.begin(), leaves.end());
        for (auto& [w, y] : leaves) order.push_back(y);
        order.push_back(p);
    }
    return order;
}

// Cycle: two candidates, append the one whose edge to its anchor is lighter.
std::vector<int> cycle_order(const WeightedGraph& g, const std::vector<int>& cycle, int start) {
    int L = static_cast<int>(cycle.size());
    int s = static_cast<int>(std::find(cycle.begin(), cycle.end(), start) - cycle.begin());
    if (s == L) throw std::invalid_argument("start vertex not on the cycle");
    auto at = [&](int i) { return cycle[((i % L) + L) % L]; };
    // Candidate a walks forward, b backward; a is the lower-id neighbor initially.
    int ia = s + 1, ib = s - 1, anchor_a = s, anchor_b = s;
    int dir_a = 1, dir_b = -1;
    if (at(ia) > at(ib)) {
        std::swap(ia, ib);
        std::swap(dir_a, dir_b);
    }
    std::vector<int> order{start};
    while (static_cast<int>(order.size()) < L) {
        int a = at(ia), b = at(ib);
        if (a == b) {
            order.push_back(a);
            break;
        }
        Weight wa = edge_weight(g, at(anchor_a), a), wb = edge_weight(g, at(anchor_b), b);
        if (wa < wb || (wa == wb && a < b)) {
            order.push_back(a);
            anchor_a = ia;
            ia += dir_a;
        } else {
            order.push_back(b);
            anchor_b = ib;
            ib += dir_b;
        }
    }
    return order;
}

Layout one_page(const WeightedGraph& g, const std::vector<int>& order) {
    return single_page_layout(g, VertexOrdering(order));
}

void ensure_valid(const Layout& l, const char* what) {
    if (auto v = simulate_sweep(l))
        throw std::logic_error(std::string(what) + ": produced an invalid layout at vertex " + std::to_string(v->vertex));
}

std::string check_cycle_list(const WeightedGraph& g, const std::vector<int>& cycle) {
    int L = static_cast<int>(cycle.size());
    if (L < 3) return "cycle shorter than 3";
    Mask on(g.n(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.n() || on[v]) return "cycle repeats or leaves the graph";
        on[v] = 1;
    }
    for (int i = 0; i < L; ++i)
        if (!g.find_edge(cycle[i], cycle[(i + 1) % L])) return "cycle uses a non-edge";
    return {};
}

// Every vertex off the cycle lies on one of the paths or is a leaf of a path vertex; paths
// meet the cycle only in their first vertex; the graph is unicyclic.
std::string check_hanging_paths(const WeightedGraph& g, const std::vector<int>& cycle,
                                const std::vector<std::vector<int>>& paths) {
    if (auto r = check_cycle_list(g, cycle); !r.empty()) return r;
    if (g.m() != g.n() || !is_connected(g)) return "graph is not unicyclic";
    Mask on_cycle(g.n(), 0), on_path(g.n(), 0);
    for (int v : cycle) on_cycle[v] = 1;
    for (const auto& p : paths) {
        if (p.empty() || !on_cycle[p.front()]) return "path does not start on the cycle";
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= g.n()) return "path leaves the graph";
            if (i > 0 && (on_cycle[v] || on_path[v])) return "paths overlap";
            if (i > 0 && !g.find_edge(p[i - 1], v)) return "path uses a non-edge";
            on_path[v] = 1;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (on_cycle[v] || on_path[v]) continue;
        if (g.degree(v) != 1 || !on_path[g.adj(v)[0].to]) return "vertex " + std::to_string(v) + " is not a leg of a path";
    }
    return {};
}

// Vertices of the tree hanging at cycle vertex `root` (including root).
Mask hanging_part(const WeightedGraph& g, const std::vector<int>& cycle, int root) {
    Mask on_cycle(g.n(), 0), in(g.n(), 0);
    for (int v : cycle) on_cycle[v] = 1;
    std::vector<int> stack{root};
    in[root] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [y, e] : g.adj(x))
            if (!in[y] && !on_cycle[y]) {
                in[y] = 1;
                stack.push_back(y);
            }
    }
    return in;
}

// Drops trailing path vertices that are leaves, so the path ends in a vertex with a leg or the root.
std::vector<int> trim_path(const WeightedGraph& g, std::vector<int> path) {
    while (path.size() >= 2 && g.degree(path.back()) == 1) path.pop_back();
    return path;
}

}  // namespace

ConstructionReport layout_tree(const RootedTree& t, const TreeObserver& observer) {
    if (auto r = check_tree(t); !r.empty()) throw std::invalid_argument("layout_tree: " + r);
    ConstructionReport rep;
    rep.family = Family::tree;
    auto order = tree_order(t.graph, t.root, all_of(t.graph), observer);
    rep.layout = one_page(t.graph, order);
    rep.anchors["r"] = {t.root};
    rep.anchors["v*"] = {order.back()};
    ensure_valid(rep.layout, "layout_tree");
    return rep;
}

ConstructionReport layout_caterpillar(const Caterpillar& c, int r) {
    if (auto why = check_caterpillar(c); !why.empty()) throw std::invalid_argument("layout_caterpillar: " + why);
    std::vector<int> path = c.path;
    if (path.back() != r) {
        if (path.front() != r) throw std::invalid_argument("layout_caterpillar: r is not an endpoint of the underlying path");
        std::reverse(path.begin(), path.end());
    }
    ConstructionReport rep;
    rep.family = Family::caterpillar;
    rep.layout = one_page(c.graph, caterpillar_order(c.graph, path, all_of(c.graph)));
    rep.anchors["r"] = {r};
    ensure_valid(rep.layout, "layout_caterpillar");
    return rep;
}

ConstructionReport layout_cycle(const WeightedGraph& g, int v) {
    if (!is_cycle_graph(g)) throw std::invalid_argument("layout_cycle: graph is not a cycle");
    if (v < 0 || v >= g.n()) throw std::invalid_argument("layout_cycle: start vertex out of range");
    // Walk the cycle once to get its cyclic order.
    std::vector<int> cycle{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(cycle.size()) < g.n()) {
        int nxt = g.adj(cur)[0].to == prev ? g.adj(cur)[1].to : g.adj(cur)[0].to;
        prev = cur;
        cur = nxt;
        cycle.push_back(cur);
    }
    ConstructionReport rep;
    rep.family = Family::cycle;
    rep.layout = one_page(g, cycle_order(g, cycle, v));
    rep.anchors["v"] = {v};
    ensure_valid(rep.layout, "layout_cycle");
    return rep;
}

ConstructionReport layout_legged_cycle(const LeggedCycle& l) {
    if (auto why = check_legged_cycle(l); !why.empty()) throw std::invalid_argument("layout_legged_cycle: " + why);
    const auto& g = l.graph;
    const auto& cyc = l.cycle;
    int L = static_cast<int>(cyc.size());
    int star = 0;
    Weight top = edge_weight(g, cyc[0], cyc[1]);
    for (int i = 1; i < L; ++i) {
        Weight w = edge_weight(g, cyc[i], cyc[(i + 1) % L]);
        if (w > top) top = w, star = i;
    }
    int x = cyc[star], y = cyc[(star + 1) % L];
    // Legs heavier than e* move to the right end.
    Mask on_cycle(g.n(), 0), in(g.n(), 1);
    for (int v : cyc) on_cycle[v] = 1;
    std::vector<std::pair<Weight, int>> heavy;
    for (int v = 0; v < g.n(); ++v) {
        if (on_cycle[v]) continue;
        const auto& e = g.edge(g.adj(v)[0].edge);
        if (e.w > top) {
            heavy.emplace_back(e.w, v);
            in[v] = 0;
        }
    }
    std::sort(heavy.begin(), heavy.end());
    // Residual caterpillar: path x, cyc[star-1], ..., y with r = y rightmost.
    std::vector<int> path;
    for (int i = 0; i < L; ++i) path.push_back(cyc[((star - i) % L + L) % L]);
    auto order = caterpillar_order(g, path, in);
    for (auto& [w, v] : heavy) order.push_back(v);
    ConstructionReport rep;
    rep.family = Family::legged_cycle;
    rep.layout = one_page(g, order);
    rep.anchors["e*"] = {x, y};
    rep.anchors["r"] = {y};
    ensure_valid(rep.layout, "layout_legged_cycle");
    return rep;
}

ConstructionReport layout_cycle_plus_caterpillar(const CycleWithCaterpillar& in) {
    const auto& g = in.graph;
    if (in.path.empty()) throw std::invalid_argument("layout_cycle_plus_caterpillar: empty path");
    std::vector<int> rooted(in.path.rbegin(), in.path.rend());  // starts at r
    if (auto why = check_hanging_paths(g, in.cycle, {rooted}); !why.empty())
        throw std::invalid_argument("layout_cycle_plus_caterpillar: " + why);
    int r = in.path.back();
    auto part = hanging_part(g, in.cycle, r);
    auto order = caterpillar_order(g, in.path, part);
    auto cyc = cycle_order(g, in.cycle, r);
    order.insert(order.end(), cyc.begin() + 1, cyc.end());
    ConstructionReport rep;
    rep.family = Family::cycle_caterpillar;
    rep.layout = one_page(g, order);
    rep.anchors["r"] = {r};
    ensure_valid(rep.layout, "layout_cycle_plus_caterpillar");
    return rep;
}

ConstructionReport layout_quadrangle(const QuadrangleInstance& q) {
    const auto& g = q.graph;
    if (q.cycle.size() != 4) throw std::invalid_argument("layout_quadrangle: cycle must have 4 vertices");
    if (q.path_a.empty() || q.path_c.empty() || q.path_a.front() != q.cycle[0] || q.path_c.front() != q.cycle[2])
        throw std::invalid_argument("layout_quadrangle: paths must start at cycle[0] and cycle[2]");
    if (auto why = check_hanging_paths(g, q.cycle, {q.path_a, q.path_c}); !why.empty())
        throw std::invalid_argument("layout_quadrangle: " + why);

    // Relabel so that ad is a heaviest cycle edge with a carrying a caterpillar.
    const auto& cy = q.cycle;
    int best = 0;
    Weight top = edge_weight(g, cy[0], cy[1]);
    for (int i = 1; i < 4; ++i) {
        Weight w = edge_weight(g, cy[i], cy[(i + 1) % 4]);
        if (w > top) top = w, best = i;
    }
    // Edge (cy[best], cy[best+1]): its even-index endpoint is a caterpillar vertex.
    int i0 = best, i1 = (best + 1) % 4;
    int ia = i0 % 2 == 0 ? i0 : i1;
    int id = ia == i0 ? i1 : i0;
    int a = cy[ia], d = cy[id], c = cy[(ia + 2) % 4], b = cy[(id + 2) % 4];
    std::vector<int> path_a = trim_path(g, ia == 0 ? q.path_a : q.path_c);
    std::vector<int> path_c = trim_path(g, ia == 0 ? q.path_c : q.path_a);
    Weight w_ad = top;

    auto part_a = hanging_part(g, cy, a);
    auto part_c = hanging_part(g, cy, c);
    // C_c' drops the legs of c (those not continuing the path).
    int c_next = path_c.size() >= 2 ? path_c[1] : -1;
    std::vector<std::pair<Weight, int>> legs_c;
    for (auto [y, e] : g.adj(c))
        if (part_c[y] && y != c_next) {
            legs_c.emplace_back(g.edge(e).w, y);
            part_c[y] = 0;
        }
    std::sort(legs_c.begin(), legs_c.end());

    bool case_one = c_next == -1 || edge_weight(g, c, c_next) <= w_ad;
    std::vector<int> left, right;  // left part ends with its root, right part starts with its root
    std::vector<int> parent(g.n(), -1);
    if (case_one) {
        std::vector<int> p(path_c.rbegin(), path_c.rend());
        left = caterpillar_order(g, p, part_c);
        right = tree_order(g, a, part_a, {});
    } else {
        std::vector<int> p(path_a.rbegin(), path_a.rend());
        left = caterpillar_order(g, p, part_a);
        right = tree_order(g, c, part_c, {});
    }
    left.pop_back();
    right.erase(right.begin());
    // Parent edge weights of the right part, in spine order.
    int right_root = case_one ? a : c;
    const Mask& right_part = case_one ? part_a : part_c;
    std::vector<Weight> parent_w;
    {
        Mask seen(g.n(), 0);
        seen[right_root] = 1;
        std::vector<int> stack{right_root};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, e] : g.adj(x))
                if (right_part[y] && !seen[y]) {
                    seen[y] = 1;
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
        for (int v : right) parent_w.push_back(edge_weight(g, v, parent[v]));
    }

    std::vector<int> mid = case_one ? std::vector<int>{d, c, b, a} : std::vector<int>{a, b, c, d};
    // Legs of c: light ones right before c, heavy ones before the first right-part vertex
    // whose parent edge is heavier (two pointers over the prefix maximum).
    std::vector<int> light;
    std::vector<std::vector<int>> before(right.size() + 1);
    std::size_t ptr = 0;
    for (auto& [w, leg] : legs_c) {
        if (w <= w_ad) {
            light.push_back(leg);
            continue;
        }
        while (ptr < right.size() && !(parent_w[ptr] > w)) ++ptr;
        before[ptr].push_back(leg);
    }

    std::vector<int> order = left;
    for (int v : mid) {
        if (v == c) order.insert(order.end(), light.begin(), light.end());
        order.push_back(v);
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
        order.insert(order.end(), before[i].begin(), before[i].end());
        order.push_back(right[i]);
    }
    order.insert(order.end(), before[right.size()].begin(), before[right.size()].end());

    ConstructionReport rep;
    rep.family = Family::quadrangle;
    rep.layout = one_page(g, order);
    rep.anchors["a"] = {a};
    rep.anchors["b"] = {b};
    rep.anchors["c"] = {c};
    rep.anchors["d"] = {d};
    if (c_next != -1) rep.anchors["e_c"] = {c, c_next};
    rep.anchors["case"] = {case_one ? 1 : 2};
    ensure_valid(rep.layout, "layout_quadrangle");
    return rep;
}

TransferResult transfer_by_contraction(const Layout& layout, int e0) {
    layout.check();
    const auto& g = layout.graph;
    if (layout.k != 1) throw std::invalid_argument("transfer_by_contraction: layout must use one page");
    if (e0 < 0 || e0 >= g.m()) throw std::invalid_argument("transfer_by_contraction: edge out of range");
    for (int e = 0; e < g.m(); ++e)
        if (e != e0 && !(g.edge(e0).w < g.edge(e).w))
            throw std::invalid_argument("transfer_by_contraction: contracted edge is not strictly the lightest");
    if (simulate_sweep(layout)) throw std::invalid_argument("transfer_by_contraction: input layout is invalid");

    auto [u, v] = layout.span(e0);
    TransferResult out;
    out.contraction = contract_edge(g, u, v);
    const auto& h = out.contraction.graph;
    const auto& map = out.contraction.old_to_new;
    int x = out.contraction.merged;
    int pu = layout.ordering.pos(u), pv = layout.ordering.pos(v);
    const auto& ord = layout.ordering.order();

    auto attempt = [&](const std::vector<int>& order) -> bool {
        Layout l = single_page_layout(h, VertexOrdering(order));
        if (simulate_sweep(l)) return false;
        out.layout = std::move(l);
        return true;
    };

    // Sorted-middle placement: L, x, neighbors of x in M by edge weight, rest of M, R.
    {
        std::vector<int> order;
        for (int i = 0; i < pu; ++i) order.push_back(map[ord[i]]);
        order.push_back(x);
        std::vector<std::tuple<Weight, int>> nbr;
        std::vector<int> rest;
        for (int i = pu + 1; i < pv; ++i) {
            int m = map[ord[i]];
            if (auto e = h.find_edge(x, m))
                nbr.emplace_back(h.edge(*e).w, m);
            else
                rest.push_back(m);
        }
        std::sort(nbr.begin(), nbr.end());
        for (auto& [w, m] : nbr) order.push_back(m);
        order.insert(order.end(), rest.begin(), rest.end());
        for (int i = pv + 1; i < g.n(); ++i) order.push_back(map[ord[i]]);
        if (attempt(order)) {
            out.method = "sorted-middle";
            return out;
        }
    }
    // Merged vertex at the position of v.
    {
        std::vector<int> order;
        for (int i = 0; i < g.n(); ++i)
            if (i != pu) order.push_back(map[ord[i]]);
        if (attempt(order)) {
            out.method = "merge-right";
            return out;
        }
    }
    if (h.n() > 20) throw std::runtime_error("transfer_by_contraction: both placements failed and the graph is too large for exact search");
    auto exact = find_one_page_ordering(h);
    if (!exact) throw std::runtime_error("transfer_by_contraction: contracted graph has no one-page layout");
    out.layout = single_page_layout(h, *exact);
    out.method = "exact-search";
    return out;
}

namespace {

// Rebuilds a layout of `target` from a layout of a graph with the same vertex ids and edges.
Layout same_ids_layout(const WeightedGraph& target, const Layout& l) {
    return single_page_layout(target, l.ordering);
}

}  // namespace

ConstructionReport layout_triangle_case(const TriangleInstance& t) {
    const auto& g = t.graph;
    if (t.cycle.size() != 3) throw std::invalid_argument("layout_triangle_case: cycle must have 3 vertices");
    if (t.path_a.empty() || t.path_b.empty() || t.path_a.front() != t.cycle[0] || t.path_b.front() != t.cycle[1])
        throw std::invalid_argument("layout_triangle_case: paths must start at cycle[0] and cycle[1]");
    if (auto why = check_hanging_paths(g, t.cycle, {t.path_a, t.path_b}); !why.empty())
        throw std::invalid_argument("layout_triangle_case: " + why);
    int a = t.cycle[0], b = t.cycle[1], c = t.cycle[2];
    Weight lo = g.edge(0).w;
    for (const auto& e : g.edges()) lo = std::min(lo, e.w);
    Weight W = lo - Weight(1);

    // Split b: the new vertex z takes the edge to a, and z-b gets weight W.
    int z = g.n();
    WeightedGraph big(g.n() + 1);
    if (!g.labels().empty()) {
        auto labels = g.labels();
        labels.push_back(g.label(b) + "'");
        big.set_labels(labels);
    }
    for (const auto& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a))
            big.add_edge(a, z, e.w);
        else
            big.add_edge(e.u, e.v, e.w);
    }
    int e0 = big.add_edge(z, b, W);
    QuadrangleInstance q{big, {a, z, b, c}, t.path_a, t.path_b};
    auto quad = layout_quadrangle(q);
    auto tr = transfer_by_contraction(quad.layout, e0);
    // Contracting z into b keeps every id (z is the largest), so only edge order may differ.
    ConstructionReport rep;
    rep.family = Family::triangle;
    rep.layout = same_ids_layout(g, tr.layout);
    rep.fallback = tr.method == "exact-search";
    rep.anchors["a"] = {a};
    rep.anchors["b"] = {b};
    rep.anchors["c"] = {c};
    ensure_valid(rep.layout, "layout_triangle_case");
    return rep;
}

ConstructionReport layout_k23(const WeightedGraph& g) {
    if (g.n() != 5 || g.m() != 6) throw std::invalid_argument("layout_k23: graph is not K2,3");
    std::vector<int> deg3, deg2;
    for (int v = 0; v < 5; ++v) {
        if (g.degree(v) == 3) deg3.push_back(v);
        else if (g.degree(v) == 2) deg2.push_back(v);
    }
    if (deg3.size() != 2 || deg2.size() != 3 || g.find_edge(deg3[0], deg3[1]))
        throw std::invalid_argument("layout_k23: graph is not K2,3");
    for (int v : deg2)
        if (!g.find_edge(v, deg3[0]) || !g.find_edge(v, deg3[1])) throw std::invalid_argument("layout_k23: graph is not K2,3");

    std::vector<int> by_w(6);
    for (int i = 0; i < 6; ++i) by_w[i] = i;
    std::stable_sort(by_w.begin(), by_w.end(), [&](int x, int y) { return g.edge(x).w > g.edge(y).w; });
    auto split = [&](int e) {  // (degree-3 end, degree-2 end)
        const auto& ed = g.edge(e);
        return g.degree(ed.u) == 3 ? std::make_pair(ed.u, ed.v) : std::make_pair(ed.v, ed.u);
    };
    auto [p1, q1] = split(by_w[0]);
    auto [p2, q2] = split(by_w[1]);
    auto third = [&](int x, int y) {
        for (int v : deg2)
            if (v != x && v != y) return v;
        return -1;
    };
    auto other_u = [&](int x) { return x == deg3[0] ? deg3[1] : deg3[0]; };
    std::vector<int> order;
    int which = 0;
    if (p1 != p2 && q1 != q2) {
        // Case 1: e1 = u1v1, e2 = u2v3.
        int u1 = p1, v1 = q1, u2 = p2, v3 = q2, v2 = third(v1, v3);
        order = {v3, u1, v2, u2, v1};
        which = 1;
    } else if (q1 == q2) {
        // Case 2: e1 = u1v3, e2 = u2v3.
        int u1 = p1, u2 = p2, v3 = q1;
        auto [p3, q3] = split(by_w[2]);
        int v1 = q3, v2 = third(v1, v3);
        if (p3 == u1) {
            order = {v1, u2, v2, u1, v3};
            which = 21;
        } else {
            order = {v1, u1, v2, u2, v3};
            which = 22;
        }
    } else {
        // Case 3: e1 = u1v3, e2 = u1v1.
        int u1 = p1, v3 = q1, v1 = q2, u2 = other_u(u1), v2 = third(v1, v3);
        order = {v3, v1, u2, v2, u1};
        which = 3;
    }
    ConstructionReport rep;
    rep.family = Family::k23;
    rep.layout = one_page(g, order);
    rep.anchors["e1"] = {g.edge(by_w[0]).u, g.edge(by_w[0]).v};
    rep.anchors["e2"] = {g.edge(by_w[1]).u, g.edge(by_w[1]).v};
    rep.anchors["case"] = {which};
    ensure_valid(rep.layout, "layout_k23");
    return rep;
}

ConstructionReport layout_k4_minus_e(const WeightedGraph& g) {
    if (g.n() != 4 || g.m() != 5) throw std::invalid_argument("layout_k4_minus_e: graph is not K4-e");
    std::vector<int> deg3, deg2;
    for (int v = 0; v < 4; ++v) {
        if (g.degree(v) == 3) deg3.push_back(v);
        else if (g.degree(v) == 2) deg2.push_back(v);
    }
    if (deg3.size() != 2 || deg2.size() != 2) throw std::invalid_argument("layout_k4_minus_e: graph is not K4-e");
    int p = deg3[0], q = deg3[1], r = deg2[0], s = deg2[1];
    Weight lo = g.edge(0).w;
    for (const auto& e : g.edges()) lo = std::min(lo, e.w);
    Weight W = lo - Weight(1);
    // K2,3 with u1 = p, u2 = q, v2 = r, v3 = s and a new v1 = z; contracting pz gives back K4-e.
    int z = 4;
    WeightedGraph big(5);
    for (const auto& e : g.edges()) {
        bool pq = (e.u == p && e.v == q) || (e.u == q && e.v == p);
        if (pq)
            big.add_edge(q, z, e.w);
        else
            big.add_edge(e.u, e.v, e.w);
    }
    int e0 = big.add_edge(p, z, W);
    auto k23 = layout_k23(big);
    auto tr = transfer_by_contraction(k23.layout, e0);
    ConstructionReport rep;
    rep.family = Family::k4_minus_e;
    rep.layout = same_ids_layout(g, tr.layout);
    rep.fallback = tr.method == "exact-search";
    rep.anchors["p"] = {p};
    rep.anchors["q"] = {q};
    rep.anchors["missing"] = {r, s};
    ensure_valid(rep.layout, "layout_k4_minus_e");
    return rep;
}

}  // namespace pql
