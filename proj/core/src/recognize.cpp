#include "pql/recognize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pql {

namespace {

using Shape = std::vector<std::pair<char, char>>;

const std::vector<Shape>& shapes() {
    static const std::vector<Shape> s = {
        {{'a', 'b'}, {'a', 'c'}, {'a', 'd'}, {'b', 'c'}, {'b', 'd'}, {'c', 'd'}},
        {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}, {'c', 'd'}, {'c', 'e'}, {'d', 'e'}},
        {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'e'}, {'e', 'a'}, {'b', 'e'}},
        {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}, {'a', 'd'}, {'d', 'e'}, {'a', 'f'}, {'f', 'g'}},
        {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}, {'a', 'd'}, {'d', 'e'}, {'b', 'f'}, {'c', 'g'}},
        {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'a'}, {'a', 'c'}, {'d', 'e'}},
        {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'a'}, {'a', 'c'}, {'a', 'e'}},
        {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'a'}, {'d', 'f'}, {'f', 'g'}, {'a', 'e'}},
    };
    return s;
}

int shape_size(const Shape& s) {
    char top = 'a';
    for (auto [x, y] : s) top = std::max({top, x, y});
    return top - 'a' + 1;
}

}  // namespace

WeightedGraph forbidden_minor_shape(int index) {
    if (index < 1 || index > 8) throw std::invalid_argument("forbidden minor index must be in 1..8");
    const auto& s = shapes()[index - 1];
    int n = shape_size(s);
    WeightedGraph g(n);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    g.set_labels(labels);
    for (auto [x, y] : s) g.add_edge(x - 'a', y - 'a', Weight(1));
    return g;
}

std::string check_minor_model(const WeightedGraph& g, const MinorModel& model) {
    if (model.index < 1 || model.index > 8) return "index out of range";
    auto pattern = forbidden_minor_shape(model.index);
    if (static_cast<int>(model.branch.size()) != pattern.n()) return "wrong number of branch sets";
    if (static_cast<int>(model.edge_map.size()) != pattern.m()) return "wrong number of mapped edges";
    std::vector<int> owner(g.n(), -1);
    for (int i = 0; i < pattern.n(); ++i) {
        const auto& b = model.branch[i];
        if (b.empty()) return "empty branch set";
        for (int v : b) {
            if (v < 0 || v >= g.n()) return "branch vertex out of range";
            if (owner[v] != -1) return "branch sets overlap";
            owner[v] = i;
        }
        std::vector<int> stack{b[0]}, seen{b[0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, e] : g.adj(x))
                if (owner[y] == i && std::find(seen.begin(), seen.end(), y) == seen.end()) {
                    seen.push_back(y);
                    stack.push_back(y);
                }
        }
        if (seen.size() != b.size()) return "branch set " + pattern.label(i) + " is not connected";
    }
    for (int e = 0; e < pattern.m(); ++e) {
        auto [u, v] = model.edge_map[e];
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.find_edge(u, v)) return "mapped edge is not an edge of G";
        int p = pattern.edge(e).u, q = pattern.edge(e).v;
        if (!((owner[u] == p && owner[v] == q) || (owner[u] == q && owner[v] == p)))
            return "mapped edge does not join its branch sets";
    }
    return {};
}

namespace {

MinorModel make_model(const WeightedGraph& g, int index, std::map<char, std::vector<int>> sets) {
    auto pattern = forbidden_minor_shape(index);
    MinorModel m;
    m.index = index;
    std::vector<int> owner(g.n(), -1);
    for (int i = 0; i < pattern.n(); ++i) {
        auto& b = sets[static_cast<char>('a' + i)];
        std::sort(b.begin(), b.end());
        for (int v : b) owner[v] = i;
        m.branch.push_back(b);
    }
    for (const auto& pe : pattern.edges()) {
        std::pair<int, int> found{-1, -1};
        for (int v : m.branch[pe.u]) {
            for (auto [y, e] : g.adj(v))
                if (owner[y] == pe.v) {
                    found = {std::min(v, y), std::max(v, y)};
                    break;
                }
            if (found.first != -1) break;
        }
        m.edge_map.push_back(found);
    }
    if (auto why = check_minor_model(g, m); !why.empty())
        throw std::logic_error("internal: constructed F" + std::to_string(index) + " model is invalid: " + why);
    return m;
}

struct Outcome {
    std::optional<ComponentPlan> plan;
    std::optional<MinorModel> minor;
};

// 2-core membership inside the component.
std::vector<char> two_core(const WeightedGraph& g, const std::vector<int>& comp) {
    std::vector<char> alive(g.n(), 0);
    std::vector<int> deg(g.n(), 0), queue;
    for (int v : comp) {
        alive[v] = 1;
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (auto [y, e] : g.adj(v))
            if (alive[y] && --deg[y] <= 1) queue.push_back(y);
    }
    return alive;
}

// Cycle through the core starting at `start`: walk until a vertex repeats.
std::vector<int> core_cycle(const WeightedGraph& g, const std::vector<char>& core, int start) {
    std::vector<int> walk{start};
    std::map<int, int> at{{start, 0}};
    int prev = -1;
    while (true) {
        int x = walk.back(), next = -1;
        for (auto [y, e] : g.adj(x))
            if (core[y] && y != prev) {
                next = y;
                break;
            }
        if (auto it = at.find(next); it != at.end()) return {walk.begin() + it->second, walk.end()};
        at[next] = static_cast<int>(walk.size());
        prev = x;
        walk.push_back(next);
    }
}

struct Hanging {
    enum Kind { trivial, star, caterpillar, complex } kind = trivial;
    std::vector<int> path;       // w .. last non-leaf (caterpillar); {w} for stars
    int v = -1, c1 = -1, c2 = -1, g1 = -1, g2 = -1;  // complex witness
    std::vector<int> to_v;       // w .. v
    int child = -1;              // some child of w
};

Hanging classify(const WeightedGraph& g, const std::vector<char>& on_cycle, int w) {
    Hanging h;
    std::map<int, int> parent{{w, -1}};
    std::map<int, std::vector<int>> children;
    std::vector<int> order{w};
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        for (auto [y, e] : g.adj(x)) {
            if (on_cycle[y] || parent.count(y)) continue;
            parent[y] = x;
            children[x].push_back(y);
            order.push_back(y);
        }
    }
    if (children[w].empty()) return h;
    h.child = children[w][0];
    for (int x : order) {
        std::vector<int> inner;
        for (int c : children[x])
            if (!children[c].empty()) inner.push_back(c);
        if (inner.size() >= 2) {
            h.kind = Hanging::complex;
            h.v = x;
            h.c1 = inner[0];
            h.c2 = inner[1];
            h.g1 = children[h.c1][0];
            h.g2 = children[h.c2][0];
            for (int y = x; y != -1; y = parent[y]) h.to_v.push_back(y);
            std::reverse(h.to_v.begin(), h.to_v.end());
            return h;
        }
    }
    h.path = {w};
    while (true) {
        int next = -1;
        for (int c : children[h.path.back()])
            if (!children[c].empty()) next = c;
        if (next == -1) break;
        h.path.push_back(next);
    }
    h.kind = h.path.size() == 1 ? Hanging::star : Hanging::caterpillar;
    return h;
}

Outcome unicyclic(const WeightedGraph& g, const std::vector<int>& comp) {
    auto core = two_core(g, comp);
    int start = -1;
    for (int v : comp)
        if (core[v]) {
            start = v;
            break;
        }
    auto cyc = core_cycle(g, core, start);
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    int L = static_cast<int>(cyc.size());
    std::vector<char> on_cycle(g.n(), 0);
    for (int v : cyc) on_cycle[v] = 1;

    std::vector<Hanging> hang;
    for (int w : cyc) hang.push_back(classify(g, on_cycle, w));

    for (int i = 0; i < L; ++i) {
        const auto& h = hang[i];
        if (h.kind != Hanging::complex) continue;
        std::vector<int> rest;
        for (int s = 2; s < L; ++s) rest.push_back(cyc[(i + s) % L]);
        return {std::nullopt, make_model(g, 4, {{'a', h.to_v}, {'b', {cyc[(i + 1) % L]}}, {'c', rest},
                                              {'d', {h.c1}}, {'e', {h.g1}}, {'f', {h.c2}}, {'g', {h.g2}}})};
    }

    int deep = -1;
    std::vector<int> nontrivial;
    for (int i = 0; i < L; ++i) {
        if (hang[i].kind == Hanging::caterpillar && deep == -1) deep = i;
        if (hang[i].kind != Hanging::trivial) nontrivial.push_back(i);
    }
    ComponentPlan plan;
    plan.vertices = comp;
    if (deep == -1) {
        plan.family = nontrivial.empty() ? Family::cycle : Family::legged_cycle;
        plan.cycle = cyc;
        return {plan, std::nullopt};
    }
    // Rotate so that the caterpillar root sits at position 0.
    std::vector<int> c(L);
    std::vector<Hanging> hc(L);
    for (int i = 0; i < L; ++i) {
        c[i] = cyc[(deep + i) % L];
        hc[i] = hang[(deep + i) % L];
    }
    std::vector<int> others;
    for (int i = 1; i < L; ++i)
        if (hc[i].kind != Hanging::trivial) others.push_back(i);
    const auto& K = hc[0];
    int x = K.path[1];
    int xchild = -1;
    for (auto [y, e] : g.adj(x))
        if (y != c[0] && !on_cycle[y]) {
            xchild = y;
            break;
        }

    if (others.empty()) {
        plan.family = Family::cycle_caterpillar;
        plan.cycle = c;
        plan.path = K.path;
        return {plan, std::nullopt};
    }
    if (others.size() >= 2) {
        int p1 = others[0], p2 = others[1];
        std::vector<int> A(c.begin(), c.begin() + p1), B(c.begin() + p1, c.begin() + p2), C(c.begin() + p2, c.end());
        return {std::nullopt, make_model(g, 5, {{'a', A}, {'b', B}, {'c', C}, {'d', {x}}, {'e', {xchild}},
                                              {'f', {hc[p1].child}}, {'g', {hc[p2].child}}})};
    }
    int j = others[0];
    if (j >= 3 || L - j >= 3) {
        if (j < 3) {
            // Walk the other way round.
            std::vector<int> r(L);
            for (int i = 0; i < L; ++i) r[i] = c[(L - i) % L];
            c = r;
            j = L - j;
        }
        std::vector<int> b(c.begin() + 2, c.begin() + j), a(c.begin() + j, c.end());
        return {std::nullopt, make_model(g, 8, {{'a', a}, {'b', b}, {'c', {c[1]}}, {'d', {c[0]}}, {'e', {hc[others[0]].child}},
                                              {'f', {x}}, {'g', {xchild}}})};
    }
    const auto& K2 = hc[j];
    if (L == 3) {
        plan.family = Family::triangle;
        plan.cycle = {c[0], c[j], c[3 - j]};
    } else {
        plan.family = Family::quadrangle;
        plan.cycle = c;
    }
    plan.path = K.path;
    plan.path2 = K2.path;
    return {plan, std::nullopt};
}

Outcome multicyclic(const WeightedGraph& g, const std::vector<int>& comp) {
    auto core = two_core(g, comp);
    int start = -1;
    for (int v : comp)
        if (core[v]) {
            start = v;
            break;
        }
    auto c1 = core_cycle(g, core, start);
    int L = static_cast<int>(c1.size());
    std::map<int, int> pos;
    for (int i = 0; i < L; ++i) pos[c1[i]] = i;
    auto arc = [&](int from, int to, int dir) {  // positions, inclusive
        std::vector<int> out;
        for (int i = from;; i = ((i + dir) % L + L) % L) {
            out.push_back(c1[i]);
            if (i == to) break;
        }
        return out;
    };

    std::vector<std::vector<int>> theta;
    for (int i = 0; i < L && theta.empty(); ++i) {
        int s = c1[i];
        for (auto [y, e] : g.adj(s)) {
            if (!core[y]) continue;
            if (pos.count(y)) {
                int j = pos[y];
                if ((j - i + L) % L == 1 || (i - j + L) % L == 1) continue;
                theta = {{s, y}, arc(i, j, 1), arc(i, j, -1)};
                break;
            }
            // Walk along fresh core vertices.
            std::vector<int> walk{s, y};
            std::map<int, int> at{{y, 1}};
            while (true) {
                int cur = walk.back(), prev = walk[walk.size() - 2], z = -1;
                for (auto [t, f] : g.adj(cur))
                    if (core[t] && t != prev) {
                        z = t;
                        break;
                    }
                if (z == s) {
                    std::vector<int> rest1(c1.begin(), c1.end());
                    std::rotate(rest1.begin(), rest1.begin() + i, rest1.end());
                    return {std::nullopt,
                            make_model(g, 2, {{'a', {rest1[1]}}, {'b', {rest1.begin() + 2, rest1.end()}}, {'c', {s}},
                                              {'d', {walk[1]}}, {'e', {walk.begin() + 2, walk.end()}}})};
                }
                if (pos.count(z)) {
                    auto p = walk;
                    p.push_back(z);
                    theta = {p, arc(i, pos[z], 1), arc(i, pos[z], -1)};
                    break;
                }
                if (auto it = at.find(z); it != at.end()) {
                    int j = it->second;
                    std::vector<int> rest1(c1.begin(), c1.end());
                    std::rotate(rest1.begin(), rest1.begin() + i, rest1.end());
                    std::vector<int> cset(walk.begin(), walk.begin() + j + 1);
                    return {std::nullopt,
                            make_model(g, 2, {{'a', {rest1[1]}}, {'b', {rest1.begin() + 2, rest1.end()}}, {'c', cset},
                                              {'d', {walk[j + 1]}}, {'e', {walk.begin() + j + 2, walk.end()}}})};
                }
                at[z] = static_cast<int>(walk.size());
                walk.push_back(z);
            }
            break;
        }
    }
    if (theta.empty()) throw std::logic_error("internal: no second cycle found");

    std::sort(theta.begin(), theta.end(), [](const auto& p, const auto& q) { return p.size() < q.size(); });
    int bx = theta[0].front(), by = theta[0].back();
    if (theta[2].size() >= 4) {
        // F3: the three branch paths contracted to lengths 1, 2, 3.
        const auto& p1 = theta[0];
        const auto& p2 = theta[1];
        const auto& p3 = theta[2];
        std::vector<int> b(p1.begin(), p1.end() - 1);
        std::vector<int> a(p2.begin() + 1, p2.end() - 1);
        std::vector<int> d(p3.begin() + 2, p3.end() - 1);
        return {std::nullopt, make_model(g, 3, {{'a', a}, {'b', b}, {'c', {p3[1]}}, {'d', d}, {'e', {by}}})};
    }
    bool k4e = theta[0].size() == 2;
    std::vector<int> mids;
    for (const auto& p : theta)
        if (p.size() == 3) mids.push_back(p[1]);
    std::vector<int> T{bx, by};
    T.insert(T.end(), mids.begin(), mids.end());
    std::vector<char> inT(g.n(), 0);
    for (int v : T) inT[v] = 1;

    auto other_mid = [&](int m) {
        for (int q : mids)
            if (q != m) return q;
        return -1;
    };
    // Pendant edge leaving the theta.
    for (int v : T)
        for (auto [z, e] : g.adj(v)) {
            if (inT[z]) continue;
            bool branch = v == bx || v == by;
            int o = v == bx ? by : bx;
            if (k4e) {
                if (branch)
                    return {std::nullopt, make_model(g, 7, {{'a', {v}}, {'b', {mids[0]}}, {'c', {o}}, {'d', {mids[1]}}, {'e', {z}}})};
                return {std::nullopt, make_model(g, 6, {{'a', {bx}}, {'b', {other_mid(v)}}, {'c', {by}}, {'d', {v}}, {'e', {z}}})};
            }
            if (branch)
                return {std::nullopt,
                        make_model(g, 7, {{'a', {v}}, {'b', {mids[0]}}, {'c', {o, mids[2]}}, {'d', {mids[1]}}, {'e', {z}}})};
            std::vector<int> rest;
            for (int q : mids)
                if (q != v) rest.push_back(q);
            return {std::nullopt,
                    make_model(g, 6, {{'a', {bx, rest[1]}}, {'b', {rest[0]}}, {'c', {by}}, {'d', {v}}, {'e', {z}}})};
        }
    // Chords inside the theta.
    if (k4e) {
        if (g.find_edge(mids[0], mids[1]))
            return {std::nullopt, make_model(g, 1, {{'a', {bx}}, {'b', {by}}, {'c', {mids[0]}}, {'d', {mids[1]}}})};
    } else {
        if (g.find_edge(bx, by))
            return {std::nullopt,
                    make_model(g, 7, {{'a', {bx}}, {'b', {mids[0]}}, {'c', {by}}, {'d', {mids[1]}}, {'e', {mids[2]}}})};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.find_edge(mids[i], mids[j])) {
                    int k = 3 - i - j;
                    return {std::nullopt, make_model(g, 1, {{'a', {bx, mids[k]}}, {'b', {by}}, {'c', {mids[i]}},
                                                          {'d', {mids[j]}}})};
                }
    }
    ComponentPlan plan;
    plan.vertices = comp;
    plan.family = k4e ? Family::k4_minus_e : Family::k23;
    return {plan, std::nullopt};
}

}  // namespace

RecognitionVerdict recognize_pqn1(const WeightedGraph& g) {
    RecognitionVerdict verdict;
    int count = 0;
    auto comp_id = components(g, &count);
    std::vector<std::vector<int>> comps(count);
    for (int v = 0; v < g.n(); ++v) comps[comp_id[v]].push_back(v);
    for (const auto& comp : comps) {
        long long degsum = 0;
        for (int v : comp) degsum += g.degree(v);
        long long m = degsum / 2, n = static_cast<long long>(comp.size());
        Outcome out;
        if (m == n - 1) {
            ComponentPlan plan;
            plan.vertices = comp;
            plan.family = Family::tree;
            plan.root = comp[0];
            out.plan = plan;
        } else if (m == n) {
            out = unicyclic(g, comp);
        } else {
            out = multicyclic(g, comp);
        }
        if (out.minor) {
            verdict.yes = false;
            verdict.plans.clear();
            verdict.minor = out.minor;
            verdict.component = comp[0];
            return verdict;
        }
        verdict.plans.push_back(*out.plan);
    }
    return verdict;
}

MinorModel extract_minor_model(const WeightedGraph& g, int index) {
    auto v = recognize_pqn1(g);
    if (v.yes) throw std::invalid_argument("extract_minor_model: graph has priority queue number 1");
    if (v.minor->index != index)
        throw std::invalid_argument("extract_minor_model: recognition found F" + std::to_string(v.minor->index) +
                                    ", not F" + std::to_string(index));
    return *v.minor;
}

PlannedLayout layout_from_verdict(const WeightedGraph& g, const RecognitionVerdict& verdict) {
    if (!verdict.yes) throw std::invalid_argument("layout_from_verdict: verdict is no");
    PlannedLayout out;
    std::vector<int> order;
    for (const auto& plan : verdict.plans) {
        auto local = induced_subgraph(g, plan.vertices);
        std::map<int, int> to_local;
        for (int i = 0; i < static_cast<int>(plan.vertices.size()); ++i) to_local[plan.vertices[i]] = i;
        auto map_all = [&](const std::vector<int>& xs) {
            std::vector<int> r;
            for (int x : xs) r.push_back(to_local.at(x));
            return r;
        };
        ConstructionReport rep;
        switch (plan.family) {
            case Family::tree:
            case Family::caterpillar: rep = layout_tree(RootedTree{local, to_local.at(plan.root)}); break;
            case Family::cycle: rep = layout_cycle(local, to_local.at(plan.cycle[0])); break;
            case Family::legged_cycle: rep = layout_legged_cycle(LeggedCycle{local, map_all(plan.cycle)}); break;
            case Family::cycle_caterpillar: {
                auto p = map_all(plan.path);
                std::reverse(p.begin(), p.end());
                rep = layout_cycle_plus_caterpillar(CycleWithCaterpillar{local, map_all(plan.cycle), p});
                break;
            }
            case Family::quadrangle:
                rep = layout_quadrangle(QuadrangleInstance{local, map_all(plan.cycle), map_all(plan.path), map_all(plan.path2)});
                break;
            case Family::triangle:
                rep = layout_triangle_case(TriangleInstance{local, map_all(plan.cycle), map_all(plan.path), map_all(plan.path2)});
                break;
            case Family::k23: rep = layout_k23(local); break;
            case Family::k4_minus_e: rep = layout_k4_minus_e(local); break;
        }
        for (int v : rep.layout.ordering.order()) order.push_back(plan.vertices[v]);
        out.fallback = out.fallback || rep.fallback;
        out.reports.push_back(std::move(rep));
    }
    out.layout = single_page_layout(g, VertexOrdering(order));
    return out;
}

}  // namespace pql
