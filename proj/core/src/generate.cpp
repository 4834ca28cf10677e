#include "pql/generate.hpp"

#include "pql/recognize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pql {

WeightedGraph gen_separated_adversarial(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("gen_separated_adversarial: parts must be non-empty");
    int q = std::min(m, n);
    WeightedGraph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j, Weight((i + j) % q + 1));
    return g;
}

Layout separated_by_right_endpoint(const WeightedGraph& g, const std::vector<int>& left) {
    std::vector<char> is_left(g.n(), 0);
    for (int v : left) {
        if (v < 0 || v >= g.n() || is_left[v]) throw std::invalid_argument("separated_by_right_endpoint: bad left part");
        is_left[v] = 1;
    }
    std::vector<int> order = left, page_of(g.n(), -1);
    int k = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (is_left[v]) continue;
        order.push_back(v);
        if (g.degree(v) > 0) page_of[v] = k++;
    }
    Layout l;
    l.graph = g;
    l.ordering = VertexOrdering(order);
    l.k = k;
    for (const auto& e : g.edges()) {
        if (is_left[e.u] == is_left[e.v]) throw std::invalid_argument("separated_by_right_endpoint: edge inside one part");
        l.page.push_back(page_of[is_left[e.u] ? e.v : e.u]);
    }
    return l;
}

WeightedGraph gen_knn_weights(int n) {
    if (n < 1) throw std::invalid_argument("gen_knn_weights: n must be positive");
    WeightedGraph g(2 * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(j, n + (j + i) % n, Weight(i));
    return g;
}

// ---------------------------------------------------------------------------------------------

std::string GridMatrix::check(int ones_per_column) const {
    if (rows < 0 || cols < 0 || static_cast<int>(cell.size()) != rows) return "row count mismatch";
    for (const auto& r : cell)
        if (static_cast<int>(r.size()) != cols) return "column count mismatch";
    if (ones_per_column >= 0)
        for (int c = 0; c < cols; ++c) {
            int s = 0;
            for (int r = 0; r < rows; ++r) s += cell[r][c] ? 1 : 0;
            if (s != ones_per_column) return "column " + std::to_string(c) + " has " + std::to_string(s) + " ones";
        }
    return {};
}

PeelResult grid_peel(const GridMatrix& m) {
    if (auto why = m.check(); !why.empty()) throw std::invalid_argument("grid_peel: " + why);
    PeelResult res;
    res.step.assign(m.rows, std::vector<int>(m.cols, 0));
    // Step of a cell = 1 + largest step among set cells that are heavier and strictly left.
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r) {
            if (!m.cell[r][c]) continue;
            int best = 0;
            for (int c2 = 0; c2 < c; ++c2)
                for (int r2 = r + 1; r2 < m.rows; ++r2)
                    if (m.cell[r2][c2]) best = std::max(best, res.step[r2][c2]);
            res.step[r][c] = best + 1;
            res.k = std::max(res.k, best + 1);
        }
    if (res.k == 0) return res;
    int r = -1, c = -1;
    for (int cc = 0; cc < m.cols && r < 0; ++cc)
        for (int rr = 0; rr < m.rows; ++rr)
            if (res.step[rr][cc] == res.k) {
                r = rr, c = cc;
                break;
            }
    res.path.emplace_back(r, c);
    while (res.step[r][c] > 1) {
        bool moved = false;
        for (int c2 = 0; c2 < c && !moved; ++c2)
            for (int r2 = r + 1; r2 < m.rows; ++r2)
                if (m.cell[r2][c2] && res.step[r2][c2] == res.step[r][c] - 1) {
                    r = r2, c = c2;
                    moved = true;
                    break;
                }
        res.path.emplace_back(r, c);
    }
    std::reverse(res.path.begin(), res.path.end());
    return res;
}

GridMatrix grid_from_separated(const WeightedGraph& g, const std::vector<int>& left, const std::vector<int>& right_order,
                               int levels) {
    std::vector<char> is_left(g.n(), 0);
    for (int v : left) is_left[v] = 1;
    GridMatrix m(levels, static_cast<int>(right_order.size()));
    for (int c = 0; c < m.cols; ++c)
        for (auto [y, e] : g.adj(right_order[c])) {
            if (!is_left[y]) continue;
            auto w = g.edge(e).w.as_int64();
            if (!w || *w < 1 || *w > levels) throw std::invalid_argument("grid_from_separated: weight outside 1..levels");
            m.cell[*w - 1][c] = 1;
        }
    return m;
}

int grid_bound(int n) {
    if (n <= 0) return 0;
    long long nn = n;
    for (long long k = 0;; ++k) {
        long long t = 3 * nn - 4 * k;
        if (t <= 0 || t * t <= 5 * nn * nn) return static_cast<int>(k);
    }
}

// ---------------------------------------------------------------------------------------------

IntervalLayout gen_interval_layout(const std::vector<std::pair<long long, long long>>& iv) {
    int n = static_cast<int>(iv.size());
    std::set<long long> ends;
    for (auto [a, b] : iv) {
        if (!(a < b)) throw std::invalid_argument("gen_interval_layout: interval with a >= b");
        if (!ends.insert(a).second || !ends.insert(b).second)
            throw std::invalid_argument("gen_interval_layout: repeated endpoint");
    }
    IntervalLayout out;
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (iv[i].first < iv[j].second && iv[j].first < iv[i].second) g.add_edge(i, j, Weight(1));

    // Greedy by left endpoint colors an interval graph with omega colors.
    std::vector<int> by_left(n);
    std::iota(by_left.begin(), by_left.end(), 0);
    std::sort(by_left.begin(), by_left.end(), [&](int x, int y) { return iv[x].first < iv[y].first; });
    out.color.assign(n, -1);
    for (int v : by_left) {
        std::vector<char> taken;
        for (auto [y, e] : g.adj(v))
            if (out.color[y] >= 0) {
                if (static_cast<int>(taken.size()) <= out.color[y]) taken.resize(out.color[y] + 1, 0);
                taken[out.color[y]] = 1;
            }
        int c = 0;
        while (c < static_cast<int>(taken.size()) && taken[c]) ++c;
        out.color[v] = c;
        out.omega = std::max(out.omega, c + 1);
    }
    std::vector<int> by_right(n);
    std::iota(by_right.begin(), by_right.end(), 0);
    std::sort(by_right.begin(), by_right.end(), [&](int x, int y) { return iv[x].second < iv[y].second; });
    Layout l;
    l.ordering = VertexOrdering(by_right);
    l.k = out.omega;
    for (const auto& e : g.edges()) {
        int later = iv[e.u].second > iv[e.v].second ? e.u : e.v;
        l.page.push_back(out.color[later]);
    }
    l.graph = std::move(g);
    out.layout = std::move(l);
    return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

struct TreeBuilder {
    int n = 0;
    std::vector<std::tuple<int, int, Weight, int>> edges;  // u, v, w, copy
    std::vector<StackStep> steps;
    std::vector<TwoTree::Copy> copies;
    std::optional<int> d_override;
    std::map<std::pair<int, int>, int> edge_id;

    int add_edge(int u, int v, Weight w, int copy) {
        edge_id[{std::min(u, v), std::max(u, v)}] = static_cast<int>(edges.size());
        edges.emplace_back(u, v, std::move(w), copy);
        return static_cast<int>(edges.size()) - 1;
    }
    int stack(int u, int v, const Weight& wu, const Weight& wv, int copy) {
        int t = n++;
        add_edge(u, t, wu, copy);
        add_edge(v, t, wv, copy);
        steps.push_back({t, u, v});
        return t;
    }
    void build(int k, int ru, int rv, const Weight& lo, const Weight& hi, int parent) {
        int c = static_cast<int>(copies.size());
        copies.push_back({lo, hi, parent, edge_id.at({std::min(ru, rv), std::max(ru, rv)})});
        if (k == 1) {
            stack(ru, rv, lo, lo, c);
            return;
        }
        int d = d_override ? *d_override : 2 * k * k;
        auto at = [&](int t) { return lo + (hi - lo) * Weight(t) / Weight(d + 1); };
        std::vector<int> a(d + 1);
        for (int i = 1; i <= d; ++i) a[i] = stack(ru, rv, at(0), at(0), c);
        for (int i = 1; i <= d; ++i)
            for (int side : {ru, rv}) {
                int b = stack(a[i], side, at(0), at(0), c);
                build(k - 1, a[i], b, at(i), at(i + 1), c);
                build(k - 1, a[i], b, at(d + 1 - i), at(d + 2 - i), c);
            }
    }
};

}  // namespace

TwoTree gen_hk(int k, std::optional<int> d_override) {
    if (k < 1) throw std::invalid_argument("gen_hk: k must be positive");
    if (d_override && *d_override < 1) throw std::invalid_argument("gen_hk: d must be positive");
    TreeBuilder b;
    b.n = 2;
    b.d_override = d_override;
    b.add_edge(0, 1, Weight(0), -1);
    int d = d_override ? *d_override : 2 * k * k;
    b.build(k, 0, 1, Weight(0), Weight(k == 1 ? 1 : d + 1), -1);
    TwoTree t;
    t.graph = WeightedGraph(b.n);
    for (auto& [u, v, w, c] : b.edges) {
        t.graph.add_edge(u, v, w);
        t.edge_copy.push_back(c);
    }
    t.steps = std::move(b.steps);
    t.copies = std::move(b.copies);
    return t;
}

bool is_left_growing(const TwoTree& t, const VertexOrdering& ord) {
    for (const auto& s : t.steps)
        if (ord.pos(s.vertex) > ord.pos(s.u) && ord.pos(s.vertex) > ord.pos(s.v)) return false;
    return true;
}

VertexOrdering sample_left_growing(const TwoTree& t, std::mt19937_64& rng) {
    std::vector<int> seq{t.root_u, t.root_v};
    if (rng() & 1) std::swap(seq[0], seq[1]);
    for (const auto& s : t.steps) {
        auto pu = std::find(seq.begin(), seq.end(), s.u) - seq.begin();
        auto pv = std::find(seq.begin(), seq.end(), s.v) - seq.begin();
        std::uniform_int_distribution<long> pick(0, std::max(pu, pv));
        seq.insert(seq.begin() + pick(rng), s.vertex);
    }
    return VertexOrdering(seq);
}

TwoTree gen_left_growing_transform(const TwoTree& src, int p) {
    if (p < 1) throw std::invalid_argument("gen_left_growing_transform: p must be positive");
    if (src.steps.empty() && src.graph.n() > 2)
        throw std::invalid_argument("gen_left_growing_transform: missing construction sequence");
    const auto& g = src.graph;
    std::set<Weight> distinct;
    for (const auto& e : g.edges()) distinct.insert(e.w);
    Weight eps(1);
    if (distinct.size() >= 2) {
        std::optional<Weight> gap;
        for (auto it = std::next(distinct.begin()); it != distinct.end(); ++it) {
            Weight dlt = *it - *std::prev(it);
            if (!gap || dlt < *gap) gap = dlt;
        }
        eps = *gap / Weight(2);
    }
    Weight delta = eps / Weight(2LL * p * p);

    TwoTree out;
    int n = 2;
    std::vector<std::tuple<int, int, Weight, int>> edges;  // u, v, w, origin edge
    out.origin = {src.root_u, src.root_v};
    // Copies of each source edge as (copy of edge.u, copy of edge.v).
    std::vector<std::vector<std::pair<int, int>>> copies(g.m());
    auto root = g.find_edge(src.root_u, src.root_v);
    if (!root) throw std::invalid_argument("gen_left_growing_transform: root edge missing");
    edges.emplace_back(0, 1, g.edge(*root).w, *root);
    copies[*root].push_back(g.edge(*root).u == src.root_u ? std::make_pair(0, 1) : std::make_pair(1, 0));
    for (const auto& s : src.steps) {
        int e = *g.find_edge(s.u, s.v);
        int eu = *g.find_edge(s.u, s.vertex), ev = *g.find_edge(s.v, s.vertex);
        for (auto [cu_e, cv_e] : std::vector<std::pair<int, int>>(copies[e])) {
            int cu = g.edge(e).u == s.u ? cu_e : cv_e;
            int cv = cu == cu_e ? cv_e : cu_e;
            for (int i = 1; i <= p * p; ++i) {
                int ti = n++;
                out.origin.push_back(s.vertex);
                edges.emplace_back(cu, ti, g.edge(eu).w + delta * Weight(i), eu);
                edges.emplace_back(cv, ti, g.edge(ev).w - delta * Weight(i), ev);
                copies[eu].push_back(g.edge(eu).u == s.u ? std::make_pair(cu, ti) : std::make_pair(ti, cu));
                copies[ev].push_back(g.edge(ev).u == s.v ? std::make_pair(cv, ti) : std::make_pair(ti, cv));
                out.steps.push_back({ti, cu, cv});
            }
        }
    }
    out.graph = WeightedGraph(n);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (int v = 0; v < n; ++v) labels.push_back(g.label(out.origin[v]));
        out.graph.set_labels(labels);
    }
    for (auto& [u, v, w, o] : edges) {
        out.graph.add_edge(u, v, w);
        out.edge_origin.push_back(o);
        out.edge_copy.push_back(-1);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

WeightedGraph gen_forbidden_minor(int index) {
    // Integer weights per pattern edge, keyed by endpoint labels.
    static const std::vector<std::map<std::string, int>> weights = {
        {{"ab", 6}, {"cd", 5}, {"ac", 1}, {"ad", 2}, {"bc", 3}, {"bd", 4}},
        {{"ac", 1}, {"bc", 1}, {"cd", 1}, {"ce", 1}, {"ab", 2}, {"de", 2}},
        {{"ab", 1}, {"bc", 2}, {"de", 3}, {"ae", 4}, {"cd", 5}, {"be", 6}},
        {{"ab", 1}, {"ac", 2}, {"bc", 7}, {"ad", 3}, {"de", 5}, {"af", 4}, {"fg", 6}},
        {{"ab", 1}, {"ac", 1}, {"bc", 9}, {"ad", 5}, {"de", 4}, {"bf", 6}, {"cg", 7}},
        {{"cd", 1}, {"ad", 2}, {"ab", 3}, {"bc", 4}, {"de", 5}, {"ac", 6}},
        {{"cd", 1}, {"ad", 2}, {"ab", 3}, {"bc", 4}, {"ae", 5}, {"ac", 6}},
        {{"df", 1}, {"ad", 2}, {"bc", 3}, {"cd", 4}, {"fg", 5}, {"ae", 6}, {"ab", 7}},
    };
    auto g = forbidden_minor_shape(index);
    const auto& table = weights[index - 1];
    for (int e = 0; e < g.m(); ++e) {
        std::string key = g.label(g.edge(e).u) + g.label(g.edge(e).v);
        g.set_weight(e, Weight(table.at(key)));
    }
    return g;
}

// ---------------------------------------------------------------------------------------------

std::string CircularArcInstance::check() const {
    if (circumference <= 0) return "circumference must be positive";
    if (arcs.empty()) return "no arcs";
    std::set<long long> seen;
    for (auto [s, e] : arcs) {
        if (s < 0 || e < 0 || s >= circumference || e >= circumference) return "endpoint outside the circle";
        if (!seen.insert(s).second || !seen.insert(e).second) return "endpoints are not distinct";
    }
    if (k < 1) return "k must be positive";
    return {};
}

std::vector<std::pair<long long, long long>> gen_random_intervals(int count, std::mt19937_64& rng) {
    std::vector<long long> pts(2 * count);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::pair<long long, long long>> iv;
    for (int i = 0; i < count; ++i) iv.emplace_back(std::min(pts[2 * i], pts[2 * i + 1]), std::max(pts[2 * i], pts[2 * i + 1]));
    return iv;
}

CircularArcInstance gen_circular_arcs(int count, int k, std::mt19937_64& rng) {
    CircularArcInstance inst;
    inst.circumference = 2LL * count;
    inst.k = k;
    std::vector<long long> pts(2 * count);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    for (int i = 0; i < count; ++i) inst.arcs.emplace_back(pts[2 * i], pts[2 * i + 1]);
    return inst;
}

namespace {

bool arc_contains(std::pair<long long, long long> a, long long p) {
    if (a.first < a.second) return a.first <= p && p <= a.second;
    return p >= a.first || p <= a.second;
}

}  // namespace

WeightedGraph circular_arc_graph(const CircularArcInstance& inst) {
    int n = static_cast<int>(inst.arcs.size());
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto a = inst.arcs[i], b = inst.arcs[j];
            if (arc_contains(a, b.first) || arc_contains(a, b.second) || arc_contains(b, a.first) ||
                arc_contains(b, a.second))
                g.add_edge(i, j, Weight(1));
        }
    return g;
}

ReductionOutput gen_npc_reduction(const CircularArcInstance& inst) {
    if (auto why = inst.check(); !why.empty()) throw std::invalid_argument("gen_npc_reduction: " + why);
    int na = static_cast<int>(inst.arcs.size());
    ReductionOutput out;
    out.k = inst.k;
    for (int i = 0; i < na; ++i)
        if (inst.arcs[i].first > inst.arcs[i].second) out.cut_arcs.push_back(i);
    std::sort(out.cut_arcs.begin(), out.cut_arcs.end(),
              [&](int x, int y) { return inst.arcs[x].second < inst.arcs[y].second; });
    int s = static_cast<int>(out.cut_arcs.size());
    out.forced_no = inst.k < s;

    std::vector<std::string> labels;
    auto vertex = [&](std::string label) {
        labels.push_back(std::move(label));
        return static_cast<int>(labels.size()) - 1;
    };
    std::vector<std::pair<int, int>> heavy_spans;
    auto heavy_group = [&](int count, const std::string& tag) {
        std::vector<int> xs, ys;
        for (int i = 0; i < count; ++i) xs.push_back(vertex(tag + "x" + std::to_string(i)));
        for (int i = 0; i < count; ++i) ys.push_back(vertex(tag + "y" + std::to_string(i)));
        for (int i = 0; i < count; ++i) heavy_spans.emplace_back(xs[i], ys[i]);
    };

    std::vector<int> ell(s), rho(s), start(s), finish(s);
    for (int j = 0; j < s; ++j) {
        ell[j] = vertex("L" + std::to_string(out.cut_arcs[j]));
        heavy_group(std::max(0, inst.k - (j + 1)), "hL" + std::to_string(j + 1));
    }
    // Middle: arc endpoints in circular order from the cut.
    std::vector<std::tuple<long long, int, bool>> points;  // position, arc, is_start
    for (int i = 0; i < na; ++i) {
        points.emplace_back(inst.arcs[i].first, i, true);
        points.emplace_back(inst.arcs[i].second, i, false);
    }
    std::sort(points.begin(), points.end());
    std::vector<int> vstart(na, -1), vend(na, -1);
    for (auto [p, i, is_start] : points) {
        int v = vertex(std::to_string(i) + (is_start ? "s" : "e"));
        (is_start ? vstart : vend)[i] = v;
    }
    for (int j = s - 1; j >= 0; --j) {
        heavy_group(std::max(0, inst.k - (j + 1)), "hR" + std::to_string(j + 1));
        rho[j] = vertex("R" + std::to_string(out.cut_arcs[j]));
    }

    // Interval edges, weighted 1..m by decreasing right endpoint (spine position = vertex id).
    struct Pending {
        int u, v;
        int arc;
        int kind;  // 0 whole arc, 1 left piece, 2 right piece, 3 sync, 4 heavy
        int slot;
    };
    std::vector<Pending> pend;
    std::vector<int> slot_of(na, -1);
    for (int j = 0; j < s; ++j) slot_of[out.cut_arcs[j]] = j;
    for (int i = 0; i < na; ++i) {
        if (slot_of[i] < 0) {
            pend.push_back({vstart[i], vend[i], i, 0, -1});
        } else {
            int j = slot_of[i];
            pend.push_back({ell[j], vend[i], i, 1, j});
            pend.push_back({vstart[i], rho[j], i, 2, j});
        }
    }
    std::vector<Pending> syncs, heavies;
    for (int j = 0; j < s; ++j) syncs.push_back({ell[j], rho[j], out.cut_arcs[j], 3, j});
    for (auto [x, y] : heavy_spans) heavies.push_back({x, y, -1, 4, -1});
    auto by_right_desc = [](const Pending& a, const Pending& b) { return a.v > b.v; };
    std::sort(pend.begin(), pend.end(), by_right_desc);
    std::sort(syncs.begin(), syncs.end(), by_right_desc);
    std::sort(heavies.begin(), heavies.end(), [](const Pending& a, const Pending& b) { return a.u < b.u; });

    int m = static_cast<int>(pend.size());
    int M = m + s;
    int H = static_cast<int>(heavies.size());
    out.graph = WeightedGraph(static_cast<int>(labels.size()));
    out.graph.set_labels(labels);
    out.arc_edges.assign(na, {});
    out.left_piece.assign(s, -1);
    out.right_piece.assign(s, -1);
    out.sync.assign(s, -1);
    for (int i = 0; i < m; ++i) {
        const auto& p = pend[i];
        int e = out.graph.add_edge(p.u, p.v, Weight(i + 1));
        out.arc_edges[p.arc].push_back(e);
        if (p.kind == 1) out.left_piece[p.slot] = e;
        if (p.kind == 2) out.right_piece[p.slot] = e;
    }
    for (int i = 0; i < s; ++i) out.sync[syncs[i].slot] = out.graph.add_edge(syncs[i].u, syncs[i].v, Weight(m + 1 + i));
    for (int i = 0; i < H; ++i) out.heavy.push_back(out.graph.add_edge(heavies[i].u, heavies[i].v, Weight(M + H - i)));
    out.ordering = VertexOrdering::identity(out.graph.n());
    return out;
}

// ---------------------------------------------------------------------------------------------

json recipe_to_json(const InstanceRecipe& r) {
    json j;
    j["family"] = r.family;
    j["params"] = r.params.is_null() ? json::object() : r.params;
    if (r.seed) j["seed"] = *r.seed;
    j["generator"] = "pql";
    if (!r.notes.is_null()) j["notes"] = r.notes;
    return j;
}

json grid_to_json(const GridMatrix& m) {
    json rows = json::array();
    for (int r = m.rows - 1; r >= 0; --r) {
        std::string line;
        for (int c = 0; c < m.cols; ++c) line.push_back(m.cell[r][c] ? '1' : '0');
        rows.push_back(line);
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"cells", rows}};
}

GridMatrix grid_from_json(const json& j) {
    try {
        int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
        const auto& cells = j.at("cells");
        if (rows < 0 || cols < 0 || static_cast<int>(cells.size()) != rows) throw ParseError("grid: row count mismatch");
        GridMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            auto line = cells[i].get<std::string>();
            if (static_cast<int>(line.size()) != cols) throw ParseError("grid: row " + std::to_string(i) + " has wrong length");
            for (int c = 0; c < cols; ++c) {
                if (line[c] != '0' && line[c] != '1') throw ParseError("grid: cells must be 0 or 1");
                m.cell[rows - 1 - i][c] = line[c] == '1';
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }
}

json two_tree_to_json(const TwoTree& t) {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back({s.vertex, s.u, s.v});
    json j{{"root", {t.root_u, t.root_v}}, {"steps", steps}};
    if (!t.copies.empty()) {
        json copies = json::array();
        for (const auto& c : t.copies)
            copies.push_back({{"interval", {weight_to_json(c.lo), weight_to_json(c.hi)}}, {"parent", c.parent},
                              {"root_edge", c.root_edge}});
        j["copies"] = copies;
        j["edge_copy"] = t.edge_copy;
    }
    if (!t.origin.empty()) {
        j["origin"] = t.origin;
        j["edge_origin"] = t.edge_origin;
    }
    return j;
}

json circular_arcs_to_json(const CircularArcInstance& inst) {
    json arcs = json::array();
    for (auto [s, e] : inst.arcs) arcs.push_back({s, e});
    return {{"circumference", inst.circumference}, {"k", inst.k}, {"arcs", arcs}};
}

CircularArcInstance circular_arcs_from_json(const json& j) {
    try {
        CircularArcInstance inst;
        inst.circumference = j.at("circumference").get<long long>();
        inst.k = j.at("k").get<int>();
        for (const auto& a : j.at("arcs")) inst.arcs.emplace_back(a.at(0).get<long long>(), a.at(1).get<long long>());
        if (auto why = inst.check(); !why.empty()) throw ParseError("arcs: " + why);
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("arcs: ") + e.what());
    }
}

}  // namespace pql
