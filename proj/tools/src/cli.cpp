#include "pql/cli.hpp"

#include "pql/construct.hpp"
#include "pql/generate.hpp"
#include "pql/io.hpp"
#include "pql/recognize.hpp"
#include "pql/render.hpp"
#include "pql/solve.hpp"
#include "pql/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace pql::cli {

namespace {

// Domain failure: exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string edge_key(const WeightedGraph& g, int e) {
    return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

json edge_keys(const WeightedGraph& g, const std::vector<int>& edges) {
    json a = json::array();
    for (int e : edges) a.push_back(edge_key(g, e));
    return a;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
}

void emit(std::ostream& out, const std::string& path, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (path.empty())
        out << text;
    else
        write_text(path, text);
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> r;
    if (s.empty()) return r;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            r.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ParseError("bad vertex list \"" + s + "\"");
        }
    }
    return r;
}

WeightedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Layout load_layout(const std::string& layout_path, const std::string& graph_path) {
    if (graph_path.empty()) return parse_layout(read_file(layout_path));
    auto g = load_graph(graph_path);
    return parse_layout(read_file(layout_path), &g);
}

SolveOptions solve_options(long long budget, std::uint64_t seed) {
    SolveOptions opt;
    if (budget > 0) opt.node_budget = budget;
    opt.seed = seed;
    return opt;
}

// ----- validate ------------------------------------------------------------------------------

struct ValidateArgs {
    std::string layout, graph, out;
};

int do_validate(const ValidateArgs& a, std::ostream& out) {
    auto l = load_layout(a.layout, a.graph);
    auto pairs = find_forbidden_pairs(l);
    json j;
    j["valid"] = pairs.empty();
    if (!pairs.empty()) {
        json v = json::array();
        for (const auto& p : pairs)
            v.push_back({{"kind", to_string(p.kind)},
                         {"e", edge_key(l.graph, p.e)},
                         {"e_prime", edge_key(l.graph, p.e_prime)},
                         {"vertex", p.vertex}});
        j["violations"] = std::move(v);
    }
    emit(out, a.out, j);
    return pairs.empty() ? 0 : 1;
}

// ----- construct -----------------------------------------------------------------------------

struct ConstructArgs {
    std::string graph, out, family = "auto", root, cycle, path, path2, start;
};

json report_to_json(const ConstructionReport& r) {
    json j = layout_to_json(r.layout);
    j["family"] = to_string(r.family);
    json anchors = json::object();
    for (const auto& [name, xs] : r.anchors) anchors[name] = xs;
    j["anchors"] = std::move(anchors);
    j["fallback"] = r.fallback;
    j["valid"] = is_valid(r.layout);
    return j;
}

// Plan for a connected graph, from recognition.
std::optional<ComponentPlan> recognized_plan(const WeightedGraph& g) {
    if (!is_connected(g)) return std::nullopt;
    auto v = recognize_pqn1(g);
    if (!v.yes || v.plans.size() != 1) return std::nullopt;
    return v.plans.front();
}

int do_construct(const ConstructArgs& a, std::ostream& out) {
    auto g = load_graph(a.graph);
    if (a.family == "auto") {
        auto verdict = recognize_pqn1(g);
        if (!verdict.yes) throw DomainError("graph contains a forbidden minor; no 1-page layout for every weighting");
        auto planned = layout_from_verdict(g, verdict);
        json j = layout_to_json(planned.layout);
        json comps = json::array();
        for (std::size_t i = 0; i < verdict.plans.size(); ++i)
            comps.push_back({{"vertices", verdict.plans[i].vertices}, {"family", to_string(verdict.plans[i].family)}});
        j["components"] = std::move(comps);
        j["fallback"] = planned.fallback;
        j["valid"] = is_valid(planned.layout);
        emit(out, a.out, j);
        return 0;
    }
    auto fam = family_from_string(a.family);
    if (!fam) throw ParseError("unknown family \"" + a.family + "\"");
    auto root = parse_list(a.root), cycle = parse_list(a.cycle), path = parse_list(a.path),
         path2 = parse_list(a.path2), start = parse_list(a.start);
    bool explicit_structure = !root.empty() || !cycle.empty() || !path.empty() || !path2.empty();
    if (!explicit_structure) {
        auto plan = recognized_plan(g);
        bool usable = plan && (plan->family == *fam || (*fam == Family::tree && plan->family == Family::caterpillar));
        if (!usable && *fam != Family::cycle && *fam != Family::k23 && *fam != Family::k4_minus_e)
            throw DomainError("graph does not match family " + a.family + "; pass the structure explicitly");
        if (usable) {
            root = plan->root >= 0 ? std::vector<int>{plan->root} : std::vector<int>{};
            cycle = plan->cycle;
            path = plan->path;
            path2 = plan->path2;
            if (*fam == Family::cycle_caterpillar) std::reverse(path.begin(), path.end());
        }
    }
    ConstructionReport rep;
    switch (*fam) {
        case Family::tree:
            if (root.size() != 1) throw ParseError("tree needs --root");
            rep = layout_tree(RootedTree{g, root[0]});
            break;
        case Family::caterpillar: {
            if (path.empty()) throw ParseError("caterpillar needs --path");
            int r = root.size() == 1 ? root[0] : path.back();
            rep = layout_caterpillar(Caterpillar{g, path}, r);
            break;
        }
        case Family::cycle: rep = layout_cycle(g, start.size() == 1 ? start[0] : 0); break;
        case Family::legged_cycle:
            if (cycle.empty()) throw ParseError("legged_cycle needs --cycle");
            rep = layout_legged_cycle(LeggedCycle{g, cycle});
            break;
        case Family::cycle_caterpillar:
            if (cycle.empty() || path.empty()) throw ParseError("cycle_caterpillar needs --cycle and --path");
            rep = layout_cycle_plus_caterpillar(CycleWithCaterpillar{g, cycle, path});
            break;
        case Family::quadrangle:
            if (cycle.empty()) throw ParseError("quadrangle needs --cycle");
            rep = layout_quadrangle(QuadrangleInstance{g, cycle, path, path2});
            break;
        case Family::triangle:
            if (cycle.empty()) throw ParseError("triangle needs --cycle");
            rep = layout_triangle_case(TriangleInstance{g, cycle, path, path2});
            break;
        case Family::k23: rep = layout_k23(g); break;
        case Family::k4_minus_e: rep = layout_k4_minus_e(g); break;
    }
    emit(out, a.out, report_to_json(rep));
    return 0;
}

// ----- recognize -----------------------------------------------------------------------------

struct RecognizeArgs {
    std::string graph, out;
};

int do_recognize(const RecognizeArgs& a, std::ostream& out) {
    auto g = load_graph(a.graph);
    auto v = recognize_pqn1(g);
    json j;
    j["pqn1"] = v.yes;
    if (v.yes) {
        json comps = json::array();
        for (const auto& p : v.plans) {
            json c = {{"vertices", p.vertices}, {"family", to_string(p.family)}};
            if (p.root >= 0) c["root"] = p.root;
            if (!p.cycle.empty()) c["cycle"] = p.cycle;
            if (!p.path.empty()) c["path"] = p.path;
            if (!p.path2.empty()) c["path2"] = p.path2;
            comps.push_back(std::move(c));
        }
        j["components"] = std::move(comps);
        j["layout"] = layout_to_json(layout_from_verdict(g, v).layout);
    } else {
        const auto& m = *v.minor;
        json edges = json::array();
        for (auto [x, y] : m.edge_map) edges.push_back({x, y});
        j["minor"] = {{"name", "F" + std::to_string(m.index)},
                      {"index", m.index},
                      {"branch", m.branch},
                      {"edge_map", std::move(edges)}};
        j["component"] = v.component;
    }
    emit(out, a.out, j);
    return 0;
}

// ----- solve ---------------------------------------------------------------------------------

struct SolveArgs {
    std::string graph, order, out, mode = "free", left;
    long long budget = 0;
    std::uint64_t seed = 1;
    int max_vertices = 0, max_edges = 0;
};

json solve_result_to_json(const SolveResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["k"] = r.k;
    j["lower_bound"] = r.lower_bound;
    j["nodes"] = r.nodes;
    if (r.witness) {
        j["witness"] = layout_to_json(*r.witness);
        j["clique"] = edge_keys(r.witness->graph, r.clique);
    }
    return j;
}

int do_solve(const SolveArgs& a, std::ostream& out) {
    auto g = load_graph(a.graph);
    auto opt = solve_options(a.budget, a.seed);
    if (a.max_vertices > 0) opt.max_vertices = a.max_vertices;
    if (a.max_edges > 0) opt.max_universal_edges = a.max_edges;
    if (a.mode == "universal") {
        auto r = universal_pqn1_oracle(g, opt);
        json j;
        j["verdict"] = to_string(r.verdict);
        j["orders_checked"] = r.orders_checked;
        if (r.verdict == UniversalResult::Verdict::no) {
            j["witness_weights"] = graph_to_json(r.witness);
            j["sampled"] = r.sampled;
        }
        emit(out, a.out, j);
        return r.verdict == UniversalResult::Verdict::budget_exceeded ? 1 : 0;
    }
    SolveResult r;
    if (a.mode == "fixed") {
        auto ord = a.order.empty() ? VertexOrdering::identity(g.n()) : parse_ordering(read_file(a.order));
        if (ord.order().size() != static_cast<std::size_t>(g.n())) throw ParseError("ordering size differs from n");
        r = solve_fixed_order(g, ord, opt);
    } else if (a.mode == "free") {
        r = solve_free_order(g, opt);
    } else if (a.mode == "separated") {
        if (a.left.empty()) throw ParseError("separated mode needs --left");
        r = solve_separated(g, parse_list(a.left), opt);
    } else {
        throw ParseError("unknown mode \"" + a.mode + "\"");
    }
    emit(out, a.out, solve_result_to_json(r));
    return r.status == SolveStatus::optimal ? 0 : 1;
}

// ----- gen -----------------------------------------------------------------------------------

struct GenArgs {
    std::string family, out, recipe, order_out, layout_out, arcs, intervals;
    std::uint64_t seed = 1;
    bool seeded = false;
    int n = 4, m = 0, k = 2, d = 0, transform = 0, index = 1, count = 6, colors = 3;
    bool uniform = false;
};

std::vector<std::pair<long long, long long>> parse_intervals(const std::string& s) {
    std::vector<std::pair<long long, long long>> r;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("interval \"" + tok + "\" is not a:b");
        try {
            r.emplace_back(std::stoll(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw ParseError("interval \"" + tok + "\" is not a:b");
        }
    }
    return r;
}

int do_gen(const GenArgs& a, std::ostream& out) {
    std::mt19937_64 rng(a.seed);
    InstanceRecipe recipe;
    recipe.family = a.family;
    recipe.notes = json::object();
    if (a.seeded) recipe.seed = a.seed;
    WeightedGraph g;
    std::optional<Layout> layout;
    std::optional<VertexOrdering> order;

    if (a.family == "knn") {
        g = gen_knn_weights(a.n);
        recipe.params = {{"n", a.n}};
        json left = json::array();
        for (int i = 0; i < a.n; ++i) left.push_back(i);
        recipe.notes["left"] = left;
    } else if (a.family == "separated") {
        int m = a.m > 0 ? a.m : a.n;
        g = gen_separated_adversarial(m, a.n);
        recipe.params = {{"m", m}, {"n", a.n}};
    } else if (a.family == "grid") {
        g = gen_knn_weights(a.n);
        std::vector<int> left(a.n), right(a.n);
        std::iota(left.begin(), left.end(), 0);
        std::iota(right.begin(), right.end(), a.n);
        if (a.seeded) std::shuffle(right.begin(), right.end(), rng);
        auto grid = grid_from_separated(g, left, right, a.n);
        auto peel = grid_peel(grid);
        recipe.params = {{"n", a.n}};
        recipe.notes["right_order"] = right;
        recipe.notes["matrix"] = grid_to_json(grid);
        recipe.notes["peel_k"] = peel.k;
        recipe.notes["bound"] = grid_bound(a.n);
        std::vector<int> ord = left;
        ord.insert(ord.end(), right.begin(), right.end());
        order = VertexOrdering(ord);
    } else if (a.family == "interval") {
        auto iv = a.intervals.empty() ? gen_random_intervals(a.count, rng) : parse_intervals(a.intervals);
        auto il = gen_interval_layout(iv);
        g = il.layout.graph;
        layout = il.layout;
        order = il.layout.ordering;
        json ivs = json::array();
        for (auto [x, y] : iv) ivs.push_back({x, y});
        recipe.params = {{"intervals", ivs}};
        recipe.notes["omega"] = il.omega;
        recipe.notes["color"] = il.color;
    } else if (a.family == "hk") {
        auto t = gen_hk(a.k, a.d > 0 ? std::optional<int>(a.d) : std::nullopt);
        recipe.params = {{"k", a.k}};
        if (a.d > 0) recipe.params["d"] = a.d;
        if (a.transform > 0) {
            t = gen_left_growing_transform(t, a.transform);
            recipe.family = "hk-transform";
            recipe.params["p"] = a.transform;
        }
        g = t.graph;
        recipe.notes["two_tree"] = two_tree_to_json(t);
        recipe.notes["weights"] = "derived: each level's weights lie in the interval of its enclosing copy";
    } else if (a.family == "minor") {
        if (a.index < 1 || a.index > 8) throw ParseError("--index must be in 1..8");
        g = a.uniform ? forbidden_minor_shape(a.index) : gen_forbidden_minor(a.index);
        recipe.params = {{"index", a.index}, {"uniform", a.uniform}};
        recipe.notes["weights"] = a.uniform ? "uniform" : "derived; may differ from other published weightings";
    } else if (a.family == "npc") {
        CircularArcInstance inst = a.arcs.empty() ? gen_circular_arcs(a.count, a.colors, rng)
                                                  : circular_arcs_from_json(parse_json(read_file(a.arcs)));
        if (a.arcs.empty()) inst.k = a.colors;
        auto red = gen_npc_reduction(inst);
        g = red.graph;
        order = red.ordering;
        recipe.params = circular_arcs_to_json(inst);
        recipe.notes["k"] = red.k;
        recipe.notes["forced_no"] = red.forced_no;
        recipe.notes["cut_arcs"] = red.cut_arcs;
        recipe.notes["left_piece"] = edge_keys(g, red.left_piece);
        recipe.notes["right_piece"] = edge_keys(g, red.right_piece);
        recipe.notes["sync"] = edge_keys(g, red.sync);
        recipe.notes["heavy"] = edge_keys(g, red.heavy);
        json arc_edges = json::array();
        for (const auto& es : red.arc_edges) arc_edges.push_back(edge_keys(g, es));
        recipe.notes["arc_edges"] = std::move(arc_edges);
    } else {
        throw ParseError("unknown gen family \"" + a.family + "\"");
    }
    if (order) recipe.notes["order"] = order->order();

    emit(out, a.out, graph_to_json(g));
    std::string recipe_path = !a.recipe.empty() ? a.recipe : (a.out.empty() ? "" : a.out + ".recipe.json");
    if (!recipe_path.empty()) write_text(recipe_path, recipe_to_json(recipe).dump(2) + "\n");
    if (!a.order_out.empty()) {
        if (!order) throw DomainError("family " + a.family + " has no canonical ordering");
        write_text(a.order_out, json(order->order()).dump() + "\n");
    }
    if (!a.layout_out.empty()) {
        if (!layout) throw DomainError("family " + a.family + " has no canonical layout");
        write_text(a.layout_out, serialize_layout(*layout) + "\n");
    }
    return 0;
}

// ----- render --------------------------------------------------------------------------------

struct RenderArgs {
    std::string layout, graph, out, format;
    bool weights = false;
    int spacing = 60;
};

int do_render(const RenderArgs& a, std::ostream& out) {
    RenderSpec spec{load_layout(a.layout, a.graph), {}, a.spacing, a.weights};
    std::string fmt = a.format;
    if (fmt.empty()) fmt = a.out.size() >= 4 && a.out.substr(a.out.size() - 4) == ".dot" ? "dot" : "svg";
    std::string text = fmt == "dot" ? render_dot(spec) : render_arc_diagram(spec);
    if (a.out.empty())
        out << text;
    else
        write_text(a.out, text);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Priority-queue linear layouts of edge-weighted graphs", "pql"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pql 0.1.0");

    ValidateArgs va;
    auto* validate = app.add_subcommand("validate", "Check a layout for forbidden pairs");
    validate->add_option("--layout", va.layout, "Layout JSON")->required()->check(CLI::ExistingFile);
    validate->add_option("--graph", va.graph, "Graph JSON (unless embedded in the layout)")->check(CLI::ExistingFile);
    validate->add_option("--out", va.out, "Write JSON here instead of stdout");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "One-page layout for a graph family");
    construct->add_option("--graph", ca.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
    construct->add_option("--family", ca.family,
                          "tree|caterpillar|cycle|legged-cycle|cycle+caterpillar|quadrangle|triangle|K23|K4-e|auto")
        ->capture_default_str();
    construct->add_option("--root", ca.root, "Tree root, or the caterpillar end placed rightmost");
    construct->add_option("--cycle", ca.cycle, "Cycle vertices in cyclic order, comma separated");
    construct->add_option("--path", ca.path, "Caterpillar path, comma separated");
    construct->add_option("--path2", ca.path2, "Second caterpillar path");
    construct->add_option("--start", ca.start, "Cycle vertex placed leftmost");
    construct->add_option("--out", ca.out, "Write JSON here instead of stdout");

    RecognizeArgs ra;
    auto* recognize = app.add_subcommand("recognize", "Decide whether every weighting admits one page");
    recognize->add_option("--graph", ra.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
    recognize->add_option("--out", ra.out, "Write JSON here instead of stdout");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Exact page minimization");
    solve->add_option("--graph", sa.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
    solve->add_option("--mode", sa.mode, "fixed|free|universal|separated")
        ->check(CLI::IsMember({"fixed", "free", "universal", "separated"}));
    solve->add_option("--order", sa.order, "Vertex ordering JSON for fixed mode (identity if absent)")
        ->check(CLI::ExistingFile);
    solve->add_option("--left", sa.left, "Left part for separated mode, comma separated");
    solve->add_option("--budget", sa.budget, "Search node budget");
    solve->add_option("--seed", sa.seed, "Seed for sampled weight orders");
    solve->add_option("--max-vertices", sa.max_vertices, "Free-order vertex guard");
    solve->add_option("--max-edges", sa.max_edges, "Universal exhaustive edge guard");
    solve->add_option("--out", sa.out, "Write JSON here instead of stdout");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate instance families");
    gen->add_option("family", ga.family, "knn|separated|grid|interval|hk|minor|npc")
        ->required()
        ->check(CLI::IsMember({"knn", "separated", "grid", "interval", "hk", "minor", "npc"}));
    gen->add_option("--n", ga.n, "Part size (knn, grid, separated)")->check(CLI::Range(1, 64));
    gen->add_option("--m", ga.m, "Left part size (separated)")->check(CLI::Range(1, 64));
    gen->add_option("--k", ga.k, "Level count (hk)")->check(CLI::Range(1, 4));
    gen->add_option("--d", ga.d, "Stacked vertices per level (hk)")->check(CLI::Range(1, 64));
    gen->add_option("--transform", ga.transform, "Left-growing transform with p (hk)")->check(CLI::Range(1, 8));
    gen->add_option("--index", ga.index, "Minor index 1..8 (minor)");
    gen->add_flag("--uniform", ga.uniform, "Unit weights (minor)");
    gen->add_option("--intervals", ga.intervals, "Intervals a:b,c:d,... (interval)");
    gen->add_option("--arcs", ga.arcs, "Circular-arc instance JSON (npc)")->check(CLI::ExistingFile);
    gen->add_option("--count", ga.count, "Random interval/arc count")->check(CLI::Range(1, 200));
    gen->add_option("--colors", ga.colors, "Target colors k for random arcs (npc)")->check(CLI::Range(1, 64));
    auto* seed_opt = gen->add_option("--seed", ga.seed, "Random seed");
    gen->add_option("--out", ga.out, "Graph JSON path (stdout if absent)");
    gen->add_option("--recipe", ga.recipe, "Recipe sidecar path (default <out>.recipe.json)");
    gen->add_option("--order-out", ga.order_out, "Write the family's canonical ordering");
    gen->add_option("--layout-out", ga.layout_out, "Write the family's canonical layout (interval)");

    RenderArgs rda;
    auto* render = app.add_subcommand("render", "Arc diagram (SVG) or DOT");
    render->add_option("--layout", rda.layout, "Layout JSON")->required()->check(CLI::ExistingFile);
    render->add_option("--graph", rda.graph, "Graph JSON (unless embedded in the layout)")->check(CLI::ExistingFile);
    render->add_option("--out", rda.out, "Output file (stdout if absent)");
    render->add_option("--format", rda.format, "svg|dot (default from --out extension)")
        ->check(CLI::IsMember({"svg", "dot"}));
    render->add_flag("--weights", rda.weights, "Label arcs with weights");
    render->add_option("--spacing", rda.spacing, "Pixels between spine vertices")->check(CLI::Range(10, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    ga.seeded = seed_opt->count() > 0;

    try {
        if (*validate) return do_validate(va, out);
        if (*construct) return do_construct(ca, out);
        if (*recognize) return do_recognize(ra, out);
        if (*solve) return do_solve(sa, out);
        if (*gen) return do_gen(ga, out);
        if (*render) return do_render(rda, out);
    } catch (const ParseError& e) {
        err << "pql: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "pql: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "pql: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pql"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pql::cli
