#include "oracles.hpp"

#include "pql/construct.hpp"
#include "pql/solve.hpp"
#include "pql/validate.hpp"

#include <doctest.h>

#include <numeric>

using namespace pql;

namespace {

Layout one_page(WeightedGraph g, std::vector<int> order) { return single_page_layout(std::move(g), VertexOrdering(order)); }

}  // namespace

TEST_CASE("forbidden crossing") {
    // u=0, u'=1, v=2, v'=3: u < u' < v < v'.
    WeightedGraph g(4);
    g.add_edge(0, 2, 2);
    g.add_edge(1, 3, 1);
    auto pairs = find_forbidden_pairs(one_page(g, {0, 1, 2, 3}));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].kind == PairKind::crossing);
    CHECK(pairs[0].e == 0);
    CHECK(pairs[0].e_prime == 1);
    CHECK(simulate_sweep(one_page(g, {0, 1, 2, 3})));

    g.set_weight(0, 1);
    g.set_weight(1, 2);
    CHECK(find_forbidden_pairs(one_page(g, {0, 1, 2, 3})).empty());
}

TEST_CASE("heavier outer nesting is legal") {
    WeightedGraph g(4);
    g.add_edge(0, 3, 5);
    g.add_edge(1, 2, 1);
    auto l = one_page(g, {0, 1, 2, 3});
    CHECK(find_forbidden_pairs(l).empty());
    CHECK_FALSE(simulate_sweep(l));
    // Heavier inner edge ending first is a nesting violation.
    g.set_weight(0, 1);
    g.set_weight(1, 5);
    auto pairs = find_forbidden_pairs(one_page(g, {0, 1, 2, 3}));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].kind == PairKind::nesting);
}

TEST_CASE("pseudo-nesting and shared right endpoints") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 5);
    g.add_edge(0, 2, 1);
    auto pairs = find_forbidden_pairs(one_page(g, {0, 1, 2}));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].kind == PairKind::pseudo_nesting);

    WeightedGraph h(3);
    h.add_edge(0, 2, 5);
    h.add_edge(1, 2, 1);
    CHECK(find_forbidden_pairs(one_page(h, {0, 1, 2})).empty());
}

TEST_CASE("equal weights never conflict") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_graph(6, 0.6, rng);
        for (int e = 0; e < g.m(); ++e) g.set_weight(e, 4);
        CHECK(find_forbidden_pairs(single_page_layout(g, oracle::random_ordering(6, rng))).empty());
    }
}

TEST_CASE("monotone weights along the sweep are accepted") {
    // Every edge gets a weight that increases with its right endpoint.
    WeightedGraph g(5);
    int w = 1;
    for (int v = 1; v < 5; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v, w++);
    CHECK_FALSE(simulate_sweep(one_page(g, {0, 1, 2, 3, 4})));
}

TEST_CASE("K2,3 case-one ordering is one page") {
    // u1=0, u2=1, v1=2, v2=3, v3=4; e1 = u1v1 heaviest, e2 = u2v3 second.
    WeightedGraph g(5);
    g.add_edge(0, 2, 10);
    g.add_edge(1, 4, 9);
    g.add_edge(0, 3, 1);
    g.add_edge(0, 4, 2);
    g.add_edge(1, 2, 3);
    g.add_edge(1, 3, 4);
    CHECK_FALSE(simulate_sweep(one_page(g, {4, 0, 3, 1, 2})));
}

TEST_CASE("sweep reports the right endpoint of the lighter edge") {
    std::mt19937_64 rng(11);
    int seen = 0;
    for (int i = 0; i < 2000; ++i) {
        auto g = oracle::random_graph(6, 0.5, rng);
        auto l = single_page_layout(g, oracle::random_ordering(6, rng));
        auto v = simulate_sweep(l);
        auto pairs = find_forbidden_pairs(l);
        CHECK(static_cast<bool>(v) == !pairs.empty());
        if (!v) continue;
        ++seen;
        // The failing vertex is the first right endpoint of a heavier edge in some pair.
        int first = g.n();
        for (const auto& p : pairs) first = std::min(first, l.ordering.pos(l.span(p.e).second));
        CHECK(v->vertex == l.ordering.at(first));
    }
    CHECK(seen > 100);
}

TEST_CASE("conflict graph") {
    WeightedGraph one(2);
    one.add_edge(0, 1, 1);
    auto h1 = build_conflict_graph(one, VertexOrdering::identity(2));
    CHECK(h1.m == 1);
    CHECK(h1.edge_count() == 0);

    // 2-inversion: e1 = (0,3) weight 1 ends last, e2 = (1,2) weight 2 ends first.
    WeightedGraph g(4);
    g.add_edge(0, 3, 1);
    g.add_edge(1, 2, 2);
    auto h = build_conflict_graph(g, VertexOrdering::identity(4));
    CHECK(h.edge_count() == 1);
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 0));
}

TEST_CASE("conflict graph colorings are valid layouts") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        int n = 3 + static_cast<int>(rng() % 5);
        auto g = oracle::random_graph(n, 0.5, rng);
        if (g.m() > 8) continue;
        auto ord = oracle::random_ordering(n, rng);
        auto h = build_conflict_graph(g, ord);
        for (int e = 0; e < g.m(); ++e)
            for (int f = 0; f < g.m(); ++f)
                if (e != f) CHECK(h.adjacent(e, f) == oracle::conflicts(g, ord, e, f));
        auto col = color_exact(h, {}, 1'000'000);
        CHECK(col.k == oracle::min_pages(g, ord));
    }
}

TEST_CASE("longest inversion") {
    WeightedGraph single(2);
    single.add_edge(0, 1, 1);
    CHECK(longest_inversion(single, VertexOrdering::identity(2)).length() <= 1);

    // Separated K3,3 with (i + j) mod 3 + 1 weights, A before B.
    WeightedGraph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k33.add_edge(i, 3 + j, (i + j) % 3 + 1);
    auto inv = longest_inversion(k33, VertexOrdering::identity(6));
    CHECK(inv.length() == 3);
    CHECK(is_inversion(k33, VertexOrdering::identity(6), inv.edges));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        int n = 3 + static_cast<int>(rng() % 5);
        auto g = oracle::random_graph(n, 0.5, rng);
        if (g.m() > 10) continue;
        auto ord = oracle::random_ordering(n, rng);
        auto li = longest_inversion(g, ord);
        CHECK(li.length() == oracle::longest_inversion_length(g, ord));
        CHECK(is_inversion(g, ord, li.edges));
        auto h = build_conflict_graph(g, ord);
        for (std::size_t a = 0; a < li.edges.size(); ++a)
            for (std::size_t b = a + 1; b < li.edges.size(); ++b) CHECK(h.adjacent(li.edges[a], li.edges[b]));
        CHECK(li.length() <= oracle::min_pages(g, ord));
    }
}

TEST_CASE("last vertex of a one-page cycle carries a heaviest edge") {
    // C3 with weights 1, 2, 3: all six orderings.
    WeightedGraph c3(3);
    c3.add_edge(0, 1, 1);
    c3.add_edge(1, 2, 2);
    c3.add_edge(0, 2, 3);
    std::vector<int> o{0, 1, 2};
    do {
        auto l = one_page(c3, o);
        bool heavy = last_vertex_heavy_check(l);
        if (!heavy) CHECK(simulate_sweep(l));
        if (o.back() == 1) CHECK_FALSE(heavy);
    } while (std::next_permutation(o.begin(), o.end()));

    std::mt19937_64 rng(19);
    for (int n = 3; n <= 7; ++n) {
        WeightedGraph c(n);
        for (int i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n, oracle::random_weight(rng));
        auto rep = layout_cycle(c, 0);
        CHECK(last_vertex_heavy_check(rep.layout));
        for (int e = 0; e < n; ++e) c.set_weight(e, 1);
        CHECK(last_vertex_heavy_check(single_page_layout(c, oracle::random_ordering(n, rng))));
    }
    WeightedGraph path(3);
    path.add_edge(0, 1, 1);
    path.add_edge(1, 2, 1);
    CHECK_THROWS(last_vertex_heavy_check(one_page(path, {0, 1, 2})));
}

TEST_CASE("a valid ordering whose reverse is invalid") {
    WeightedGraph g(4);
    g.add_edge(0, 2, 1);
    g.add_edge(1, 3, 2);
    auto l = one_page(g, {0, 1, 2, 3});
    CHECK_FALSE(simulate_sweep(l));
    CHECK(simulate_sweep(single_page_layout(g, l.ordering.reversed())));
}
