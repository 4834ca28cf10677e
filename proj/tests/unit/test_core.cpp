#include "oracles.hpp"

#include "pql/graph.hpp"
#include "pql/io.hpp"

#include <doctest.h>

using namespace pql;

TEST_CASE("weights are canonical rationals") {
    auto w = Weight::parse("6/4");
    REQUIRE(w);
    CHECK(w->str() == "3/2");
    CHECK(Weight::parse("1/0") == std::nullopt);
    CHECK(Weight::parse("x") == std::nullopt);
    CHECK(Weight::parse("-3")->str() == "-3");
    CHECK(Weight(1) < *Weight::parse("3/2"));
    CHECK(*Weight::parse("2/4") == *Weight::parse("1/2"));
    CHECK(Weight(Weight::integer(1), Weight::integer(3)) + Weight(Weight::integer(2), Weight::integer(3)) == Weight(1));
}

TEST_CASE("trichotomy of weight comparison") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        auto a = oracle::random_weight(rng, 20, 6), b = oracle::random_weight(rng, 20, 6);
        int count = (a < b) + (a == b) + (a > b);
        CHECK(count == 1);
        CHECK((a < b) == (a.value() < b.value()));
    }
}

TEST_CASE("graph JSON parsing") {
    auto g = parse_graph(R"({"n":2,"edges":[[0,1,"3/2"]]})");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.edge(0).w == *Weight::parse("3/2"));

    auto t = parse_graph(R"({"n":3,"edges":[[0,1,1],[1,2,2],[0,2,3]]})");
    CHECK(t.m() == 3);
    CHECK(t.edge(2).w == Weight(3));

    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,0,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1,1],[1,0,2]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1,0.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,5,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph("{"), ParseError);
    try {
        parse_graph(R"({"n":2,"edges":[[0,1,1],[0,0,1]]})");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("edges[1]") != std::string::npos);
    }
}

TEST_CASE("layout of an edgeless graph") {
    auto l = single_page_layout(WeightedGraph(1), VertexOrdering::identity(1));
    auto j = layout_to_json(l);
    CHECK(j == json::parse(R"({"order":[0],"pages":{},"k":0})"));
}

TEST_CASE("graph and layout round trips") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
        Layout l;
        l.graph = g;
        l.ordering = oracle::random_ordering(g.n(), rng);
        l.k = 3;
        for (int e = 0; e < g.m(); ++e) l.page.push_back(static_cast<int>(rng() % 3));
        CHECK(parse_layout(serialize_layout(l), &g) == l);
        CHECK(parse_layout(serialize_layout(l, true)) == l);
    }
}

TEST_CASE("orderings must be permutations") {
    CHECK_THROWS(VertexOrdering({0, 0, 1}));
    CHECK_THROWS(VertexOrdering({0, 2}));
    VertexOrdering o({2, 0, 1});
    CHECK(o.pos(2) == 0);
    CHECK(o.reversed().order() == std::vector<int>{1, 0, 2});
    CHECK(parse_ordering("[1,0]").order() == std::vector<int>{1, 0});
    CHECK(parse_ordering(R"({"order":[1,0]})").order() == std::vector<int>{1, 0});
}

TEST_CASE("contraction") {
    SUBCASE("triangle") {
        WeightedGraph g(3);
        g.add_edge(0, 1, 1);
        g.add_edge(1, 2, 2);
        g.add_edge(0, 2, 3);
        auto c = contract_edge(g, 0, 1);
        CHECK(c.graph.n() == 2);
        CHECK(c.graph.m() == 1);
        CHECK(c.old_to_new[0] == c.merged);
        CHECK(c.old_to_new[1] == c.merged);
    }
    SUBCASE("path keeps the far weight") {
        WeightedGraph g(3);
        g.add_edge(0, 1, 1);
        g.add_edge(1, 2, 7);
        auto c = contract_edge(g, 0, 1);
        REQUIRE(c.graph.m() == 1);
        CHECK(c.graph.edge(0).w == Weight(7));
    }
    SUBCASE("K4 minus an edge against hand-enumerated adjacency") {
        // Vertices 0..3, missing edge 2-3; contract the cycle edge 0-2.
        WeightedGraph g(4);
        g.add_edge(0, 1, 1);
        g.add_edge(0, 2, 2);
        g.add_edge(0, 3, 3);
        g.add_edge(1, 2, 4);
        g.add_edge(1, 3, 5);
        auto c = contract_edge(g, 0, 2);
        int x = c.merged, v1 = c.old_to_new[1], v3 = c.old_to_new[3];
        CHECK(c.graph.n() == 3);
        CHECK(c.graph.m() == 3);
        CHECK(c.graph.find_edge(x, v1));
        CHECK(c.graph.find_edge(x, v3));
        CHECK(c.graph.find_edge(v1, v3));
    }
    SUBCASE("random graphs") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 300; ++i) {
            auto g = oracle::random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
            if (g.m() == 0) continue;
            const auto& e = g.edge(static_cast<int>(rng() % g.m()));
            auto c = contract_edge(g, e.u, e.v);
            CHECK(c.graph.n() == g.n() - 1);
            for (const auto& f : g.edges()) {
                int a = c.old_to_new[f.u], b = c.old_to_new[f.v];
                if (a != b) CHECK(c.graph.find_edge(a, b));
            }
            for (const auto& f : c.graph.edges()) CHECK(f.u != f.v);
        }
    }
}

TEST_CASE("components and induced subgraphs") {
    WeightedGraph g(5);
    g.add_edge(0, 1, 1);
    g.add_edge(3, 4, 2);
    int count = 0;
    auto comp = components(g, &count);
    CHECK(count == 3);
    CHECK(comp[1] == comp[0]);
    CHECK(comp[4] == comp[3]);
    CHECK_FALSE(is_connected(g));
    auto h = induced_subgraph(g, {3, 4});
    CHECK(h.n() == 2);
    CHECK(h.m() == 1);
    CHECK(h.edge(0).w == Weight(2));
}
