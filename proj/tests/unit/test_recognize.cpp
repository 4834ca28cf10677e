#include "families.hpp"
#include "oracles.hpp"

#include "pql/generate.hpp"
#include "pql/recognize.hpp"
#include "pql/solve.hpp"
#include "pql/validate.hpp"

#include <doctest.h>

using namespace pql;

namespace {

WeightedGraph complete(int n) {
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
    return g;
}

}  // namespace

TEST_CASE("trees are yes-instances") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        auto t = oracle::random_tree(1 + static_cast<int>(rng() % 20), rng);
        auto v = recognize_pqn1(t);
        REQUIRE(v.yes);
        REQUIRE(v.plans.size() == 1);
        CHECK(v.plans[0].family == Family::tree);
        CHECK_FALSE(simulate_sweep(layout_from_verdict(t, v).layout));
    }
}

TEST_CASE("K2,3 is yes, K4 is F1") {
    WeightedGraph k23(5);
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 5; ++v) k23.add_edge(u, v, 1);
    auto v = recognize_pqn1(k23);
    REQUIRE(v.yes);
    CHECK(v.plans[0].family == Family::k23);

    auto k4 = recognize_pqn1(complete(4));
    REQUIRE_FALSE(k4.yes);
    CHECK(k4.minor->index == 1);
    auto model = extract_minor_model(complete(4), 1);
    CHECK(check_minor_model(complete(4), model).empty());
    for (const auto& b : model.branch) CHECK(b.size() == 1);
    CHECK_THROWS_AS(extract_minor_model(k23, 1), std::invalid_argument);
    CHECK_THROWS_AS(extract_minor_model(complete(4), 2), std::invalid_argument);
}

TEST_CASE("a long cycle with a spider is F4") {
    // Cycle 0..5, spider at 0 with legs 0-6-7 and 0-8-9.
    WeightedGraph g(10);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6, 1);
    g.add_edge(0, 6, 1);
    g.add_edge(6, 7, 1);
    g.add_edge(0, 8, 1);
    g.add_edge(8, 9, 1);
    auto v = recognize_pqn1(g);
    REQUIRE_FALSE(v.yes);
    CHECK(v.minor->index == 4);
    CHECK(oracle::is_minor_model(g, forbidden_minor_shape(4), v.minor->branch));
    CHECK(check_minor_model(g, *v.minor).empty());
}

TEST_CASE("minor shapes are the patterns themselves") {
    for (int i = 1; i <= 8; ++i) {
        auto g = forbidden_minor_shape(i);
        auto v = recognize_pqn1(g);
        REQUIRE_FALSE(v.yes);
        CHECK(v.minor->index == i);
        CHECK(oracle::is_minor_model(g, g, v.minor->branch));
    }
}

TEST_CASE("random no-instances carry valid minor models") {
    std::mt19937_64 rng(53);
    int no = 0;
    for (int i = 0; i < 3000 && no < 400; ++i) {
        int n = 4 + static_cast<int>(rng() % 9);
        double p = std::uniform_real_distribution<double>(0.15, 0.5)(rng);
        auto g = oracle::random_graph(n, p, rng);
        auto v = recognize_pqn1(g);
        if (v.yes) {
            oracle::randomize_weights(g, rng);
            auto planned = layout_from_verdict(g, recognize_pqn1(g));
            CHECK_FALSE(simulate_sweep(planned.layout));
            continue;
        }
        ++no;
        CHECK(oracle::is_minor_model(g, forbidden_minor_shape(v.minor->index), v.minor->branch));
        CHECK(check_minor_model(g, *v.minor).empty());
        CHECK(g.m() > 0);
    }
    CHECK(no > 100);
}

TEST_CASE("yes-instances have at most n + 2 edges") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n, true))
            if (recognize_pqn1(g).yes) CHECK(g.m() <= g.n() + 2);
}

TEST_CASE("disconnected graphs: yes iff every component is") {
    std::mt19937_64 rng(57);
    auto tri = complete(3);
    WeightedGraph two(7);
    for (const auto& e : tri.edges()) two.add_edge(e.u, e.v, oracle::random_weight(rng));
    for (int u = 3; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) two.add_edge(u, v, oracle::random_weight(rng));
    auto v = recognize_pqn1(two);
    CHECK_FALSE(v.yes);
    CHECK(v.component == 3);
    CHECK(universal_pqn1_oracle(two).verdict == UniversalResult::Verdict::no);

    WeightedGraph ok(7);
    ok.add_edge(0, 1, 1);
    ok.add_edge(1, 2, 2);
    ok.add_edge(0, 2, 3);
    ok.add_edge(3, 4, 1);
    ok.add_edge(4, 5, 2);
    ok.add_edge(5, 6, 3);
    ok.add_edge(3, 6, 4);
    auto yes = recognize_pqn1(ok);
    REQUIRE(yes.yes);
    CHECK(yes.plans.size() == 2);
    CHECK(universal_pqn1_oracle(ok).verdict == UniversalResult::Verdict::yes);
    // Small disconnected graphs against the brute-force oracle.
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n, false))
            if (!is_connected(g) && g.m() <= 5) CHECK(recognize_pqn1(g).yes == oracle::universal_one_page(g));
}

TEST_CASE("constructors dispatched from the verdict accept random weights") {
    std::mt19937_64 rng(59);
    for (int n = 1; n <= 6; ++n)
        for (auto g : oracle::graphs_up_to_iso(n, true)) {
            auto v = recognize_pqn1(g);
            if (!v.yes) continue;
            for (int rep = 0; rep < 20; ++rep) {
                oracle::randomize_weights(g, rng, 5, 2);
                auto planned = layout_from_verdict(g, recognize_pqn1(g));
                CHECK_FALSE(simulate_sweep(planned.layout));
                CHECK(planned.layout.k <= 1);
            }
        }
}
