#pragma once

#include "pql/graph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pql {

enum class Family { tree, caterpillar, cycle, legged_cycle, cycle_caterpillar, quadrangle, triangle, k23, k4_minus_e };
std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct ConstructionReport {
    Layout layout;  // k = 1 (k = 0 for edgeless graphs)
    Family family = Family::tree;
    // Named vertices (one entry) and edges (two entries), e.g. "r", "v*", "e*".
    std::map<std::string, std::vector<int>> anchors;
    // Set when a contraction step had to fall back to exact search (see transfer_by_contraction).
    bool fallback = false;
};

// Called after every expansion with the last expanded vertex and the placed suffix S.
using TreeObserver = std::function<void(int v_star, const std::vector<int>& suffix)>;

ConstructionReport layout_tree(const RootedTree& t, const TreeObserver& observer = {});
// `r` must be path.front() or path.back(); it ends up rightmost.
ConstructionReport layout_caterpillar(const Caterpillar& c, int r);
// `v` ends up leftmost. Ties in the greedy go to the lower vertex id.
ConstructionReport layout_cycle(const WeightedGraph& g, int v);
ConstructionReport layout_legged_cycle(const LeggedCycle& l);

// Cycle plus one caterpillar meeting it in r = path.back(), an endpoint of the underlying path.
struct CycleWithCaterpillar {
    WeightedGraph graph;
    std::vector<int> cycle;
    std::vector<int> path;
};
ConstructionReport layout_cycle_plus_caterpillar(const CycleWithCaterpillar& g);

// 4-cycle with caterpillars whose underlying paths start at two opposite cycle vertices.
// cycle = {a, b, c, d} in cyclic order, path_a.front() == a, path_c.front() == c.
struct QuadrangleInstance {
    WeightedGraph graph;
    std::vector<int> cycle;
    std::vector<int> path_a;
    std::vector<int> path_c;
};
ConstructionReport layout_quadrangle(const QuadrangleInstance& q);

// Triangle {a, b, c} with caterpillars whose paths start at a and b.
struct TriangleInstance {
    WeightedGraph graph;
    std::vector<int> cycle;
    std::vector<int> path_a;
    std::vector<int> path_b;
};
ConstructionReport layout_triangle_case(const TriangleInstance& t);

ConstructionReport layout_k23(const WeightedGraph& g);
ConstructionReport layout_k4_minus_e(const WeightedGraph& g);

struct TransferResult {
    Layout layout;  // layout of contraction.graph
    ContractionResult contraction;
    // "sorted-middle" (merged vertex at u, neighbors sorted), "merge-right" (merged vertex at v)
    // or "exact-search".
    std::string method;
};

// Turns a valid 1-page layout of G into one of G/e0, where e0 is strictly the lightest edge.
// Tries the sorted-middle placement first; when that is invalid, the merged vertex at the
// position of v; when both are invalid, an exact ordering search on G/e0 (n <= 20).
TransferResult transfer_by_contraction(const Layout& layout, int e0);

}  // namespace pql
