#pragma once

#include "pql/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pql {

enum class PairKind { nesting, pseudo_nesting, crossing };
std::string to_string(PairKind k);

// Same-page edges e = uv, e' = u'v' with w(e) > w(e') and u, u' before v before v'.
struct ForbiddenPair {
    int e;
    int e_prime;
    PairKind kind;
    int vertex;  // right endpoint of e, where the sweep fails
};

std::vector<ForbiddenPair> find_forbidden_pairs(const Layout& layout);

struct SweepViolation {
    int vertex;  // sweep position where the pull fails
    int edge;    // ending edge that is not among the smallest
    int blocker; // lighter edge that stays in the queue
    int page;
};

// Left-to-right sweep with one real priority queue per page.
std::optional<SweepViolation> simulate_sweep(const Layout& layout);
inline bool is_valid(const Layout& layout) { return !simulate_sweep(layout); }

struct ConflictGraph {
    int m = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists over edge indices
    std::vector<std::pair<int, int>> pairs;  // (heavier-ending-first, other), as found
    bool adjacent(int a, int b) const;
    int edge_count() const { return static_cast<int>(pairs.size()); }
};

ConflictGraph build_conflict_graph(const WeightedGraph& g, const VertexOrdering& ord);

// Edges e_1..e_k: right endpoints strictly decreasing along the spine, all left
// endpoints before the leftmost right endpoint, weights strictly increasing.
struct Inversion {
    std::vector<int> edges;  // e_1 .. e_k
    int left_end = -1;       // v_k
    int right_end = -1;      // v_1
    int length() const { return static_cast<int>(edges.size()); }
};

Inversion longest_inversion(const WeightedGraph& g, const VertexOrdering& ord);
bool is_inversion(const WeightedGraph& g, const VertexOrdering& ord, const std::vector<int>& edges);

// The rightmost vertex touches a maximum-weight edge. Throws if the graph is not a single cycle.
bool last_vertex_heavy_check(const Layout& layout);
bool is_cycle_graph(const WeightedGraph& g);

}  // namespace pql
