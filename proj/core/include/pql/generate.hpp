#pragma once

#include "pql/graph.hpp"
#include "pql/io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pql {

// ----- complete bipartite graphs ------------------------------------------------------------

// K_{m,n}: A = 0..m-1, B = m..m+n-1, w(a_i b_j) = ((i + j) mod min(m, n)) + 1, so every vertex of
// the larger side sees every weight 1..min(m, n).
WeightedGraph gen_separated_adversarial(int m, int n);

// Separated layout with `left` first and the remaining vertices after it in id order; every edge
// goes to the page of its right endpoint. Uses as many pages as right vertices with an edge,
// for any weights. Throws std::invalid_argument if an edge lies inside one part.
Layout separated_by_right_endpoint(const WeightedGraph& g, const std::vector<int>& left);

// K_{n,n} split into n perfect matchings: a_j = j, b_j = n + j, w(a_j b_{(j+i) mod n}) = i for i = 1..n.
WeightedGraph gen_knn_weights(int n);

// ----- grid analyzer -------------------------------------------------------------------------

// cell[r][c] with r = weight - 1 (row 0 is weight 1) and c = column (a right-part vertex).
struct GridMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<char>> cell;

    GridMatrix() = default;
    GridMatrix(int r, int c) : rows(r), cols(c), cell(r, std::vector<char>(c, 0)) {}
    // Empty string when the shape is consistent; with `ones_per_column` >= 0 also checks column sums.
    std::string check(int ones_per_column = -1) const;
};

struct PeelResult {
    int k = 0;
    std::vector<std::vector<int>> step;        // per cell: removal step (1-based), 0 for empty cells
    std::vector<std::pair<int, int>> path;     // (row, col), columns increasing, rows decreasing
};

// Repeatedly removes the cells whose region "heavier and strictly left" holds no remaining cell.
PeelResult grid_peel(const GridMatrix& m);

// Matrix of a separated layout: columns follow `right_order`; a cell is set when the column vertex
// has an incident edge with that integer weight whose other end lies in `left`.
GridMatrix grid_from_separated(const WeightedGraph& g, const std::vector<int>& left,
                               const std::vector<int>& right_order, int levels);

// Smallest integer k with k >= (3 - sqrt 5) / 4 * n, computed exactly.
int grid_bound(int n);

// ----- interval graphs -----------------------------------------------------------------------

struct IntervalLayout {
    Layout layout;           // vertex i = interval i, unit weights
    std::vector<int> color;  // per vertex
    int omega = 0;
};

// Throws std::invalid_argument on repeated endpoints or a >= b.
IntervalLayout gen_interval_layout(const std::vector<std::pair<long long, long long>>& intervals);
// `count` intervals over the distinct endpoints 0 .. 2 * count - 1.
std::vector<std::pair<long long, long long>> gen_random_intervals(int count, std::mt19937_64& rng);

// ----- rooted 2-trees ------------------------------------------------------------------------

struct StackStep {
    int vertex;
    int u;  // parents; t is stacked onto edge uv
    int v;
};

struct TwoTree {
    WeightedGraph graph;
    int root_u = 0, root_v = 1;
    std::vector<StackStep> steps;  // construction order
    // Copies of the recursive construction: interval [lo, hi) and the enclosing copy (-1 at top).
    struct Copy {
        Weight lo, hi;
        int parent = -1;
        int root_edge = -1;
    };
    std::vector<Copy> copies;
    std::vector<int> edge_copy;    // innermost copy that created the edge; -1 for the root edge
    std::vector<int> origin;       // transform only: vertex of the source tree
    std::vector<int> edge_origin;  // transform only: edge of the source tree
};

// H_k with d = 2k^2 stacked vertices per level unless overridden.
TwoTree gen_hk(int k, std::optional<int> d_override = std::nullopt);

// No stacked vertex lies right of both its parents.
bool is_left_growing(const TwoTree& t, const VertexOrdering& ord);
VertexOrdering sample_left_growing(const TwoTree& t, std::mt19937_64& rng);

// p^2 perturbed copies per stacking step; eps is half the smallest positive weight gap.
TwoTree gen_left_growing_transform(const TwoTree& t, int p);

// ----- forbidden minors ----------------------------------------------------------------------

// F_i with integer weights that rule out every one-page ordering.
WeightedGraph gen_forbidden_minor(int index);

// ----- circular-arc reduction ----------------------------------------------------------------

struct CircularArcInstance {
    long long circumference = 0;
    std::vector<std::pair<long long, long long>> arcs;  // clockwise from first to second; wraps when first > second
    int k = 0;
    std::string check() const;
};

// Random instance with 2 * count distinct endpoints on a circle of that circumference.
CircularArcInstance gen_circular_arcs(int count, int k, std::mt19937_64& rng);
// Arc graph: vertices = arcs, edges between arcs sharing a point.
WeightedGraph circular_arc_graph(const CircularArcInstance& inst);

struct ReductionOutput {
    WeightedGraph graph;
    VertexOrdering ordering;
    int k = 0;
    bool forced_no = false;            // k < |S|
    std::vector<int> cut_arcs;         // arc indices in S, in gadget order
    std::vector<int> left_piece;       // per cut arc: edge index
    std::vector<int> right_piece;
    std::vector<int> sync;             // per cut arc: synchronization edge
    std::vector<int> heavy;            // heavy edge indices
    std::vector<std::vector<int>> arc_edges;  // per arc: its one or two interval edges
};

ReductionOutput gen_npc_reduction(const CircularArcInstance& inst);

// ----- recipes -------------------------------------------------------------------------------

struct InstanceRecipe {
    std::string family;  // knn | grid | interval | hk | hk-transform | minor | npc | separated
    json params;
    std::optional<std::uint64_t> seed;
    json notes;
};
json recipe_to_json(const InstanceRecipe& r);

json grid_to_json(const GridMatrix& m);
GridMatrix grid_from_json(const json& j);
json two_tree_to_json(const TwoTree& t);
json circular_arcs_to_json(const CircularArcInstance& inst);
CircularArcInstance circular_arcs_from_json(const json& j);

}  // namespace pql
