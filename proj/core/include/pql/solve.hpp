#pragma once

#include "pql/graph.hpp"
#include "pql/validate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pql {

struct SolveOptions {
    long long node_budget = 20'000'000;  // search nodes per solver call
    int max_vertices = 10;               // free-order guard
    int max_universal_edges = 8;         // universal oracle: exhaustive up to this many edges
    int universal_samples = 20000;       // random weight orders tried beyond the exhaustive budget
    std::uint64_t seed = 1;
    int threads = 0;  // 0: PQL_THREADS or hardware concurrency
};

enum class SolveStatus { optimal, budget_exceeded };
std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    int k = 0;            // optimum, or best upper bound when the budget ran out
    int lower_bound = 0;  // proven
    std::optional<Layout> witness;
    std::vector<int> clique;  // pairwise conflicting edges under the witness ordering
    long long nodes = 0;
};

struct Coloring {
    int k = 0;
    std::vector<int> color;
    std::vector<int> clique;
    bool exact = true;
    long long nodes = 0;
};

// Exact chromatic number by saturation-degree branch and bound.
Coloring color_exact(const ConflictGraph& h, std::vector<int> seed_clique, long long node_budget);
// Greedy largest-first-saturation coloring, used as the initial upper bound.
Coloring color_dsatur_greedy(const ConflictGraph& h);

SolveResult solve_fixed_order(const WeightedGraph& g, const VertexOrdering& ord, const SolveOptions& opt = {});
SolveResult solve_free_order(const WeightedGraph& g, const SolveOptions& opt = {});

// Minimum pages over separated orderings: `left` first (any order), then the rest.
// Throws std::invalid_argument if an edge does not cross the bipartition.
SolveResult solve_separated(const WeightedGraph& g, const std::vector<int>& left, const SolveOptions& opt = {});

// Exact decision "some ordering fits on one page" by dynamic programming over placed sets.
std::optional<VertexOrdering> find_one_page_ordering(const WeightedGraph& g);
// Same on an explicit rank per edge (lower rank = lighter).
std::optional<VertexOrdering> find_one_page_ordering(const WeightedGraph& g, const std::vector<int>& rank);

struct UniversalResult {
    enum class Verdict { yes, no, budget_exceeded } verdict = Verdict::yes;
    std::vector<int> witness_rank;  // per edge, when verdict == no
    WeightedGraph witness;          // the graph with weights rank + 1
    bool sampled = false;           // witness found by sampling beyond the exhaustive budget
    long long orders_checked = 0;
};
std::string to_string(UniversalResult::Verdict v);

// pqn(G) <= 1 for every weight function? Exhaustive over strict total orders of the edges.
UniversalResult universal_pqn1_oracle(const WeightedGraph& g, const SolveOptions& opt = {});

// Orbit id per vertex under weight-preserving automorphisms (smallest member as id).
// Falls back to singleton orbits when the search exceeds `node_budget`.
std::vector<int> automorphism_orbits(const WeightedGraph& g, long long node_budget = 200000);

int solver_threads(const SolveOptions& opt);

}  // namespace pql
