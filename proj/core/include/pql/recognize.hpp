#pragma once

#include "pql/construct.hpp"
#include "pql/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pql {

// Topology of F_1..F_8 with unit weights; vertices labelled "a", "b", ... .
WeightedGraph forbidden_minor_shape(int index);

struct MinorModel {
    int index = 0;                               // F_index
    std::vector<std::vector<int>> branch;        // per pattern vertex: vertex set of G
    std::vector<std::pair<int, int>> edge_map;   // per pattern edge: an edge of G between the branch sets
};

// Empty when the model realizes F_index in g, else a reason.
std::string check_minor_model(const WeightedGraph& g, const MinorModel& model);

// How one connected component is laid out.
struct ComponentPlan {
    std::vector<int> vertices;  // ascending
    Family family = Family::tree;
    int root = -1;               // tree root
    std::vector<int> cycle;      // cyclic order
    std::vector<int> path;       // first caterpillar path, starting on the cycle
    std::vector<int> path2;      // second caterpillar path (triangle, quadrangle)
};

struct RecognitionVerdict {
    bool yes = true;
    std::vector<ComponentPlan> plans;  // one per component when yes
    std::optional<MinorModel> minor;   // when no
    int component = -1;                // smallest vertex of the offending component
};

RecognitionVerdict recognize_pqn1(const WeightedGraph& g);

// Throws std::invalid_argument on yes-instances or when the verdict names another F_i.
MinorModel extract_minor_model(const WeightedGraph& g, int index);

// One-page layout assembled from the plans of a yes-verdict, components left to right.
struct PlannedLayout {
    Layout layout;
    std::vector<ConstructionReport> reports;  // per component, in local ids of that component
    bool fallback = false;
};
PlannedLayout layout_from_verdict(const WeightedGraph& g, const RecognitionVerdict& verdict);

}  // namespace pql
