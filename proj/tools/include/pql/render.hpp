#pragma once

#include "pql/graph.hpp"

#include <string>
#include <vector>

namespace pql {

struct RenderSpec {
    Layout layout;
    std::vector<std::string> palette;  // per page; a fixed palette is used when empty
    int spacing = 60;                  // pixels between spine vertices
    bool weights = false;              // label arcs with their weights
};

std::string render_arc_diagram(const RenderSpec& spec);
std::string render_dot(const RenderSpec& spec);

}  // namespace pql
