#include "pql/render.hpp"

#include <algorithm>
#include <sstream>

namespace pql {

namespace {

const std::vector<std::string> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                           "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string color_of(const RenderSpec& spec, int page) {
    const auto& p = spec.palette.empty() ? kPalette : spec.palette;
    return p[page % p.size()];
}

std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        switch (c) {
            case '&': r += "&amp;"; break;
            case '<': r += "&lt;"; break;
            case '>': r += "&gt;"; break;
            case '"': r += "&quot;"; break;
            default: r += c;
        }
    }
    return r;
}

}  // namespace

std::string render_arc_diagram(const RenderSpec& spec) {
    const auto& l = spec.layout;
    l.check();
    const auto& g = l.graph;
    int n = g.n(), step = spec.spacing, margin = step / 2;
    int max_span = 1;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = l.span(e);
        max_span = std::max(max_span, l.ordering.pos(b) - l.ordering.pos(a));
    }
    int top = max_span * step / 2 + margin + (spec.weights ? 14 : 0);
    int width = std::max(1, n) * step, height = top + 40;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    s << "<line x1=\"" << margin << "\" y1=\"" << top << "\" x2=\"" << width - margin << "\" y2=\"" << top
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    auto x_of = [&](int v) { return margin + l.ordering.pos(v) * step; };
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = l.span(e);
        int x1 = x_of(a), x2 = x_of(b), r = (x2 - x1) / 2;
        s << "<path d=\"M " << x1 << ' ' << top << " A " << r << ' ' << r << " 0 0 1 " << x2 << ' ' << top
          << "\" fill=\"none\" stroke=\"" << color_of(spec, l.page[e]) << "\" stroke-width=\"2\" data-page=\""
          << l.page[e] << "\"/>\n";
        if (spec.weights)
            s << "<text x=\"" << (x1 + x2) / 2 << "\" y=\"" << top - r - 4
              << "\" font-size=\"11\" text-anchor=\"middle\">" << escape(g.edge(e).w.str()) << "</text>\n";
    }
    for (int i = 0; i < n; ++i) {
        int v = l.ordering.at(i);
        s << "<circle cx=\"" << x_of(v) << "\" cy=\"" << top << "\" r=\"4\" fill=\"#000\"/>\n";
        s << "<text x=\"" << x_of(v) << "\" y=\"" << top + 20 << "\" font-size=\"12\" text-anchor=\"middle\">"
          << escape(g.label(v)) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string render_dot(const RenderSpec& spec) {
    const auto& l = spec.layout;
    l.check();
    const auto& g = l.graph;
    std::ostringstream s;
    s << "graph layout {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int i = 0; i < g.n(); ++i) {
        int v = l.ordering.at(i);
        s << "  " << v << " [label=\"" << escape(g.label(v)) << "\"];\n";
    }
    if (g.n() > 1) {
        s << "  ";
        for (int i = 0; i < g.n(); ++i) s << (i ? " -- " : "") << l.ordering.at(i);
        s << " [style=invis];\n";
    }
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = l.span(e);
        s << "  " << a << " -- " << b << " [color=\"" << color_of(spec, l.page[e]) << "\", constraint=false";
        if (spec.weights) s << ", label=\"" << escape(g.edge(e).w.str()) << "\"";
        s << "];\n";
    }
    s << "}\n";
    return s.str();
}

}  // namespace pql
