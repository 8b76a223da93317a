#include "schur/svg_plot.hpp"

#include <cstdio>

namespace schur::io {

double svg_x(Complex u) { return 256.0 * (1.0 + u.real()); }
double svg_y(Complex u) { return 256.0 * (1.0 - u.imag()); }

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void circle(std::string& s, double cx, double cy, double r, const std::string& attrs) {
    s += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + px(r) + "\" " + attrs +
         "/>\n";
}

}  // namespace

std::string render_plot_svg(const std::vector<Complex>& nodes, Complex query,
                            const VariabilityRegion& region,
                            const std::vector<Complex>& boundary_samples,
                            const PlotOptions& opts) {
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"#ffffff\"/>\n";

    if (opts.grid > 0) {
        for (int g = -opts.grid; g <= opts.grid; ++g) {
            const double t = 256.0 * (1.0 + static_cast<double>(g) / opts.grid);
            s += "<line x1=\"" + px(t) + "\" y1=\"0\" x2=\"" + px(t) +
                 "\" y2=\"512\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
            s += "<line x1=\"0\" y1=\"" + px(t) + "\" x2=\"512\" y2=\"" + px(t) +
                 "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        }
    }

    // unit circle
    circle(s, 256.0, 256.0, 256.0, "fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"");

    switch (region.kind) {
        case VariabilityRegion::Kind::disk:
            circle(s, svg_x(region.disk.center), svg_y(region.disk.center),
                   256.0 * region.disk.radius,
                   "class=\"region\" fill=\"#3a7bd5\" fill-opacity=\"0.25\" "
                   "stroke=\"#3a7bd5\" stroke-width=\"1\"");
            break;
        case VariabilityRegion::Kind::point:
            circle(s, svg_x(region.point), svg_y(region.point), 2.5,
                   "class=\"region-point\" fill=\"#3a7bd5\"");
            break;
        case VariabilityRegion::Kind::empty:
            s += "<text x=\"256\" y=\"256\" text-anchor=\"middle\" font-family=\"monospace\" "
                 "font-size=\"28\" fill=\"#aa2222\">EMPTY</text>\n";
            break;
    }

    for (Complex n : nodes)
        circle(s, svg_x(n), svg_y(n), 3.0, "class=\"node\" fill=\"#d62728\"");
    circle(s, svg_x(query), svg_y(query), 3.0,
           "class=\"query\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"");

    for (Complex b : boundary_samples)
        circle(s, svg_x(b), svg_y(b), 1.5, "class=\"sample\" fill=\"#ff9900\"");

    s += "</svg>\n";
    return s;
}

}  // namespace schur::io
