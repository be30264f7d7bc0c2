#include "helly/svgout.hpp"

#include <cstdio>

namespace helly {

namespace {

const char* kPalette[] = {"#1f6fb2", "#d1495b", "#3a9d58", "#e0a100", "#7851a9",
                          "#19a0aa", "#b34f18", "#5b5f97", "#8c2155", "#4c6b1f"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    const double scale = 60.0;
    const double pad = 20.0;
    double w = (scene.max_x - scene.min_x) * scale + 2 * pad;
    double h = (scene.max_y - scene.min_y) * scale + 2 * pad;
    auto tx = [&](double x) { return pad + (x - scene.min_x) * scale; };
    auto ty = [&](double y) { return h - pad - (y - scene.min_y) * scale; };  // y up
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "<rect width=\"" + num(w) + "\" height=\"" + num(h) + "\" fill=\"white\"/>\n";
    for (const auto& poly : scene.polygons) {
        out += "<polygon points=\"";
        for (size_t i = 0; i < poly.size(); ++i) {
            if (i) out += " ";
            out += num(tx(poly[i][0])) + "," + num(ty(poly[i][1]));
        }
        out += "\" fill=\"#f2c94c\" fill-opacity=\"0.35\" stroke=\"#c2201f\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : scene.points) {
        const char* color = kPalette[p.color_class >= 0 ? p.color_class % 10 : 0];
        out += "<circle cx=\"" + num(tx(p.x)) + "\" cy=\"" + num(ty(p.y)) +
               "\" r=\"3.2\" fill=\"" + std::string(color) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace helly
