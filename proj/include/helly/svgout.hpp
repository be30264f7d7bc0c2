#pragma once

// Minimal SVG emission for planar patches and certificate polygons.
// Coordinates arrive pre-rendered as doubles; exactness ends here.

#include <array>
#include <string>
#include <vector>

namespace helly {

struct SvgPoint {
    double x = 0, y = 0;
    int color_class = 0;  // coset or provenance class
};

struct SvgScene {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    std::vector<SvgPoint> points;
    std::vector<std::vector<std::array<double, 2>>> polygons;
};

std::string render_svg(const SvgScene& scene);

}  // namespace helly
