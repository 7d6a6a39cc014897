#pragma once

#include "segchi/construction.hpp"

#include <string>

namespace segchi {

struct RenderOptions {
    bool show_probes = false;
    bool show_roots = false;
    double stroke_scale = 1.0;
};

// SVG 1.1 figure: viewBox maps the construction rectangle to the canvas,
// segments as <line>, probes as outlined <rect>, roots shaded. Coordinates
// are decimal approximations for display only.
std::string render_svg(const Construction& c, const RenderOptions& opt = {});

} // namespace segchi
