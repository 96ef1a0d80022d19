#pragma once

#include "atfkit/atbd.hpp"

#include <string>

namespace atf {

struct RenderOptions {
    int scale = 40;  // pixels per lattice unit
    bool show_grid = false;
    bool show_labels = false;
};

// Solid boundary, dashed cuts, nodes as crosses, monotone point as a filled dot.
std::string render_svg(const ATBD& d, const RenderOptions& opts = {});

// Exact decimal rounding to six places, halves away from zero.
std::string decimal6(const Rat& r);

}  // namespace atf
