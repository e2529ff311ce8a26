#pragma once

#include <span>
#include <string>

#include "epg/grid.hpp"

namespace epg {

/// Static SVG drawing: grid, one polyline per path (overlapping paths are
/// offset into separate lanes), bend markers, and stroke colors from the
/// optional 1..4 coloring (parallel to repr.paths).
std::string render_svg(const EpgRepresentation& repr, std::span<const int> colors = {});

}  // namespace epg
