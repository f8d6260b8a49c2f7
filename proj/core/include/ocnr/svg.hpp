#pragma once

/*
 * Standalone SVG rendering of a computed range: the certified outer hull,
 * the attained inner hull and the essential range drawn as stacked layers
 * over light axes, with a color legend.
 */

#include <string>

#include "ocnr/geometry.hpp"
#include "ocnr/range.hpp"

namespace ocnr {

struct SvgOptions {
  int size = 480;        // canvas edge, px
  double margin = 0.08;  // padding as a fraction of the canvas
};

std::string region_svg(const ConvexRegion2D& region, const ConvexPolygon& ess = {},
                       const SvgOptions& opt = {});

}  // namespace ocnr
