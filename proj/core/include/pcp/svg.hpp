#pragma once

#include <string>

#include "pcp/geometry.hpp"
#include "pcp/part.hpp"

namespace pcp {

/// Renders the point set and its partition as a standalone SVG: part
/// polygons with distinct fills, degenerate blocks as markers, the
/// branch label as a caption. Byte-stable for identical input.
std::string render_svg(const PointSet& s, const Partition& p);

}  // namespace pcp
