#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace skewband_cli {

// Renders one stretch of the nullity line graph as a standalone SVG.
// values[i] is the nullity at n = from + i.  Coordinates are affine:
//   x = 40 + (n - from) * scale,  y = 15 + (ymax - value) * scale,
// with ymax = max(values); equal x and y scales keep the unit slopes at
// 45 degrees.  The integration tests invert this map, so change it in
// both places or not at all.
void write_line_graph_svg(std::ostream& out, std::int64_t from,
                          const std::vector<std::int64_t>& values,
                          std::int64_t k, double scale);

}  // namespace skewband_cli
