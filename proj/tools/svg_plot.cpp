#include "svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace skewband_cli {

namespace {

constexpr double kMarginLeft = 40.0;
constexpr double kMarginTop = 15.0;
constexpr double kMarginRight = 15.0;
constexpr double kMarginBottom = 30.0;

std::string px(double v) {
  char buf[48];
  auto [p, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  (void)ec;
  return std::string(buf, p);
}

// largest of 1, 2, 5, 10, 20, ... giving at most `slots` ticks
std::int64_t tick_step(std::int64_t range, std::int64_t slots) {
  std::int64_t step = 1;
  for (;;) {
    for (std::int64_t mult : {1, 2, 5}) {
      std::int64_t s = step * mult;
      if (range / s <= slots) return s;
    }
    step *= 10;
  }
}

}  // namespace

void write_line_graph_svg(std::ostream& out, std::int64_t from,
                          const std::vector<std::int64_t>& values,
                          std::int64_t k, double scale) {
  const std::int64_t count = static_cast<std::int64_t>(values.size());
  const std::int64_t span = count > 0 ? count - 1 : 0;
  std::int64_t ymax = 1;
  for (std::int64_t v : values) ymax = std::max(ymax, v);

  const double width = kMarginLeft + span * scale + kMarginRight;
  const double height = kMarginTop + ymax * scale + kMarginBottom;
  const double base_y = kMarginTop + ymax * scale;  // value 0

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width)
      << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width)
      << " " << px(height) << "\">\n";
  out << "  <title>nullity for bandwidth " << k << "</title>\n";

  // axes
  out << "  <line x1=\"" << px(kMarginLeft) << "\" y1=\"" << px(base_y)
      << "\" x2=\"" << px(kMarginLeft + span * scale) << "\" y2=\""
      << px(base_y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << px(kMarginLeft) << "\" y1=\"" << px(kMarginTop)
      << "\" x2=\"" << px(kMarginLeft) << "\" y2=\"" << px(base_y)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // x ticks and labels
  const std::int64_t xstep = tick_step(span > 0 ? span : 1, 12);
  for (std::int64_t n = from; n <= from + span; ++n) {
    if (n % xstep != 0) continue;
    const double x = kMarginLeft + (n - from) * scale;
    out << "  <line x1=\"" << px(x) << "\" y1=\"" << px(base_y) << "\" x2=\""
        << px(x) << "\" y2=\"" << px(base_y + 4) << "\" stroke=\"black\""
        << " stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << px(x) << "\" y=\"" << px(base_y + 16)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  // y ticks and labels
  const std::int64_t ystep = tick_step(ymax, 10);
  for (std::int64_t v = 0; v <= ymax; v += ystep) {
    const double y = kMarginTop + (ymax - v) * scale;
    out << "  <line x1=\"" << px(kMarginLeft - 4) << "\" y1=\"" << px(y)
        << "\" x2=\"" << px(kMarginLeft) << "\" y2=\"" << px(y)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << px(kMarginLeft - 7) << "\" y=\"" << px(y + 3)
        << "\" font-size=\"10\" text-anchor=\"end\">" << v << "</text>\n";
  }

  // the graph itself
  if (count > 0) {
    out << "  <polyline fill=\"none\" stroke=\"#1446a0\" stroke-width=\"1.5\""
        << " points=\"";
    for (std::int64_t i = 0; i < count; ++i) {
      if (i > 0) out << " ";
      const double x = kMarginLeft + i * scale;
      const double y =
          kMarginTop + (ymax - values[static_cast<std::size_t>(i)]) * scale;
      out << px(x) << "," << px(y);
    }
    out << "\"/>\n";
    // dots on zeros and local maxima, echoing how the plot is read
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t v = values[static_cast<std::size_t>(i)];
      const bool peak = i > 0 && i + 1 < count &&
                        values[static_cast<std::size_t>(i - 1)] < v &&
                        values[static_cast<std::size_t>(i + 1)] < v;
      if (v != 0 && !peak) continue;
      const double x = kMarginLeft + i * scale;
      const double y = kMarginTop + (ymax - v) * scale;
      out << "  <circle cx=\"" << px(x) << "\" cy=\"" << px(y)
          << "\" r=\"2.2\" fill=\"" << (peak ? "#b3001b" : "#1446a0")
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace skewband_cli
