#include "ocnr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ocnr/numeric.hpp"

namespace ocnr {

namespace {

struct Frame {
  double min_x = 0.0, min_y = 0.0;
  double scale = 1.0;
  double pad = 0.0;
  int size = 480;

  double x(const Complex& z) const { return pad + (z.real() - min_x) * scale; }
  double y(const Complex& z) const { return size - (pad + (z.imag() - min_y) * scale); }
};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void extend(const ConvexPolygon& poly, double& lo_x, double& hi_x, double& lo_y, double& hi_y) {
  for (const Complex& v : poly.vertices) {
    lo_x = std::min(lo_x, v.real());
    hi_x = std::max(hi_x, v.real());
    lo_y = std::min(lo_y, v.imag());
    hi_y = std::max(hi_y, v.imag());
  }
}

Frame fit(const std::vector<const ConvexPolygon*>& layers, const SvgOptions& opt) {
  double lo_x = kInf, hi_x = -kInf, lo_y = kInf, hi_y = -kInf;
  for (const ConvexPolygon* p : layers) extend(*p, lo_x, hi_x, lo_y, hi_y);
  if (lo_x > hi_x) {  // everything empty: unit box around the origin
    lo_x = lo_y = -1.0;
    hi_x = hi_y = 1.0;
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  Frame f;
  f.size = opt.size;
  f.pad = opt.margin * opt.size;
  f.scale = (opt.size - 2.0 * f.pad) / span;
  // center the shorter span
  f.min_x = 0.5 * (lo_x + hi_x) - 0.5 * span;
  f.min_y = 0.5 * (lo_y + hi_y) - 0.5 * span;
  return f;
}

void draw_polygon(std::string& out, const ConvexPolygon& poly, const Frame& f,
                  const char* fill, const char* stroke, const char* extra) {
  if (poly.empty()) return;
  if (poly.size() == 1) {
    out += "  <circle cx=\"" + px(f.x(poly.vertices[0])) + "\" cy=\"" +
           px(f.y(poly.vertices[0])) + "\" r=\"3\" fill=\"" + stroke + "\"/>\n";
    return;
  }
  if (poly.size() == 2) {
    out += "  <line x1=\"" + px(f.x(poly.vertices[0])) + "\" y1=\"" +
           px(f.y(poly.vertices[0])) + "\" x2=\"" + px(f.x(poly.vertices[1])) + "\" y2=\"" +
           px(f.y(poly.vertices[1])) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
    return;
  }
  out += "  <polygon points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i > 0) out += ' ';
    out += px(f.x(poly.vertices[i])) + "," + px(f.y(poly.vertices[i]));
  }
  out += "\" fill=\"";
  out += fill;
  out += "\" stroke=\"";
  out += stroke;
  out += "\" stroke-width=\"1.5\" ";
  out += extra;
  out += "/>\n";
}

void draw_axes(std::string& out, const Frame& f) {
  const Complex origin{0.0, 0.0};
  const double x0 = f.x(origin);
  const double y0 = f.y(origin);
  if (x0 >= 0.0 && x0 <= f.size)
    out += "  <line x1=\"" + px(x0) + "\" y1=\"0\" x2=\"" + px(x0) + "\" y2=\"" +
           std::to_string(f.size) + "\" stroke=\"#d4d4d8\" stroke-width=\"1\"/>\n";
  if (y0 >= 0.0 && y0 <= f.size)
    out += "  <line x1=\"0\" y1=\"" + px(y0) + "\" x2=\"" + std::to_string(f.size) +
           "\" y2=\"" + px(y0) + "\" stroke=\"#d4d4d8\" stroke-width=\"1\"/>\n";
}

void legend_row(std::string& out, int row, const char* color, const char* label) {
  const int y = 18 + 16 * row;
  out += "  <rect x=\"10\" y=\"" + std::to_string(y - 9) +
         "\" width=\"10\" height=\"10\" fill=\"" + std::string(color) + "\"/>\n";
  out += "  <text x=\"25\" y=\"" + std::to_string(y) +
         "\" font-family=\"monospace\" font-size=\"11\" fill=\"#3f3f46\">" + label +
         "</text>\n";
}

}  // namespace

std::string region_svg(const ConvexRegion2D& region, const ConvexPolygon& ess,
                       const SvgOptions& opt) {
  const Frame f = fit({&region.outer, &region.inner, &ess}, opt);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.size) +
         "\" height=\"" + std::to_string(opt.size) + "\" viewBox=\"0 0 " +
         std::to_string(opt.size) + " " + std::to_string(opt.size) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  draw_axes(out, f);
  draw_polygon(out, region.outer, f, "#dbeafe", "#1d4ed8", "fill-opacity=\"0.85\"");
  draw_polygon(out, region.inner, f, "#bbf7d0", "#15803d",
               "fill-opacity=\"0.6\" stroke-dasharray=\"5 3\"");
  draw_polygon(out, ess, f, "#fecaca", "#b91c1c", "fill-opacity=\"0.75\"");
  int row = 0;
  legend_row(out, row++, "#1d4ed8", "outer (certified bounds)");
  if (!region.inner.empty()) legend_row(out, row++, "#15803d", "inner (attained points)");
  if (!ess.empty()) legend_row(out, row++, "#b91c1c", "essential range");
  out += "</svg>\n";
  return out;
}

}  // namespace ocnr
