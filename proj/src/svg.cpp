#include <algorithm>
#include <cstdio>
#include <string>

#include "matchstick/geometry.hpp"

namespace matchstick {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string fill_for(const Rational& charge) {
  if (charge > 0) return "#d62728";
  if (charge < 0) return "#1f77b4";
  return "#7f7f7f";
}

}  // namespace

std::string render_svg(const GeometricMap& gmap, const SvgOptions& options) {
  const double s = options.scale;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (VertexId v : gmap.map.vertices()) {
    auto it = gmap.coords.find(v);
    if (it == gmap.coords.end()) continue;
    // SVG y grows downward.
    const double x = it->second.x * s, y = -it->second.y * s;
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double width = max_x - min_x, height = max_y - min_y;
  const double extent = std::max({width, height, s});
  const double margin = 0.05 * extent;
  min_x -= margin;
  min_y -= margin;
  width += 2 * margin;
  height += 2 * margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(min_x) + " " + num(min_y) + " " +
         num(width) + " " + num(height) + "\" width=\"" + num(width) + "\" height=\"" + num(height) + "\">\n";
  out += "<g stroke=\"#000000\" stroke-width=\"" + num(0.03 * s) + "\" stroke-linecap=\"round\">\n";
  for (const auto& [u, v] : gmap.map.edges()) {
    auto pu = gmap.coords.find(u), pv = gmap.coords.find(v);
    if (pu == gmap.coords.end() || pv == gmap.coords.end()) continue;
    out += "<line x1=\"" + num(pu->second.x * s) + "\" y1=\"" + num(-pu->second.y * s) + "\" x2=\"" +
           num(pv->second.x * s) + "\" y2=\"" + num(-pv->second.y * s) + "\"/>\n";
  }
  out += "</g>\n<g>\n";
  for (VertexId v : gmap.map.vertices()) {
    auto it = gmap.coords.find(v);
    if (it == gmap.coords.end()) continue;
    std::string fill = "#000000";
    if (auto c = options.charges.find(v); c != options.charges.end()) fill = fill_for(c->second);
    const std::string cx = num(it->second.x * s), cy = num(-it->second.y * s);
    out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + num(0.06 * s) + "\" fill=\"" + fill + "\"/>\n";
    if (options.labels) {
      out += "<text x=\"" + num(it->second.x * s + 0.08 * s) + "\" y=\"" + num(-it->second.y * s - 0.08 * s) +
             "\" font-size=\"" + num(0.2 * s) + "\" font-family=\"sans-serif\">" + std::to_string(v) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace matchstick
