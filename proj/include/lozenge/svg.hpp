#pragma once

// SVG pictures of regions and tilings.

#include "lozenge/dual_graph.hpp"
#include "lozenge/lattice_region.hpp"
#include "lozenge/matching.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lozenge {

struct SvgStyle {
  double unit = 24.0;
  std::string cell_fill = "#f4f1e8";
  std::string hole_fill = "#8c8c8c";
  std::string stroke = "#444444";
  /// Lozenge fills by the direction of the edge the two triangles share.
  std::array<std::string, 3> lozenge_fill{"#e9b44c", "#9b2915", "#50a2a7"};
};

namespace detail {

struct Canvas {
  double min_x = 0, max_y = 0, unit = 1, pad = 1;

  std::pair<double, double> at(LatticePoint p) const {
    const double x = p.a + 0.5 * p.b;
    const double y = 0.8660254037844386 * p.b;
    return {(x - min_x + pad) * unit, (max_y - y + pad) * unit};
  }
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string polygon(const Canvas& cv, const std::vector<LatticePoint>& pts, const std::string& fill,
                           const std::string& stroke, double width) {
  std::string s = "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [x, y] = cv.at(pts[i]);
    s += (i ? " " : "") + fmt(x) + "," + fmt(y);
  }
  return s + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

// Rhombus outline of the lozenge made of an Up cell and an adjacent Down cell.
inline std::pair<std::vector<LatticePoint>, int> lozenge_outline(const TriCell& upc, const TriCell& downc) {
  const int i = upc.col, j = upc.row;
  if (downc.col == i && downc.row == j) return {{{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}, 0};
  if (downc.col == i - 1 && downc.row == j) return {{{i, j}, {i + 1, j}, {i, j + 1}, {i - 1, j + 1}}, 1};
  return {{{i, j}, {i + 1, j - 1}, {i + 1, j}, {i, j + 1}}, 2};
}

}  // namespace detail

/// Region (and its holes, given as cells) with an optional tiling drawn as
/// rhombi. `tiling` holds edge ids of dual_graph(region).
inline std::string render_svg(const Region& region, const std::vector<TriCell>& holes,
                              const std::optional<Matching>& tiling = std::nullopt, const SvgStyle& style = {}) {
  std::vector<TriCell> everything(region.cells().begin(), region.cells().end());
  everything.insert(everything.end(), holes.begin(), holes.end());
  detail::Canvas cv;
  cv.unit = style.unit;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& c : everything) {
    for (const auto& p : corners(c)) {
      const double x = p.a + 0.5 * p.b;
      const double y = 0.8660254037844386 * p.b;
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
  }
  cv.min_x = min_x;
  cv.max_y = max_y;
  const double width = (max_x - min_x + 2 * cv.pad) * cv.unit;
  const double height = (max_y - min_y + 2 * cv.pad) * cv.unit;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fmt(width)
      << "\" height=\"" << detail::fmt(height) << "\" viewBox=\"0 0 " << detail::fmt(width) << " "
      << detail::fmt(height) << "\">\n";
  out << "<title>" << region.label() << "</title>\n";
  auto tri = [&](const TriCell& c) {
    const auto k = corners(c);
    return std::vector<LatticePoint>(k.begin(), k.end());
  };
  out << "<g id=\"holes\">\n";
  for (const auto& c : holes) out << detail::polygon(cv, tri(c), style.hole_fill, style.hole_fill, 0.5);
  out << "</g>\n<g id=\"cells\">\n";
  for (const auto& c : region.cells()) out << detail::polygon(cv, tri(c), style.cell_fill, "#c8c2b0", 0.5);
  out << "</g>\n";
  if (tiling) {
    out << "<g id=\"tiling\">\n";
    const DualGraph g = dual_graph(region);
    for (EdgeId e : tiling->edges) {
      TriCell a = region.cells()[g.edge(e).u];
      TriCell b = region.cells()[g.edge(e).v];
      if (a.orient != Orientation::Up) std::swap(a, b);
      auto [pts, kind] = detail::lozenge_outline(a, b);
      out << detail::polygon(cv, pts, style.lozenge_fill[static_cast<std::size_t>(kind)], style.stroke, 1.0);
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lozenge
