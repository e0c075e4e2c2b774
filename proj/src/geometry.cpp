#include "locbox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace locbox {

bool box_valid(const Box& b) {
  return std::isfinite(b.x1) && std::isfinite(b.y1) && std::isfinite(b.x2) &&
         std::isfinite(b.y2) && b.x1 < b.x2 && b.y1 < b.y2;
}

bool gridbox_valid(const GridBox& g, int grid) {
  return 1 <= g.l && g.l <= g.r && g.r <= grid && 1 <= g.t && g.t <= g.b && g.b <= grid;
}

double intersection_area(const Box& a, const Box& b) {
  double w = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  double h = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

double iou(const Box& a, const Box& b) {
  double inter = intersection_area(a, b);
  if (inter <= 0.0) return 0.0;
  double uni = a.area() + b.area() - inter;
  return inter / uni;
}

Box clip_to_canvas(const Box& b, double canvas_w, double canvas_h) {
  Box c;
  c.x1 = std::clamp(b.x1, 0.0, canvas_w);
  c.y1 = std::clamp(b.y1, 0.0, canvas_h);
  c.x2 = std::clamp(b.x2, 0.0, canvas_w);
  c.y2 = std::clamp(b.y2, 0.0, canvas_h);
  return c;
}

Region enlarge(const Box& b, double gamma, double canvas_w, double canvas_h, int grid) {
  if (!box_valid(b)) throw std::invalid_argument("enlarge: invalid box");
  if (gamma < 1.0) throw std::invalid_argument("enlarge: gamma must be >= 1");
  if (grid < 1) throw std::invalid_argument("enlarge: grid must be >= 1");
  double hw = 0.5 * gamma * b.width();
  double hh = 0.5 * gamma * b.height();
  Box scaled{b.cx() - hw, b.cy() - hh, b.cx() + hw, b.cy() + hh};
  Box clipped = clip_to_canvas(scaled, canvas_w, canvas_h);
  if (!box_valid(clipped))
    throw std::runtime_error("enlarge: region degenerates, box outside canvas");
  return Region{clipped, grid};
}

namespace {

// Shared cell-boundary arithmetic. project_to_grid and grid_to_box must
// evaluate the identical expression so cell-aligned boxes round-trip exactly.
double edge_x(const Region& r, int i) {
  return r.bounds.x1 + (r.bounds.width() * static_cast<double>(i)) / static_cast<double>(r.grid);
}

double edge_y(const Region& r, int j) {
  return r.bounds.y1 + (r.bounds.height() * static_cast<double>(j)) / static_cast<double>(r.grid);
}

// First/last cell whose half-open span overlaps [lo, hi] with positive length.
template <typename EdgeFn>
bool inside_span(EdgeFn edge, int grid, double lo, double hi, int* first, int* last) {
  int lo_cell = 0, hi_cell = 0;
  for (int i = 1; i <= grid; ++i) {
    double cell_lo = edge(i - 1);
    double cell_hi = edge(i);
    if (std::min(cell_hi, hi) - std::max(cell_lo, lo) > 0.0) {
      if (lo_cell == 0) lo_cell = i;
      hi_cell = i;
    }
  }
  if (lo_cell == 0) return false;
  *first = lo_cell;
  *last = hi_cell;
  return true;
}

}  // namespace

GridBox project_to_grid(const Box& b, const Region& r) {
  if (!box_valid(b)) throw std::invalid_argument("project_to_grid: invalid box");
  GridBox g;
  bool ok_x = inside_span([&](int i) { return edge_x(r, i); }, r.grid, b.x1, b.x2, &g.l, &g.r);
  bool ok_y = inside_span([&](int j) { return edge_y(r, j); }, r.grid, b.y1, b.y2, &g.t, &g.b);
  if (!ok_x || !ok_y)
    throw std::runtime_error("project_to_grid: box does not overlap the region");
  return g;
}

Box grid_to_box(const GridBox& g, const Region& r) {
  if (!gridbox_valid(g, r.grid)) throw std::invalid_argument("grid_to_box: invalid grid box");
  return Box{edge_x(r, g.l - 1), edge_y(r, g.t - 1), edge_x(r, g.r), edge_y(r, g.b)};
}

std::ostream& operator<<(std::ostream& os, const Box& b) {
  return os << "[" << b.x1 << "," << b.y1 << "," << b.x2 << "," << b.y2 << "]";
}

std::ostream& operator<<(std::ostream& os, const GridBox& g) {
  return os << "(l=" << g.l << ",t=" << g.t << ",r=" << g.r << ",b=" << g.b << ")";
}

}  // namespace locbox
