#pragma once

#include <iosfwd>

namespace locbox {

// Axis-aligned box in continuous image coordinates, corner convention.
struct Box {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  double cx() const { return 0.5 * (x1 + x2); }
  double cy() const { return 0.5 * (y1 + y2); }

  bool operator==(const Box&) const = default;
};

bool box_valid(const Box& b);

// Search region: a box plus the resolution M of the grid laid over it.
struct Region {
  Box bounds;
  int grid = 28;

  bool operator==(const Region&) const = default;
};

// Box on the 1..M grid of a region, endpoints inclusive.
struct GridBox {
  int l = 1;
  int t = 1;
  int r = 1;
  int b = 1;

  bool operator==(const GridBox&) const = default;
};

bool gridbox_valid(const GridBox& g, int grid);

double intersection_area(const Box& a, const Box& b);
double iou(const Box& a, const Box& b);

// Clip to [0,w]x[0,h]; degenerate results collapse to an empty box at the
// nearest border (callers check box_valid).
Box clip_to_canvas(const Box& b, double canvas_w, double canvas_h);

// Scale b by gamma about its center, clip to the canvas, attach a grid.
// Throws std::invalid_argument on gamma < 1 and std::runtime_error when the
// clipped region has no area (box fully outside the canvas).
Region enlarge(const Box& b, double gamma, double canvas_w, double canvas_h, int grid);

// Cells are half-open [lo, hi); a cell is inside iff its overlap with the box
// has positive length. Throws std::runtime_error when no cell qualifies.
GridBox project_to_grid(const Box& b, const Region& r);

// Back-projection: exact inverse of project_to_grid on cell-aligned boxes.
Box grid_to_box(const GridBox& g, const Region& r);

std::ostream& operator<<(std::ostream& os, const Box& b);
std::ostream& operator<<(std::ostream& os, const GridBox& g);

}  // namespace locbox
