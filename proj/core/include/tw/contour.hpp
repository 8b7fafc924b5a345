#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace tw {

struct Rect {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diameter() const;
  bool contains(double x, double y, double slack = 0.0) const;
};

/// Node samples of a scalar field on a uniform (nx+1) x (ny+1) lattice.
/// Masked-out nodes are treated as outside the domain.
struct ScalarGrid {
  Rect rect;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> active;

  double x_at(int i) const { return rect.xmin + rect.width() * i / nx; }
  double y_at(int j) const { return rect.ymin + rect.height() * j / ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
  double at(int i, int j) const { return values[index(i, j)]; }
  bool is_active(int i, int j) const { return active[index(i, j)] != 0; }
};

ScalarGrid sample_grid(const Rect& rect, int nx, int ny,
                       const std::function<double(double, double)>& f,
                       const std::function<bool(double, double)>& inside = nullptr);

using Point2 = std::array<double, 2>;

struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

struct LevelSet {
  std::vector<Polyline> polylines;
  /// Saddle cells whose connectivity had to be decided from the cell centre.
  int ambiguous_cells = 0;
  int components() const { return static_cast<int>(polylines.size()); }
};

/// Marching-squares extraction of {f = 0}; nodes with f >= 0 count as
/// positive. Each connected component becomes one polyline.
LevelSet trace_zero_level(const ScalarGrid& g);

/// Split a polyline into maximal pieces on which keep > 0, cutting at the
/// interpolated sign changes. Pieces of zero length are dropped.
std::vector<Polyline> split_where_positive(const Polyline& line,
                                           const std::function<double(double, double)>& keep);

/// 4-connected components of the nodes whose label equals `label`.
int count_regions(int nx, int ny, const std::vector<int>& labels, int label);

}  // namespace tw
