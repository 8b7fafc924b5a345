#include "tw/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace tw {

double Rect::diameter() const { return std::hypot(width(), height()); }

bool Rect::contains(double x, double y, double slack) const {
  return x >= xmin - slack && x <= xmax + slack && y >= ymin - slack && y <= ymax + slack;
}

ScalarGrid sample_grid(const Rect& rect, int nx, int ny,
                       const std::function<double(double, double)>& f,
                       const std::function<bool(double, double)>& inside) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("sample_grid: empty lattice");
  if (!(rect.width() > 0) || !(rect.height() > 0)) {
    throw std::invalid_argument("sample_grid: degenerate rectangle");
  }
  ScalarGrid g;
  g.rect = rect;
  g.nx = nx;
  g.ny = ny;
  const std::size_t count = static_cast<std::size_t>(nx + 1) * (ny + 1);
  g.values.resize(count);
  g.active.resize(count);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const double x = g.x_at(i);
      const double y = g.y_at(j);
      g.values[g.index(i, j)] = f(x, y);
      g.active[g.index(i, j)] = (!inside || inside(x, y)) ? 1 : 0;
    }
  return g;
}

namespace {

struct Crossing {
  Point2 at{};
  int links[2] = {-1, -1};
  int degree = 0;
  bool used = false;
};

}  // namespace

LevelSet trace_zero_level(const ScalarGrid& g) {
  const int nx = g.nx;
  const int ny = g.ny;
  const int horizontal = (ny + 1) * nx;
  auto h_edge = [&](int i, int j) { return j * nx + i; };
  auto v_edge = [&](int i, int j) { return horizontal + j * (nx + 1) + i; };
  std::vector<Crossing> edges(static_cast<std::size_t>(horizontal + ny * (nx + 1)));

  auto positive = [&](int i, int j) { return g.at(i, j) >= 0.0; };
  auto crossing_point = [&](int i0, int j0, int i1, int j1) {
    const double a = g.at(i0, j0);
    const double b = g.at(i1, j1);
    const double t = (a == b) ? 0.5 : a / (a - b);
    return Point2{g.x_at(i0) + t * (g.x_at(i1) - g.x_at(i0)),
                  g.y_at(j0) + t * (g.y_at(j1) - g.y_at(j0))};
  };
  auto link = [&](int e0, int e1) {
    edges[e0].links[edges[e0].degree++] = e1;
    edges[e1].links[edges[e1].degree++] = e0;
  };

  LevelSet out;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (!g.is_active(i, j) || !g.is_active(i + 1, j) || !g.is_active(i + 1, j + 1) ||
          !g.is_active(i, j + 1)) {
        continue;
      }
      const bool s0 = positive(i, j), s1 = positive(i + 1, j);
      const bool s2 = positive(i + 1, j + 1), s3 = positive(i, j + 1);
      const int bottom = h_edge(i, j), right = v_edge(i + 1, j);
      const int top = h_edge(i, j + 1), left = v_edge(i, j);
      int crossed[4];
      int count = 0;
      if (s0 != s1) {
        edges[bottom].at = crossing_point(i, j, i + 1, j);
        crossed[count++] = bottom;
      }
      if (s1 != s2) {
        edges[right].at = crossing_point(i + 1, j, i + 1, j + 1);
        crossed[count++] = right;
      }
      if (s2 != s3) {
        edges[top].at = crossing_point(i + 1, j + 1, i, j + 1);
        crossed[count++] = top;
      }
      if (s3 != s0) {
        edges[left].at = crossing_point(i, j + 1, i, j);
        crossed[count++] = left;
      }
      if (count == 2) {
        link(crossed[0], crossed[1]);
      } else if (count == 4) {
        ++out.ambiguous_cells;
        const double centre =
            0.25 * (g.at(i, j) + g.at(i + 1, j) + g.at(i + 1, j + 1) + g.at(i, j + 1));
        if ((centre >= 0.0) == s0) {
          // corners 0 and 2 joined through the centre; cut off corners 1 and 3
          link(bottom, right);
          link(top, left);
        } else {
          link(bottom, left);
          link(right, top);
        }
      }
    }

  auto walk = [&](int start) {
    Polyline pl;
    int prev = -1;
    int cur = start;
    while (cur >= 0 && !edges[cur].used) {
      edges[cur].used = true;
      pl.points.push_back(edges[cur].at);
      int next = -1;
      for (int k = 0; k < edges[cur].degree; ++k) {
        const int cand = edges[cur].links[k];
        if (cand != prev && !edges[cand].used) {
          next = cand;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    return pl;
  };

  // Open arcs first (they start at degree-1 crossings), then closed loops.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].degree == 1 && !edges[e].used) out.polylines.push_back(walk(static_cast<int>(e)));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].degree == 2 && !edges[e].used) {
      auto pl = walk(static_cast<int>(e));
      pl.closed = true;
      if (!pl.points.empty()) pl.points.push_back(pl.points.front());
      out.polylines.push_back(std::move(pl));
    }
  }
  return out;
}

std::vector<Polyline> split_where_positive(const Polyline& line,
                                           const std::function<double(double, double)>& keep) {
  std::vector<Polyline> pieces;
  const auto& pts = line.points;
  if (pts.empty()) return pieces;
  std::vector<double> k(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) k[i] = keep(pts[i][0], pts[i][1]);

  std::size_t start = 0;
  if (line.closed) {
    bool all_positive = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!(k[i] > 0.0)) {
        all_positive = false;
        start = i;
        break;
      }
    }
    if (all_positive) return {line};
  }

  // Traverse (cyclically for closed loops) from `start`.
  const std::size_t n = line.closed ? pts.size() - 1 : pts.size();
  auto idx = [&](std::size_t s) { return line.closed ? (start + s) % n : s; };
  const std::size_t steps = line.closed ? n + 1 : n;

  Polyline cur;
  auto cut = [&](std::size_t a, std::size_t b) {
    const double t = k[a] / (k[a] - k[b]);
    return Point2{pts[a][0] + t * (pts[b][0] - pts[a][0]), pts[a][1] + t * (pts[b][1] - pts[a][1])};
  };
  auto flush = [&]() {
    double length = 0.0;
    for (std::size_t i = 1; i < cur.points.size(); ++i) {
      length += std::hypot(cur.points[i][0] - cur.points[i - 1][0],
                           cur.points[i][1] - cur.points[i - 1][1]);
    }
    if (cur.points.size() >= 2 && length > 0.0) pieces.push_back(cur);
    cur = Polyline{};
  };

  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = idx(s);
    const bool in = k[i] > 0.0;
    if (s > 0) {
      const std::size_t p = idx(s - 1);
      const bool was_in = k[p] > 0.0;
      if (was_in && !in) {
        cur.points.push_back(cut(p, i));
        flush();
      } else if (!was_in && in) {
        cur.points.push_back(cut(p, i));
      }
    }
    if (in) cur.points.push_back(pts[i]);
  }
  flush();
  return pieces;
}

int count_regions(int nx, int ny, const std::vector<int>& labels, int label) {
  const int w = nx + 1;
  const int h = ny + 1;
  if (labels.size() != static_cast<std::size_t>(w) * h) {
    throw std::invalid_argument("count_regions: label grid size mismatch");
  }
  std::vector<std::uint8_t> seen(labels.size(), 0);
  std::vector<int> stack;
  int regions = 0;
  for (int start = 0; start < w * h; ++start) {
    if (labels[start] != label || seen[start]) continue;
    ++regions;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      const int i = c % w;
      const int j = c / w;
      const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (const auto& q : nb) {
        if (q[0] < 0 || q[0] >= w || q[1] < 0 || q[1] >= h) continue;
        const int id = q[1] * w + q[0];
        if (labels[id] == label && !seen[id]) {
          seen[id] = 1;
          stack.push_back(id);
        }
      }
    }
  }
  return regions;
}

}  // namespace tw
