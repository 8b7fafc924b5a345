#pragma once

// Reference computations that do not share code with the library.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Cells: a sector with k one-handles has chi 1 - k, a genus-g handlebody
// 1 - g, the closed central surface 2 - 2g.
inline int closed_euler(int g, const std::array<int, 3>& k) {
  int chi = 0;
  for (int kl : k) chi += 1 - kl;
  chi -= 3 * (1 - g);
  chi += 2 - 2 * g;
  return chi;
}

// Relative version: the three sectors, three compression bodies from the
// central surface (genus g, b boundary circles) to the page (genus p, b
// boundary circles), and the bounded central surface.
inline int relative_euler(int g, const std::array<int, 3>& k, int p, int b) {
  int chi = 0;
  for (int kl : k) chi += 1 - kl;
  const int central = 2 - 2 * g - b;
  const int page = 2 - 2 * p - b;
  // page x I with g - p one-handles attached
  const int handlebody = page - (g - p);
  chi -= 3 * handlebody;
  chi += central;
  return chi;
}

// Orbits of the group generated by permutations (0-based images) by BFS.
inline int orbit_count(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<int> seen(degree, 0);
  int orbits = 0;
  for (int s = 0; s < degree; ++s) {
    if (seen[s]) continue;
    ++orbits;
    std::vector<int> todo{s};
    seen[s] = 1;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        if (!seen[g[x]]) {
          seen[g[x]] = 1;
          todo.push_back(g[x]);
        }
      }
    }
  }
  return orbits;
}

// Cells of a bridge surface by inclusion-exclusion over closed strata:
// patches are disks, arcs are intervals, bridge points are points.
inline int bridge_surface_euler(int points, const std::array<int, 3>& arcs,
                                const std::array<int, 3>& patches) {
  return patches[0] + patches[1] + patches[2] - arcs[0] - arcs[1] - arcs[2] + points;
}

// Determinant by cofactor expansion; small integer matrices only.
inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    total += ((c % 2) ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

// Order of H_1 for a genus-g splitting with square pairing matrix: |det|,
// or 0 when infinite.
inline std::int64_t h1_order(const std::vector<std::vector<std::int64_t>>& pairing) {
  return std::llabs(det(pairing));
}

inline std::int64_t symplectic(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

}  // namespace oracle
