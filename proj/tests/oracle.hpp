#pragma once

// Test-side reference: tilings enumerated straight from triangle geometry.
// Two triangles form a lozenge iff they share two corners; symmetry is the
// point reflection fixing the corner multiset. Nothing here uses the
// library's graph or counting code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Tri {
  int row, col;
  bool up;
  auto operator<=>(const Tri&) const = default;
};

using Point = std::pair<int, int>;  // (a, b)

inline std::array<Point, 3> points(const Tri& t) {
  if (t.up) return {{{t.col, t.row}, {t.col + 1, t.row}, {t.col, t.row + 1}}};
  return {{{t.col + 1, t.row}, {t.col, t.row + 1}, {t.col + 1, t.row + 1}}};
}

inline bool share_edge(const Tri& s, const Tri& t) {
  int common = 0;
  for (const auto& p : points(s))
    for (const auto& q : points(t)) common += p == q ? 1 : 0;
  return common == 2;
}

/// Hexagon by half-plane tests on the triangle centroid (in thirds).
inline std::vector<Tri> hexagon(int x, int y, int z) {
  std::vector<Tri> out;
  for (int row = -2; row <= y + z + 2; ++row) {
    for (int col = -z - 2; col <= x + 2; ++col) {
      for (bool up : {true, false}) {
        const int off = up ? 1 : 2;
        const int a3 = 3 * col + off, b3 = 3 * row + off;
        if (a3 >= -3 * z && a3 <= 3 * x && b3 >= 0 && b3 <= 3 * (y + z) && a3 + b3 >= 0 && a3 + b3 <= 3 * (x + y))
          out.push_back({row, col, up});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Tiling = std::vector<std::pair<int, int>>;  // index pairs into the cell list

/// All tilings (as sorted index pairs).
inline std::vector<Tiling> tilings(const std::vector<Tri>& cells, std::size_t limit = 5'000'000) {
  const std::size_t n = cells.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (share_edge(cells[i], cells[j])) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
  std::vector<Tiling> out;
  std::vector<bool> used(n, false);
  Tiling cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (out.size() >= limit) return;
    while (from < n && used[from]) ++from;
    if (from == n) {
      out.push_back(cur);
      return;
    }
    used[from] = true;
    for (int j : adj[from]) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      cur.emplace_back(static_cast<int>(from), j);
      self(self, from + 1);
      cur.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[from] = false;
  };
  if (n % 2 == 0) rec(rec, 0);
  return out;
}

/// Doubled symmetry center from the mean of all corners.
inline Point doubled_center(const std::vector<Tri>& cells) {
  if (cells.empty()) return {0, 0};
  long long sa = 0, sb = 0, cnt = 0;
  for (const auto& c : cells)
    for (const auto& p : points(c)) {
      sa += p.first;
      sb += p.second;
      ++cnt;
    }
  return {static_cast<int>(2 * sa / cnt), static_cast<int>(2 * sb / cnt)};
}

/// Whether the tiling is invariant under the point reflection about the
/// cells' center.
inline bool symmetric(const std::vector<Tri>& cells, const Tiling& t) {
  const Point c2 = doubled_center(cells);
  auto key = [&](int i, int j) {
    std::vector<Point> ps;
    for (const auto& p : points(cells[static_cast<std::size_t>(i)])) ps.push_back(p);
    for (const auto& p : points(cells[static_cast<std::size_t>(j)])) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
  };
  std::set<std::vector<Point>> lozenges;
  for (const auto& [i, j] : t) lozenges.insert(key(i, j));
  for (const auto& l : lozenges) {
    std::vector<Point> img;
    for (const auto& p : l) img.push_back({c2.first - p.first, c2.second - p.second});
    std::sort(img.begin(), img.end());
    if (!lozenges.count(img)) return false;
  }
  return true;
}

inline std::size_t count_symmetric(const std::vector<Tri>& cells) {
  std::size_t n = 0;
  for (const auto& t : tilings(cells)) n += symmetric(cells, t) ? 1 : 0;
  return n;
}

}  // namespace oracle
