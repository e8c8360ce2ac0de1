#pragma once

// Triangular-lattice regions: hexagons H(x,y,z), hexagons with a central
// bowtie removed, and hexagons with a "disconnected bowtie" (two lobes whose
// nearest vertices are joined by a lattice segment through the center).
//
// Coordinates. Lattice points are a*e1 + b*e2 with e1 at 0 degrees and e2 at
// 60 degrees. The Up triangle at (col=i,row=j) has corners (i,j),(i+1,j),
// (i,j+1); the Down triangle at (i,j) has corners (i+1,j),(i,j+1),(i+1,j+1).
// The hexagon H(x,y,z) has its corner between the two sides of length z and x
// at the origin and its sides run x (0 deg), y (60 deg), z (120 deg), x, y, z:
//
//     -z <= a <= x,   0 <= b <= y+z,   0 <= a+b <= x+y.
//
// Central symmetry is stored as the doubled center 2c, so the involution is
// the integer map p -> 2c - p.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

enum class Orientation : std::uint8_t { Up, Down };

constexpr Orientation flipped(Orientation o) {
  return o == Orientation::Up ? Orientation::Down : Orientation::Up;
}

struct LatticePoint {
  int a = 0;
  int b = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

/// One unit triangle. Ordering is row-major (row, col, orientation).
struct TriCell {
  int row = 0;
  int col = 0;
  Orientation orient = Orientation::Up;
  auto operator<=>(const TriCell&) const = default;
};

constexpr TriCell up(int col, int row) { return {row, col, Orientation::Up}; }
constexpr TriCell down(int col, int row) { return {row, col, Orientation::Down}; }

inline std::array<LatticePoint, 3> corners(const TriCell& c) {
  if (c.orient == Orientation::Up) {
    return {{{c.col, c.row}, {c.col + 1, c.row}, {c.col, c.row + 1}}};
  }
  return {{{c.col + 1, c.row}, {c.col, c.row + 1}, {c.col + 1, c.row + 1}}};
}

/// The three triangles sharing an edge with `c` (always of opposite orientation).
inline std::array<TriCell, 3> edge_neighbors(const TriCell& c) {
  if (c.orient == Orientation::Up) {
    return {{down(c.col, c.row), down(c.col - 1, c.row), down(c.col, c.row - 1)}};
  }
  return {{up(c.col, c.row), up(c.col + 1, c.row), up(c.col, c.row + 1)}};
}

/// Twice the centroid, in units of 1/3: the centroid is (a3/3, b3/3).
struct CentroidThirds {
  int a3;
  int b3;
};

constexpr CentroidThirds centroid_thirds(const TriCell& c) {
  const int off = c.orient == Orientation::Up ? 1 : 2;
  return {3 * c.col + off, 3 * c.row + off};
}

/// A point with half-integer resolution, stored doubled.
struct DoubledPoint {
  int a2 = 0;
  int b2 = 0;
  auto operator<=>(const DoubledPoint&) const = default;
};

/// Rotation by 180 degrees about `center`. Flips orientation.
constexpr TriCell reflect_through(DoubledPoint center, const TriCell& c) {
  return {center.b2 - c.row - 1, center.a2 - c.col - 1, flipped(c.orient)};
}

enum class Family { Hexagon, Bowtie, DisconnectedBowtie };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Hexagon: return "hex";
    case Family::Bowtie: return "B";
    case Family::DisconnectedBowtie: return "Bprime";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  if (s == "hex" || s == "H" || s == "Hexagon") return Family::Hexagon;
  if (s == "B" || s == "Bowtie") return Family::Bowtie;
  if (s == "Bprime" || s == "B'" || s == "DisconnectedBowtie") return Family::DisconnectedBowtie;
  return std::nullopt;
}

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RegionParams {
  Family family = Family::Hexagon;
  int x = 0;
  int y = 0;
  int z = 0;
  int k = 0;
  /// Length of the segment joining the two lobes (DisconnectedBowtie only).
  int gap = 1;
  auto operator<=>(const RegionParams&) const = default;
};

inline std::string describe(const RegionParams& p) {
  std::string s = family_name(p.family) + "(" + std::to_string(p.x) + "," + std::to_string(p.y) +
                  "," + std::to_string(p.z);
  if (p.family != Family::Hexagon) s += "," + std::to_string(p.k);
  if (p.family == Family::DisconnectedBowtie && p.gap != 1) s += ";gap=" + std::to_string(p.gap);
  return s + ")";
}

inline bool same_parity(int u, int v) { return ((u - v) % 2) == 0; }

/// Empty string when valid, otherwise the reason.
inline std::string params_problem(const RegionParams& p) {
  if (p.x < 0 || p.y < 0 || p.z < 0 || p.k < 0) return "side lengths must be nonnegative";
  switch (p.family) {
    case Family::Hexagon:
      return {};
    case Family::Bowtie:
      if (!(same_parity(p.x, p.y) && same_parity(p.y, p.z) && same_parity(p.z, p.k)))
        return "bowtie needs x, y, z, k of equal parity";
      break;
    case Family::DisconnectedBowtie:
      if (!same_parity(p.x, p.z) || same_parity(p.x, p.y))
        return "disconnected bowtie needs x = z (mod 2) and y of the other parity";
      if (p.gap < 1 || p.gap % 2 == 0) return "lobe gap must be a positive odd integer";
      break;
  }
  if (p.k > std::min({p.x, p.y, p.z})) return "lobe size exceeds min(x, y, z)";
  return {};
}

inline bool params_valid(const RegionParams& p) { return params_problem(p).empty(); }

inline void validate(const RegionParams& p) {
  if (auto why = params_problem(p); !why.empty()) throw InvalidParams(describe(p) + ": " + why);
}

/// Apex of the lobe spanned by e1 and e2 (the other lobe is its central image).
/// For the bowtie this is the hexagon center; for the disconnected bowtie it is
/// the upper end Q of the central segment.
inline LatticePoint lobe_apex(const RegionParams& p) {
  if (p.family == Family::DisconnectedBowtie) return {(p.x - p.z) / 2, (p.y + p.z + p.gap) / 2};
  return {(p.x - p.z) / 2, (p.y + p.z) / 2};
}

/// Whether cell lies in the size-k triangle apex + s*e1 + t*e2 (s,t >= 0, s+t <= k).
inline bool in_upper_lobe(const TriCell& c, LatticePoint apex, int k) {
  const int da = c.col - apex.a;
  const int db = c.row - apex.b;
  if (da < 0 || db < 0) return false;
  return c.orient == Orientation::Up ? da + db <= k - 1 : da + db <= k - 2;
}

/// Finite set of unit triangles, optionally centrally symmetric.
class Region {
 public:
  Region() = default;

  Region(std::vector<TriCell> cells, std::string label,
         std::optional<RegionParams> params = std::nullopt)
      : cells_(std::move(cells)), label_(std::move(label)), params_(params) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    center_ = find_center();
  }

  std::span<const TriCell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::string& label() const { return label_; }
  const std::optional<RegionParams>& params() const { return params_; }
  const std::optional<DoubledPoint>& center() const { return center_; }

  bool contains(const TriCell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
  }

  std::optional<std::size_t> index_of(const TriCell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
  }

  std::size_t count(Orientation o) const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [o](const TriCell& c) { return c.orient == o; }));
  }

  bool operator==(const Region& other) const { return cells_ == other.cells_; }

 private:
  // The hexagon center for parametrized regions (so empty ones keep it),
  // otherwise the mean of centroids; accepted only if the 180-degree rotation
  // about it maps the cell set onto itself.
  std::optional<DoubledPoint> find_center() const {
    if (params_) return symmetric_about({params_->x - params_->z, params_->y + params_->z});
    if (cells_.empty()) return std::nullopt;
    long long sa = 0;
    long long sb = 0;
    for (const auto& c : cells_) {
      auto t = centroid_thirds(c);
      sa += t.a3;
      sb += t.b3;
    }
    const long long n3 = 3LL * static_cast<long long>(cells_.size());
    if ((2 * sa) % n3 != 0 || (2 * sb) % n3 != 0) return std::nullopt;
    return symmetric_about({static_cast<int>(2 * sa / n3), static_cast<int>(2 * sb / n3)});
  }

  std::optional<DoubledPoint> symmetric_about(DoubledPoint center) const {
    for (const auto& c : cells_) {
      if (!contains(reflect_through(center, c))) return std::nullopt;
    }
    return center;
  }

  std::vector<TriCell> cells_;
  std::string label_;
  std::optional<RegionParams> params_;
  std::optional<DoubledPoint> center_;
};

/// sigma(cell) for a centrally symmetric region.
inline TriCell central_image(const Region& region, const TriCell& cell) {
  if (!region.center()) throw std::invalid_argument("region " + region.label() + " has no center");
  if (!region.contains(cell)) throw std::invalid_argument("cell is not in region " + region.label());
  return reflect_through(*region.center(), cell);
}

inline bool in_hexagon(const TriCell& c, int x, int y, int z) {
  const int i = c.col;
  const int j = c.row;
  if (i < -z || i > x - 1 || j < 0 || j > y + z - 1) return false;
  if (c.orient == Orientation::Up) return i + j >= 0 && i + j <= x + y - 1;
  return i + j >= -1 && i + j <= x + y - 2;
}

namespace detail {

inline std::vector<TriCell> hexagon_cells(int x, int y, int z) {
  std::vector<TriCell> cells;
  cells.reserve(static_cast<std::size_t>(2 * (x * y + y * z + z * x)));
  for (int j = 0; j < y + z; ++j) {
    for (int i = -z; i < x; ++i) {
      for (auto o : {Orientation::Up, Orientation::Down}) {
        TriCell c{j, i, o};
        if (in_hexagon(c, x, y, z)) cells.push_back(c);
      }
    }
  }
  return cells;
}

inline std::vector<TriCell> without_lobes(std::vector<TriCell> cells, const RegionParams& p) {
  const LatticePoint apex = lobe_apex(p);
  const DoubledPoint center{p.x - p.z, p.y + p.z};
  std::erase_if(cells, [&](const TriCell& c) {
    return in_upper_lobe(c, apex, p.k) || in_upper_lobe(reflect_through(center, c), apex, p.k);
  });
  return cells;
}

}  // namespace detail

inline Region build_hexagon(int x, int y, int z) {
  RegionParams p{Family::Hexagon, x, y, z, 0, 1};
  validate(p);
  return Region(detail::hexagon_cells(x, y, z), describe(p), p);
}

/// B(x,y,z,k): the hexagon minus two size-k triangles meeting at its center,
/// their free edges parallel to the z-sides.
inline Region carve_bowtie(int x, int y, int z, int k) {
  RegionParams p{Family::Bowtie, x, y, z, k, 1};
  validate(p);
  return Region(detail::without_lobes(detail::hexagon_cells(x, y, z), p), describe(p), p);
}

/// B'(x,y,z,k): the hexagon minus two size-k triangles whose nearest corners are
/// joined by the central segment s (parallel to the y-sides, length `gap`).
inline Region carve_disconnected_bowtie(int x, int y, int z, int k, int gap = 1) {
  RegionParams p{Family::DisconnectedBowtie, x, y, z, k, gap};
  validate(p);
  return Region(detail::without_lobes(detail::hexagon_cells(x, y, z), p), describe(p), p);
}

inline Region build_region(const RegionParams& p) {
  switch (p.family) {
    case Family::Hexagon: return build_hexagon(p.x, p.y, p.z);
    case Family::Bowtie: return carve_bowtie(p.x, p.y, p.z, p.k);
    case Family::DisconnectedBowtie: return carve_disconnected_bowtie(p.x, p.y, p.z, p.k, p.gap);
  }
  throw InvalidParams("unknown family");
}

/// Cells of the hexagon that the construction removed (the holes).
inline std::vector<TriCell> removed_cells(const RegionParams& p) {
  std::vector<TriCell> out;
  const Region region = build_region(p);
  for (const auto& c : detail::hexagon_cells(p.x, p.y, p.z)) {
    if (!region.contains(c)) out.push_back(c);
  }
  return out;
}

/// The lattice segment between the two holes of a disconnected bowtie, as the
/// list of unit lattice edges it covers (each edge from p to p+e2).
inline std::vector<LatticePoint> central_segment(const RegionParams& p) {
  if (p.family != Family::DisconnectedBowtie) return {};
  const LatticePoint q = lobe_apex(p);
  std::vector<LatticePoint> out;
  for (int t = p.gap; t >= 1; --t) out.push_back({q.a, q.b - t});
  return out;
}

/// Faces of the planar dual seen from the lattice: every lattice point that is
/// surrounded by six region cells is its own bounded face; all other lattice
/// points belong to the face of the component of missing triangles they touch
/// (components are joined through shared corners). The outer face is the
/// component reaching the bounding box.
class FaceMap {
 public:
  explicit FaceMap(const Region& region) {
    if (region.empty()) return;
    int lo_a = region.cells().front().col, hi_a = lo_a;
    int lo_b = region.cells().front().row, hi_b = lo_b;
    for (const auto& c : region.cells()) {
      lo_a = std::min(lo_a, c.col);
      hi_a = std::max(hi_a, c.col);
      lo_b = std::min(lo_b, c.row);
      hi_b = std::max(hi_b, c.row);
    }
    lo_a -= 2;
    lo_b -= 2;
    hi_a += 2;
    hi_b += 2;

    // Union-find over missing triangles in the padded box.
    std::vector<TriCell> missing;
    for (int j = lo_b; j <= hi_b; ++j) {
      for (int i = lo_a; i <= hi_a; ++i) {
        for (auto o : {Orientation::Up, Orientation::Down}) {
          TriCell c{j, i, o};
          if (!region.contains(c)) missing.push_back(c);
        }
      }
    }
    std::vector<int> parent(missing.size());
    for (std::size_t n = 0; n < parent.size(); ++n) parent[n] = static_cast<int>(n);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::map<LatticePoint, int> first_at;
    for (std::size_t n = 0; n < missing.size(); ++n) {
      for (const auto& pt : corners(missing[n])) {
        auto [it, fresh] = first_at.emplace(pt, static_cast<int>(n));
        if (!fresh) parent[find(static_cast<int>(n))] = find(it->second);
      }
    }
    std::map<int, int> root_to_face;
    const int outer_root = find(0);
    root_to_face[outer_root] = 0;
    outer_ = 0;
    int next = 1;
    for (const auto& [pt, n] : first_at) {
      const int root = find(n);
      auto [it, fresh] = root_to_face.emplace(root, next);
      if (fresh) ++next;
      point_face_[pt] = it->second;
    }
    for (const auto& c : region.cells()) {
      for (const auto& pt : corners(c)) {
        if (!point_face_.count(pt)) point_face_[pt] = next++;
      }
    }
    face_count_ = next;
  }

  int outer() const { return outer_; }
  int face_count() const { return face_count_; }

  std::optional<int> face_at(LatticePoint pt) const {
    auto it = point_face_.find(pt);
    if (it == point_face_.end()) return std::nullopt;
    return it->second;
  }

  /// Faces the dual vertex of `c` lies on (one per distinct corner face).
  std::vector<int> faces_of(const TriCell& c) const {
    std::vector<int> out;
    for (const auto& pt : corners(c)) {
      if (auto f = face_at(pt)) out.push_back(*f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool on_face(const TriCell& c, int face) const {
    auto fs = faces_of(c);
    return std::find(fs.begin(), fs.end(), face) != fs.end();
  }

 private:
  std::map<LatticePoint, int> point_face_;
  int outer_ = 0;
  int face_count_ = 0;
};

/// Translation-invariant fingerprint of a cell set (shifted so its lowest row
/// starts at column 0, row 0).
inline std::vector<TriCell> canonical_shape(std::span<const TriCell> cells) {
  std::vector<TriCell> out(cells.begin(), cells.end());
  if (out.empty()) return out;
  std::sort(out.begin(), out.end());
  const int row0 = out.front().row;
  const int col0 = out.front().col;
  for (auto& c : out) {
    c.row -= row0;
    c.col -= col0;
  }
  return out;
}

}  // namespace lozenge
