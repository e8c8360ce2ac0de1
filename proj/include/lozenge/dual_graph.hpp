#pragma once

#include "lozenge/bigcount.hpp"
#include "lozenge/lattice_region.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

using Vertex = std::size_t;
using EdgeId = std::size_t;

/// Up triangles are Black, Down triangles White. Orbit graphs are uncolored.
enum class Color : std::uint8_t { Black, White, None };

struct Edge {
  Vertex u;
  Vertex v;
  Rational weight{1};
};

/// Planar data needed by the face-sensitive identities.
struct Embedding {
  /// Outer-face boundary walk, counterclockwise. A vertex where the outer face
  /// touches itself appears once per visit.
  std::vector<Vertex> outer_cycle;
  /// Named inner faces ("central", "F1", "F2") and the vertices lying on them.
  std::map<std::string, std::vector<Vertex>> faces;
  /// Edges crossed by a fixed curve running from face F1 to face F2 (empty when
  /// the two faces coincide).
  std::vector<EdgeId> separator;
  /// Vertex positions (centroids) in lattice coordinates, for rendering.
  std::vector<std::pair<double, double>> positions;

  bool on_face(const std::string& face, Vertex v) const {
    auto it = faces.find(face);
    if (it == faces.end()) return false;
    return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
  }
  bool on_outer_face(Vertex v) const {
    return std::find(outer_cycle.begin(), outer_cycle.end(), v) != outer_cycle.end();
  }
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weighted graph carrying optional colors, a symmetry-partner involution and
/// an embedding. Immutable once built; vertex/edge sets are fixed at
/// construction.
class DualGraph {
 public:
  DualGraph() = default;

  explicit DualGraph(std::size_t vertex_count, std::vector<Color> colors = {})
      : colors_(std::move(colors)), incident_(vertex_count) {
    if (!colors_.empty() && colors_.size() != vertex_count)
      throw GraphError("color list length differs from vertex count");
  }

  EdgeId add_edge(Vertex u, Vertex v, Rational weight = 1) {
    if (u >= vertex_count() || v >= vertex_count()) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loops are not supported");
    if (weight < 0) throw GraphError("edge weights must be nonnegative");
    edges_.push_back({u, v, std::move(weight)});
    const EdgeId id = edges_.size() - 1;
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    return id;
  }

  /// Installs sigma. Checks the involution is fixed-point free and maps edges
  /// to equal-weight edges.
  void set_partners(std::vector<Vertex> partner) {
    if (partner.size() != vertex_count()) throw GraphError("partner map has wrong length");
    for (Vertex v = 0; v < partner.size(); ++v) {
      if (partner[v] >= partner.size() || partner[partner[v]] != v)
        throw GraphError("partner map is not an involution");
      if (partner[v] == v) throw GraphError("partner map has a fixed vertex");
    }
    partner_ = std::move(partner);
    symmetric_ = true;
    edge_partner_.assign(edges_.size(), 0);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      auto image = find_edge(partner_[edges_[e].u], partner_[edges_[e].v]);
      if (!image) throw GraphError("symmetry does not map the edge set to itself");
      if (edges_[*image].weight != edges_[e].weight)
        throw GraphError("symmetric edges carry different weights");
      edge_partner_[e] = *image;
    }
  }

  void set_embedding(Embedding emb) { embedding_ = std::move(emb); }

  std::size_t vertex_count() const { return incident_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  Vertex other_end(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  bool colored() const { return !colors_.empty(); }
  Color color(Vertex v) const { return colors_.empty() ? Color::None : colors_[v]; }
  std::span<const Color> colors() const { return colors_; }

  bool symmetric() const { return symmetric_; }
  Vertex partner(Vertex v) const {
    if (!symmetric_) throw GraphError("graph has no symmetry map");
    return partner_[v];
  }
  const std::vector<Vertex>& partners() const { return partner_; }
  EdgeId edge_partner(EdgeId e) const {
    if (!symmetric_) throw GraphError("graph has no symmetry map");
    return edge_partner_[e];
  }
  bool edge_invariant(EdgeId e) const { return symmetric() && edge_partner_[e] == e; }

  const std::optional<Embedding>& embedding() const { return embedding_; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
    for (EdgeId e : incident_[u]) {
      if (other_end(e, u) == v) return e;
    }
    return std::nullopt;
  }

  bool is_bipartite_colored() const {
    if (!colored()) return false;
    return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
      return colors_[e.u] != colors_[e.v] && colors_[e.u] != Color::None;
    });
  }

  bool unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
  }

  /// Largest |u - v| over edges; drives the frontier counter's state width.
  std::size_t bandwidth() const {
    std::size_t w = 0;
    for (const auto& e : edges_) w = std::max(w, e.u > e.v ? e.u - e.v : e.v - e.u);
    return w;
  }

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<Vertex> partner_;
  std::vector<EdgeId> edge_partner_;
  bool symmetric_ = false;
  std::optional<Embedding> embedding_;
};

/// G minus a vertex set, with the maps back to the parent graph. The symmetry
/// survives when the removed set is closed under it.
struct Subgraph {
  DualGraph graph;
  std::vector<Vertex> parent_vertex;
  std::vector<EdgeId> parent_edge;
  std::vector<std::optional<Vertex>> child_vertex;
};

inline Subgraph remove_vertices(const DualGraph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (Vertex v : removed) {
    if (v >= g.vertex_count()) throw GraphError("removed vertex out of range");
    gone[v] = true;
  }
  Subgraph out;
  out.child_vertex.assign(g.vertex_count(), std::nullopt);
  std::vector<Color> colors;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gone[v]) continue;
    out.child_vertex[v] = out.parent_vertex.size();
    out.parent_vertex.push_back(v);
    if (g.colored()) colors.push_back(g.color(v));
  }
  out.graph = DualGraph(out.parent_vertex.size(), std::move(colors));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (gone[ed.u] || gone[ed.v]) continue;
    out.graph.add_edge(*out.child_vertex[ed.u], *out.child_vertex[ed.v], ed.weight);
    out.parent_edge.push_back(e);
  }
  if (g.symmetric()) {
    bool closed = true;
    for (Vertex v : removed) closed = closed && gone[g.partner(v)];
    if (closed) {
      std::vector<Vertex> partner(out.parent_vertex.size());
      for (Vertex c = 0; c < partner.size(); ++c)
        partner[c] = *out.child_vertex[g.partner(out.parent_vertex[c])];
      out.graph.set_partners(std::move(partner));
    }
  }
  return out;
}

namespace detail {

/// Outer-face boundary walk of g drawn with straight edges at `xy`, started
/// counterclockwise. Each component contributes its own walk; components are
/// taken in angular order around (cx, cy). Cut vertices appear once per visit.
inline std::vector<Vertex> outer_walk(const DualGraph& g, const std::vector<std::pair<double, double>>& xy, double cx,
                                      double cy) {
  const std::size_t n = g.vertex_count();
  auto angle = [&](Vertex from, Vertex to) {
    return std::atan2(xy[to].second - xy[from].second, xy[to].first - xy[from].first);
  };
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    for (EdgeId e : g.incident(v)) rot[v].push_back(g.other_end(e, v));
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex p, Vertex q) { return angle(v, p) < angle(v, q); });
  }
  auto slot = [&](Vertex v, Vertex w) {
    return static_cast<std::size_t>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
  };
  std::vector<std::vector<bool>> used(n);
  for (Vertex v = 0; v < n; ++v) used[v].assign(rot[v].size(), false);
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> best;
  std::vector<std::pair<double, std::size_t>> best_key;
  std::vector<std::pair<double, double>> centroid;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(best.size());
    std::vector<Vertex> members{s};
    comp[s] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : rot[members[i]])
        if (comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
        }
    double mx = 0, my = 0;
    for (Vertex v : members) {
      mx += xy[v].first;
      my += xy[v].second;
    }
    centroid.emplace_back(mx / static_cast<double>(members.size()), my / static_cast<double>(members.size()));
    best.push_back({s});
    best_key.emplace_back(-1.0, 0);
    // Faces of the component: after arriving at v from u, leave along the
    // neighbor just clockwise of u.
    for (Vertex u0 : members) {
      for (std::size_t i0 = 0; i0 < rot[u0].size(); ++i0) {
        if (used[u0][i0]) continue;
        std::vector<Vertex> walk;
        double area = 0;
        Vertex u = u0;
        std::size_t i = i0;
        while (!used[u][i]) {
          used[u][i] = true;
          const Vertex v = rot[u][i];
          walk.push_back(u);
          area += xy[u].first * xy[v].second - xy[v].first * xy[u].second;
          const std::size_t back = slot(v, u);
          i = (back + rot[v].size() - 1) % rot[v].size();
          u = v;
        }
        const std::pair<double, std::size_t> key{std::abs(area), walk.size()};
        if (key > best_key.back()) {
          best_key.back() = key;
          if (area < 0) std::reverse(walk.begin(), walk.end());
          best.back() = std::move(walk);
        }
      }
    }
  }
  std::vector<std::size_t> order(best.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return std::atan2(centroid[p].second - cy, centroid[p].first - cx) <
           std::atan2(centroid[q].second - cy, centroid[q].first - cx);
  });
  std::vector<Vertex> out;
  for (std::size_t i : order) out.insert(out.end(), best[i].begin(), best[i].end());
  return out;
}

}  // namespace detail

/// One vertex per unit triangle (row-major), one unit-weight edge per shared
/// unit edge; sigma inherited from the region's center. The embedding names
/// the outer face, the face holding the center ("central") for hexagons and
/// bowtie regions, and the two hole faces F1 (upper lobe) and F2 for
/// disconnected bowties. A hole reaching the boundary is part of the outer
/// face and gets no name.
inline DualGraph dual_graph(const Region& region) {
  const auto cells = region.cells();
  std::vector<Color> colors;
  colors.reserve(cells.size());
  for (const auto& c : cells) colors.push_back(c.orient == Orientation::Up ? Color::Black : Color::White);
  DualGraph g(cells.size(), std::move(colors));
  for (Vertex v = 0; v < cells.size(); ++v) {
    if (cells[v].orient != Orientation::Up) continue;
    for (const auto& n : edge_neighbors(cells[v])) {
      if (auto w = region.index_of(n)) g.add_edge(v, *w);
    }
  }
  if (region.center()) {
    std::vector<Vertex> partner(cells.size());
    for (Vertex v = 0; v < cells.size(); ++v)
      partner[v] = *region.index_of(reflect_through(*region.center(), cells[v]));
    g.set_partners(std::move(partner));
  }

  Embedding emb;
  const FaceMap faces(region);
  double ca = 0, cb = 0;
  for (const auto& c : cells) {
    auto t = centroid_thirds(c);
    emb.positions.emplace_back(t.a3 / 3.0, t.b3 / 3.0);
    ca += t.a3 / 3.0;
    cb += t.b3 / 3.0;
  }
  if (!cells.empty()) {
    ca /= static_cast<double>(cells.size());
    cb /= static_cast<double>(cells.size());
  }
  std::vector<std::pair<double, double>> xy;
  for (const auto& [a, b] : emb.positions) xy.emplace_back(a + 0.5 * b, 0.8660254037844386 * b);
  emb.outer_cycle = detail::outer_walk(g, xy, ca + 0.5 * cb, 0.8660254037844386 * cb);

  auto vertices_on = [&](int face) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < cells.size(); ++v)
      if (faces.on_face(cells[v], face)) out.push_back(v);
    return out;
  };
  if (region.center() && region.center()->a2 % 2 == 0 && region.center()->b2 % 2 == 0) {
    LatticePoint c{region.center()->a2 / 2, region.center()->b2 / 2};
    if (auto f = faces.face_at(c); f && *f != faces.outer()) emb.faces["central"] = vertices_on(*f);
  }
  if (region.params() && region.params()->family == Family::DisconnectedBowtie) {
    const auto& p = *region.params();
    const LatticePoint q = lobe_apex(p);
    const LatticePoint pp{q.a, q.b - p.gap};
    auto f1 = faces.face_at(q);
    auto f2 = faces.face_at(pp);
    if (f1 && f2 && *f1 != faces.outer() && *f2 != faces.outer()) {
      emb.faces["F1"] = vertices_on(*f1);
      emb.faces["F2"] = vertices_on(*f2);
      if (*f1 != *f2) {
        for (const auto& base : central_segment(p)) {
          auto lo = region.index_of(up(base.a, base.b));
          auto hi = region.index_of(down(base.a - 1, base.b));
          if (lo && hi) {
            if (auto e = g.find_edge(*lo, *hi)) emb.separator.push_back(*e);
          }
        }
      }
    }
  }
  g.set_embedding(std::move(emb));
  return g;
}

struct OrbitGraph {
  DualGraph graph;
  /// G vertex -> orbit vertex.
  std::vector<Vertex> vertex_map;
  /// Orbit vertex -> representative (smaller index of the pair) in G.
  std::vector<Vertex> representative;
  /// Orbit edge -> representative edge in G.
  std::vector<EdgeId> edge_representative;
};

/// Quotient of G by sigma. Perfect matchings of the quotient correspond to the
/// sigma-invariant perfect matchings of G. Orbit vertices are numbered by their
/// representative's index so the frontier width stays close to G's.
inline OrbitGraph orbit_graph(const DualGraph& g) {
  if (!g.symmetric()) throw GraphError("orbit graph needs a symmetry map");
  OrbitGraph out;
  out.vertex_map.assign(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v < g.partner(v)) {
      out.vertex_map[v] = out.vertex_map[g.partner(v)] = out.representative.size();
      out.representative.push_back(v);
    }
  }
  out.graph = DualGraph(out.representative.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge_invariant(e)) throw GraphError("sigma-invariant edge has no orbit-graph image");
    if (g.edge_partner(e) < e) continue;
    const auto& ed = g.edge(e);
    out.graph.add_edge(out.vertex_map[ed.u], out.vertex_map[ed.v], ed.weight);
    out.edge_representative.push_back(e);
  }
  return out;
}

}  // namespace lozenge
