#pragma once

// Union of two matchings that miss complementary mark sets: doubled edges,
// alternating cycles and alternating paths ending at the marks.

#include "lozenge/dual_graph.hpp"
#include "lozenge/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lozenge {

class SuperpositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AlternatingPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  /// from_mu[i] tells which matching edges[i] came from.
  std::vector<bool> from_mu;

  std::size_t length() const { return edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool has_endpoint(Vertex v) const { return front() == v || back() == v; }
};

struct Superposition {
  Matching mu;
  Matching nu;
  /// Vertices mu misses and nu misses.
  std::vector<Vertex> mu_missing;
  std::vector<Vertex> nu_missing;
  std::vector<EdgeId> doubled;
  std::vector<AlternatingPath> cycles;
  std::vector<AlternatingPath> paths;

  const AlternatingPath* path_through(Vertex endpoint) const {
    for (const auto& p : paths)
      if (p.has_endpoint(endpoint)) return &p;
    return nullptr;
  }
};

/// Decomposes mu (perfect on G minus mu_missing) and nu (perfect on G minus
/// nu_missing). The two missing sets must be disjoint and nonempty-distinct.
inline Superposition superpose(const DualGraph& g, const Matching& mu, std::span<const Vertex> mu_missing,
                               const Matching& nu, std::span<const Vertex> nu_missing) {
  std::vector<Vertex> a(mu_missing.begin(), mu_missing.end());
  std::vector<Vertex> b(nu_missing.begin(), nu_missing.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b && !a.empty()) throw SuperpositionError("both matchings miss the same vertex set");
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw SuperpositionError("missing vertex sets overlap");
  if (!covers_exactly(g, mu, a)) throw SuperpositionError("mu is not a perfect matching of its vertex set");
  if (!covers_exactly(g, nu, b)) throw SuperpositionError("nu is not a perfect matching of its vertex set");

  Superposition s{mu, nu, a, b, {}, {}, {}};
  std::sort(s.mu.edges.begin(), s.mu.edges.end());
  std::sort(s.nu.edges.begin(), s.nu.edges.end());
  std::set_intersection(s.mu.edges.begin(), s.mu.edges.end(), s.nu.edges.begin(), s.nu.edges.end(),
                        std::back_inserter(s.doubled));

  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> mu_at(g.vertex_count(), kNone);
  std::vector<EdgeId> nu_at(g.vertex_count(), kNone);
  for (EdgeId e : s.mu.edges) mu_at[g.edge(e).u] = mu_at[g.edge(e).v] = e;
  for (EdgeId e : s.nu.edges) nu_at[g.edge(e).u] = nu_at[g.edge(e).v] = e;

  std::vector<bool> seen(g.vertex_count(), false);
  for (EdgeId e : s.doubled) seen[g.edge(e).u] = seen[g.edge(e).v] = true;

  // Follows alternating edges from `start`, first taking the matching given by
  // `use_mu`, until an endpoint or a return to start.
  auto trace = [&](Vertex start, bool use_mu) {
    AlternatingPath p;
    p.vertices.push_back(start);
    seen[start] = true;
    Vertex v = start;
    while (true) {
      const EdgeId e = use_mu ? mu_at[v] : nu_at[v];
      if (e == kNone) break;
      const Vertex w = g.other_end(e, v);
      p.edges.push_back(e);
      p.from_mu.push_back(use_mu);
      if (w == start) break;
      p.vertices.push_back(w);
      seen[w] = true;
      v = w;
      use_mu = !use_mu;
    }
    return p;
  };

  std::vector<Vertex> ends = a;
  ends.insert(ends.end(), b.begin(), b.end());
  std::sort(ends.begin(), ends.end());
  for (Vertex v : ends) {
    if (seen[v]) continue;
    s.paths.push_back(trace(v, mu_at[v] != kNone));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) s.cycles.push_back(trace(v, true));
  }
  return s;
}

struct ShiftedPair {
  Matching mu;
  Matching nu;
  std::vector<Vertex> mu_missing;
  std::vector<Vertex> nu_missing;
};

/// Exchanges the edges of the path ending at d between the two matchings.
inline ShiftedPair shift_along_path(const Superposition& s, Vertex d) {
  const AlternatingPath* p = s.path_through(d);
  if (!p) throw SuperpositionError("vertex is not an endpoint of an alternating path");
  ShiftedPair out;
  std::vector<EdgeId> take_from_mu;
  std::vector<EdgeId> take_from_nu;
  for (std::size_t i = 0; i < p->edges.size(); ++i)
    (p->from_mu[i] ? take_from_mu : take_from_nu).push_back(p->edges[i]);
  std::sort(take_from_mu.begin(), take_from_mu.end());
  std::sort(take_from_nu.begin(), take_from_nu.end());

  auto exchange = [](const Matching& m, const std::vector<EdgeId>& drop, const std::vector<EdgeId>& add) {
    Matching r;
    std::set_difference(m.edges.begin(), m.edges.end(), drop.begin(), drop.end(), std::back_inserter(r.edges));
    r.edges.insert(r.edges.end(), add.begin(), add.end());
    std::sort(r.edges.begin(), r.edges.end());
    return r;
  };
  out.mu = exchange(s.mu, take_from_mu, take_from_nu);
  out.nu = exchange(s.nu, take_from_nu, take_from_mu);

  // The path's two ends switch which matching misses them.
  auto toggle = [](std::vector<Vertex> set, Vertex v) {
    auto it = std::find(set.begin(), set.end(), v);
    if (it == set.end()) set.push_back(v);
    else set.erase(it);
    std::sort(set.begin(), set.end());
    return set;
  };
  out.mu_missing = toggle(toggle(s.mu_missing, p->front()), p->back());
  out.nu_missing = toggle(toggle(s.nu_missing, p->front()), p->back());
  return out;
}

}  // namespace lozenge
