#pragma once

// Perfect-matching counting and enumeration.
//
// Two independent counters are provided. count_matchings_backtrack is the
// reference: depth-first search that always branches on the uncovered vertex
// with fewest free neighbours, so degree-one vertices (forced edges) are
// consumed before any real branching. count_matchings is a sweep over the
// vertex order keeping, for each "frontier" pattern of already-covered later
// vertices, the total weight of partial matchings that produce it. The sweep
// is exponential only in the graph bandwidth, which is a row width for region
// duals.

#include "lozenge/bigcount.hpp"
#include "lozenge/dual_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lozenge {

/// A set of edge ids of some graph, kept sorted.
struct Matching {
  std::vector<EdgeId> edges;
  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

inline Rational matching_weight(const DualGraph& g, const Matching& m) {
  Rational w = 1;
  for (EdgeId e : m.edges) w *= g.edge(e).weight;
  return w;
}

/// Weight of a sigma-invariant matching: one factor per edge orbit.
inline Rational symmetric_matching_weight(const DualGraph& g, const Matching& m) {
  Rational w = 1;
  for (EdgeId e : m.edges) {
    if (g.edge_partner(e) >= e) w *= g.edge(e).weight;
  }
  return w;
}

/// True iff `m` covers every vertex of g not in `uncovered` exactly once and
/// misses every vertex of `uncovered`.
inline bool covers_exactly(const DualGraph& g, const Matching& m, std::span<const Vertex> uncovered) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : m.edges) {
    if (e >= g.edge_count()) return false;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<bool> skip(g.vertex_count(), false);
  for (Vertex v : uncovered) {
    if (v >= g.vertex_count() || skip[v]) return false;
    skip[v] = true;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] != (skip[v] ? 0 : 1)) return false;
  }
  return true;
}

inline bool is_perfect_matching(const DualGraph& g, const Matching& m) {
  return covers_exactly(g, m, {});
}

inline bool is_symmetric_matching(const DualGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) return false;
  for (EdgeId e : m.edges) {
    if (!std::binary_search(m.edges.begin(), m.edges.end(), g.edge_partner(e))) return false;
  }
  return true;
}

namespace detail {

/// Vertex-ordered matching system: forward[v] lists (w > v, weight) and
/// loop[v], when nonzero, lets v be covered on its own.
struct SweepSystem {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> forward;
  std::vector<Rational> loop;

  std::size_t width() const {
    std::size_t w = 0;
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& [t, wt] : forward[v]) w = std::max(w, t - v);
    return w;
  }
};

inline SweepSystem sweep_system(const DualGraph& g) {
  SweepSystem s;
  s.n = g.vertex_count();
  s.forward.resize(s.n);
  s.loop.assign(s.n, 0);
  for (const auto& e : g.edges()) {
    if (e.weight == 0) continue;
    auto [lo, hi] = std::minmax(e.u, e.v);
    s.forward[lo].emplace_back(hi, e.weight);
  }
  return s;
}

/// Quotient of a symmetric graph, loops standing for sigma-invariant edges.
inline SweepSystem symmetric_sweep_system(const DualGraph& g) {
  std::vector<std::size_t> orbit(g.vertex_count());
  std::size_t next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v < g.partner(v)) orbit[v] = orbit[g.partner(v)] = next++;
  SweepSystem s;
  s.n = next;
  s.forward.resize(s.n);
  s.loop.assign(s.n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.weight == 0) continue;
    if (g.edge_invariant(e)) {
      s.loop[orbit[ed.u]] += ed.weight;
      continue;
    }
    if (g.edge_partner(e) < e) continue;
    auto [lo, hi] = std::minmax(orbit[ed.u], orbit[ed.v]);
    s.forward[lo].emplace_back(hi, ed.weight);
  }
  return s;
}

inline constexpr std::size_t kFrontierWords = 4;
inline constexpr std::size_t kMaxSweepWidth = 64 * kFrontierWords - 1;

struct Frontier {
  std::array<std::uint64_t, kFrontierWords> w{};

  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  Frontier shifted() const {
    Frontier out;
    for (std::size_t i = 0; i < kFrontierWords; ++i) {
      out.w[i] = w[i] >> 1;
      if (i + 1 < kFrontierWords) out.w[i] |= w[i + 1] << 63;
    }
    return out;
  }
  bool operator==(const Frontier&) const = default;
};

struct FrontierHash {
  std::size_t operator()(const Frontier& f) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : f.w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

/// Sum over perfect matchings of the system. Weighted sums weights; otherwise
/// every nonzero-weight edge counts 1.
template <typename T, bool Weighted>
T sweep_sum(const SweepSystem& s) {
  std::unordered_map<Frontier, T, FrontierHash> cur;
  std::unordered_map<Frontier, T, FrontierHash> nxt;
  cur.emplace(Frontier{}, T(1));
  for (std::size_t v = 0; v < s.n && !cur.empty(); ++v) {
    nxt.clear();
    for (const auto& [state, value] : cur) {
      if (state.test(0)) {
        nxt[state.shifted()] += value;
        continue;
      }
      if (s.loop[v] != 0) {
        if constexpr (Weighted) nxt[state.shifted()] += value * T(s.loop[v]);
        else nxt[state.shifted()] += value;
      }
      for (const auto& [t, wt] : s.forward[v]) {
        const std::size_t d = t - v;
        if (state.test(d)) continue;
        Frontier f = state;
        f.set(d);
        if constexpr (Weighted) nxt[f.shifted()] += value * T(wt);
        else nxt[f.shifted()] += value;
      }
    }
    std::swap(cur, nxt);
  }
  auto it = cur.find(Frontier{});
  return it == cur.end() ? T(0) : it->second;
}

/// Depth-first search over matchings of g. With `symmetric`, choosing an edge
/// also chooses its sigma-image (an invariant edge is chosen alone).
class Backtracker {
 public:
  Backtracker(const DualGraph& g, bool symmetric) : g_(g), symmetric_(symmetric), covered_(g.vertex_count(), false) {}

  template <typename T, bool Weighted>
  T sum() {
    const auto v = pick();
    if (!v) return T(1);
    if (*v == kDead) return T(0);
    T total(0);
    for (EdgeId e : g_.incident(*v)) {
      if (!usable(e)) continue;
      choose(e, true);
      T sub = sum<T, Weighted>();
      choose(e, false);
      if (sub == 0) continue;
      if constexpr (Weighted) total += sub * T(g_.edge(e).weight);
      else total += sub;
    }
    return total;
  }

  void enumerate(const std::function<void(const Matching&)>& fn, std::size_t cap) {
    cap_ = cap;
    produced_ = 0;
    walk(fn);
  }

 private:
  static constexpr Vertex kDead = std::numeric_limits<Vertex>::max();

  bool usable(EdgeId e) const {
    const auto& ed = g_.edge(e);
    if (ed.weight == 0 || covered_[ed.u] || covered_[ed.v]) return false;
    if (!symmetric_ || g_.edge_invariant(e)) return true;
    const auto& im = g_.edge(g_.edge_partner(e));
    return !covered_[im.u] && !covered_[im.v];
  }

  void choose(EdgeId e, bool on) {
    auto mark = [&](EdgeId f) {
      covered_[g_.edge(f).u] = on;
      covered_[g_.edge(f).v] = on;
    };
    mark(e);
    if (symmetric_ && !g_.edge_invariant(e)) mark(g_.edge_partner(e));
    if (on) {
      stack_.push_back(e);
      if (symmetric_ && !g_.edge_invariant(e)) stack_.push_back(g_.edge_partner(e));
    } else {
      stack_.pop_back();
      if (symmetric_ && !g_.edge_invariant(e)) stack_.pop_back();
    }
  }

  // Uncovered vertex with fewest usable edges; nullopt when all covered,
  // kDead when some vertex has none.
  std::optional<Vertex> pick() const {
    std::optional<Vertex> best;
    std::size_t best_deg = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (covered_[v]) continue;
      std::size_t deg = 0;
      for (EdgeId e : g_.incident(v)) deg += usable(e) ? 1 : 0;
      if (deg == 0) return kDead;
      if (deg < best_deg) {
        best_deg = deg;
        best = v;
        if (deg == 1) break;
      }
    }
    return best;
  }

  void walk(const std::function<void(const Matching&)>& fn) {
    const auto v = pick();
    if (!v) {
      if (++produced_ > cap_) throw CapExceeded("more than " + std::to_string(cap_) + " matchings");
      Matching m{stack_};
      std::sort(m.edges.begin(), m.edges.end());
      fn(m);
      return;
    }
    if (*v == kDead) return;
    for (EdgeId e : g_.incident(*v)) {
      if (!usable(e)) continue;
      choose(e, true);
      walk(fn);
      choose(e, false);
    }
  }

  const DualGraph& g_;
  bool symmetric_;
  std::vector<bool> covered_;
  std::vector<EdgeId> stack_;
  std::size_t cap_ = kDefaultEnumerationCap;
  std::size_t produced_ = 0;
};

inline bool balanced(const DualGraph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  if (!g.colored()) return true;
  std::size_t black = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) black += g.color(v) == Color::Black ? 1 : 0;
  return 2 * black == g.vertex_count();
}

inline void require_symmetry(const DualGraph& g) {
  if (!g.symmetric()) throw GraphError("symmetric counting needs a symmetry map");
}

}  // namespace detail

/// Reference counter: number of perfect matchings (weights ignored).
inline BigInt count_matchings_backtrack(const DualGraph& g) {
  if (!detail::balanced(g)) return 0;
  return detail::Backtracker(g, false).sum<BigInt, false>();
}

/// Number of perfect matchings (weights ignored; zero-weight edges count as absent).
inline BigInt count_matchings(const DualGraph& g) {
  if (!detail::balanced(g)) return 0;
  const auto sys = detail::sweep_system(g);
  if (sys.width() > detail::kMaxSweepWidth) return count_matchings_backtrack(g);
  return detail::sweep_sum<BigInt, false>(sys);
}

/// Sum over perfect matchings of the product of edge weights.
inline Rational weighted_matching_sum(const DualGraph& g) {
  if (!detail::balanced(g)) return 0;
  const auto sys = detail::sweep_system(g);
  if (sys.width() > detail::kMaxSweepWidth) return detail::Backtracker(g, false).sum<Rational, true>();
  return detail::sweep_sum<Rational, true>(sys);
}

inline Rational weighted_matching_sum_backtrack(const DualGraph& g) {
  if (!detail::balanced(g)) return 0;
  return detail::Backtracker(g, false).sum<Rational, true>();
}

/// Reference counter for sigma-invariant perfect matchings, searching over
/// edge orbits.
inline BigInt count_symmetric_matchings_backtrack(const DualGraph& g) {
  detail::require_symmetry(g);
  if (!detail::balanced(g)) return 0;
  return detail::Backtracker(g, true).sum<BigInt, false>();
}

/// Number of sigma-invariant perfect matchings.
inline BigInt count_symmetric_matchings(const DualGraph& g) {
  detail::require_symmetry(g);
  if (!detail::balanced(g)) return 0;
  const auto sys = detail::symmetric_sweep_system(g);
  if (sys.width() > detail::kMaxSweepWidth) return count_symmetric_matchings_backtrack(g);
  return detail::sweep_sum<BigInt, false>(sys);
}

/// Sum over sigma-invariant perfect matchings of the product of one weight
/// per edge orbit.
inline Rational weighted_symmetric_sum(const DualGraph& g) {
  detail::require_symmetry(g);
  if (!detail::balanced(g)) return 0;
  const auto sys = detail::symmetric_sweep_system(g);
  if (sys.width() > detail::kMaxSweepWidth) return detail::Backtracker(g, true).sum<Rational, true>();
  return detail::sweep_sum<Rational, true>(sys);
}

/// Calls fn once per perfect matching. Throws CapExceeded after `cap` matchings.
inline void for_each_matching(const DualGraph& g, const std::function<void(const Matching&)>& fn,
                              std::size_t cap = kDefaultEnumerationCap) {
  if (!detail::balanced(g)) return;
  detail::Backtracker(g, false).enumerate(fn, cap);
}

inline void for_each_symmetric_matching(const DualGraph& g, const std::function<void(const Matching&)>& fn,
                                        std::size_t cap = kDefaultEnumerationCap) {
  detail::require_symmetry(g);
  if (!detail::balanced(g)) return;
  detail::Backtracker(g, true).enumerate(fn, cap);
}

inline std::vector<Matching> enumerate_matchings(const DualGraph& g, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Matching> out;
  for_each_matching(g, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

inline std::vector<Matching> enumerate_symmetric_matchings(const DualGraph& g,
                                                           std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Matching> out;
  for_each_symmetric_matching(g, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

/// Lifts a matching of a subgraph to edge ids of its parent.
inline Matching lift(const Subgraph& sub, const Matching& m) {
  Matching out;
  for (EdgeId e : m.edges) out.edges.push_back(sub.parent_edge[e]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace lozenge
