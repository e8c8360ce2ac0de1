#pragma once

// Kuo-type condensation identities, checked by direct counting, plus the
// recurrence they induce on the bowtie families.

#include "lozenge/bigcount.hpp"
#include "lozenge/dual_graph.hpp"
#include "lozenge/lattice_region.hpp"
#include "lozenge/matching.hpp"
#include "lozenge/superposition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

/// Four distinct vertices of a graph.
struct FourMarks {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;
  std::array<Vertex, 4> all() const { return {a, b, c, d}; }
};

/// Marks of a centrally symmetric graph, one vertex from each pair; the
/// partners are a2 = sigma(a1) and so on. d1 lies on face `d_face` of the
/// embedding.
struct SymmetricMarks {
  Vertex a1 = 0;
  Vertex b1 = 0;
  Vertex c1 = 0;
  Vertex d1 = 0;
  std::string d_face = "central";
};

class MarkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IdentityReport {
  std::string identity;
  std::optional<RegionParams> params;
  Rational lhs;
  std::array<Rational, 3> rhs;
  Rational correction = 0;
  bool holds = false;
  /// Set when the report was produced but the identity's hypotheses were
  /// waived or failed; holds then records the raw comparison only.
  std::string note;

  Rational rhs_total() const { return rhs[0] + rhs[1] + rhs[2]; }
  Rational discrepancy() const { return lhs - (rhs_total() - correction); }
};

// ---------------------------------------------------------------------------
// Plain four-vertex identity

namespace detail {

inline void require_distinct(const DualGraph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.vertex_count()) throw MarkError("mark out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j]) throw MarkError("marks must be distinct");
  }
}

inline Rational weighted_count_without(const DualGraph& g, std::vector<Vertex> removed) {
  return weighted_matching_sum(remove_vertices(g, removed).graph);
}

}  // namespace detail

/// M(G) M(G-abcd) = M(G-ab) M(G-cd) + M(G-ac) M(G-bd) + M(G-ad) M(G-bc),
/// with weighted counts.
inline IdentityReport verify_theorem1(const DualGraph& g, const FourMarks& m) {
  detail::require_distinct(g, m.all());
  auto M = [&](std::vector<Vertex> r) { return detail::weighted_count_without(g, std::move(r)); };
  IdentityReport rep;
  rep.identity = "T1";
  rep.lhs = M({}) * M({m.a, m.b, m.c, m.d});
  rep.rhs = {M({m.a, m.b}) * M({m.c, m.d}), M({m.a, m.c}) * M({m.b, m.d}), M({m.a, m.d}) * M({m.b, m.c})};
  rep.holds = rep.lhs == rep.rhs_total();
  return rep;
}

struct OddPathViolation {
  std::array<Vertex, 2> s;
  Matching mu;
  Matching nu;
  AlternatingPath path;
};

struct HypothesisResult {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<OddPathViolation> counterexample;
};

/// For S in {ab, ac, bc}, superposes every matching of G-S with every matching
/// of G-(abcd minus S) and checks that the path joining two of a, b, c is odd.
inline HypothesisResult check_odd_path_hypothesis(const DualGraph& g, const FourMarks& m,
                                                  std::size_t cap = kDefaultEnumerationCap) {
  detail::require_distinct(g, m.all());
  HypothesisResult out;
  const std::array<std::array<Vertex, 2>, 3> choices{{{m.a, m.b}, {m.a, m.c}, {m.b, m.c}}};
  for (const auto& s : choices) {
    std::vector<Vertex> rest;
    for (Vertex v : m.all())
      if (v != s[0] && v != s[1]) rest.push_back(v);
    auto sub1 = remove_vertices(g, s);
    auto sub2 = remove_vertices(g, rest);
    std::vector<Matching> left;
    for_each_matching(sub1.graph, [&](const Matching& mm) { left.push_back(lift(sub1, mm)); }, cap);
    std::vector<Matching> right;
    for_each_matching(sub2.graph, [&](const Matching& mm) { right.push_back(lift(sub2, mm)); }, cap);
    for (const auto& mu : left) {
      for (const auto& nu : right) {
        ++out.pairs_checked;
        const auto sup = superpose(g, mu, s, nu, rest);
        for (const auto& p : sup.paths) {
          if (p.has_endpoint(m.d)) continue;
          if (p.length() % 2 == 0) {
            out.holds = false;
            out.counterexample = OddPathViolation{s, mu, nu, p};
            return out;
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classes of the bijection behind the four-vertex identity

/// Census of superposition classes. Source pairs (mu, nu) come from
/// M(G) x M(G-abcd); class 0, 1, 2 = a joined to d, b, c. Target pairs come
/// from the products whose first factor misses {a,d}, {c,d}, {b,d}
/// (groups 0, 1, 2), split by the same connection type.
struct BijectionCensus {
  std::array<std::size_t, 3> source{};
  std::array<std::array<std::size_t, 3>, 3> target{};
  /// image[s][g][t]: source class s mapped into group g, class t.
  std::array<std::array<std::array<std::size_t, 3>, 3>, 3> image{};
  bool involution = true;
  bool weight_preserved = true;
  bool images_valid = true;

  /// Classes A, B, C land bijectively on (group 0, class 0), (1, 1), (2, 2)
  /// and the six remaining target classes are empty.
  bool matches_expected_pattern() const {
    if (!involution || !weight_preserved || !images_valid) return false;
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t gi = 0; gi < 3; ++gi) {
        for (std::size_t t = 0; t < 3; ++t) {
          const bool diagonal = gi == s && t == s;
          if (!diagonal && image[s][gi][t] != 0) return false;
        }
      }
      if (image[s][s][s] != source[s] || target[s][s] != source[s]) return false;
    }
    for (std::size_t gi = 0; gi < 3; ++gi)
      for (std::size_t t = 0; t < 3; ++t)
        if (gi != t && target[gi][t] != 0) return false;
    return true;
  }
};

namespace detail {

inline std::size_t connection_class(const Superposition& s, const FourMarks& m) {
  const AlternatingPath* p = s.path_through(m.a);
  if (!p) throw SuperpositionError("mark a is not on an alternating path");
  const Vertex other = p->front() == m.a ? p->back() : p->front();
  if (other == m.d) return 0;
  if (other == m.b) return 1;
  if (other == m.c) return 2;
  throw SuperpositionError("path from a does not end at a mark");
}

inline std::optional<std::size_t> target_group(std::vector<Vertex> mu_missing, const FourMarks& m) {
  std::sort(mu_missing.begin(), mu_missing.end());
  auto is = [&](Vertex p, Vertex q) {
    std::vector<Vertex> e{p, q};
    std::sort(e.begin(), e.end());
    return e == mu_missing;
  };
  if (is(m.a, m.d)) return 0;
  if (is(m.c, m.d)) return 1;
  if (is(m.b, m.d)) return 2;
  return std::nullopt;
}

inline std::vector<Matching> lifted_matchings(const DualGraph& g, std::vector<Vertex> removed, std::size_t cap) {
  auto sub = remove_vertices(g, removed);
  std::vector<Matching> out;
  for_each_matching(sub.graph, [&](const Matching& mm) { out.push_back(lift(sub, mm)); }, cap);
  return out;
}

}  // namespace detail

/// Exhaustive census of the shift-along-the-d-path map.
inline BijectionCensus classify_bijection(const DualGraph& g, const FourMarks& m,
                                          std::size_t cap = kDefaultEnumerationCap) {
  detail::require_distinct(g, m.all());
  BijectionCensus census;
  const std::vector<Vertex> none;
  const std::vector<Vertex> all{m.a, m.b, m.c, m.d};
  const auto full = detail::lifted_matchings(g, none, cap);
  const auto empty4 = detail::lifted_matchings(g, all, cap);
  for (const auto& mu : full) {
    for (const auto& nu : empty4) {
      const auto sup = superpose(g, mu, none, nu, all);
      const std::size_t s = detail::connection_class(sup, m);
      ++census.source[s];
      const auto shifted = shift_along_path(sup, m.d);
      const auto gi = detail::target_group(shifted.mu_missing, m);
      if (!gi) {
        census.images_valid = false;
        continue;
      }
      const auto sup2 = superpose(g, shifted.mu, shifted.mu_missing, shifted.nu, shifted.nu_missing);
      ++census.image[s][*gi][detail::connection_class(sup2, m)];
      if (matching_weight(g, mu) * matching_weight(g, nu) !=
          matching_weight(g, shifted.mu) * matching_weight(g, shifted.nu))
        census.weight_preserved = false;
      const auto back = shift_along_path(sup2, m.d);
      if (back.mu != mu || back.nu != nu) census.involution = false;
    }
  }
  const std::array<std::array<Vertex, 2>, 3> first{{{m.a, m.d}, {m.c, m.d}, {m.b, m.d}}};
  const std::array<std::array<Vertex, 2>, 3> second{{{m.b, m.c}, {m.a, m.b}, {m.a, m.c}}};
  for (std::size_t gi = 0; gi < 3; ++gi) {
    const std::vector<Vertex> r1(first[gi].begin(), first[gi].end());
    const std::vector<Vertex> r2(second[gi].begin(), second[gi].end());
    const auto left = detail::lifted_matchings(g, r1, cap);
    const auto right = detail::lifted_matchings(g, r2, cap);
    for (const auto& mu : left) {
      for (const auto& nu : right) {
        ++census.target[gi][detail::connection_class(superpose(g, mu, r1, nu, r2), m)];
      }
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// Symmetric identities

namespace detail {

inline std::vector<Vertex> with_partners(const DualGraph& g, std::initializer_list<Vertex> vs) {
  std::vector<Vertex> out;
  for (Vertex v : vs) {
    out.push_back(v);
    out.push_back(g.partner(v));
  }
  return out;
}

inline Rational symmetric_count_without(const DualGraph& g, std::vector<Vertex> removed) {
  return weighted_symmetric_sum(remove_vertices(g, removed).graph);
}

}  // namespace detail

/// Empty when the marks satisfy the hypotheses of the symmetric identities,
/// otherwise the first failed condition.
inline std::string symmetric_marks_problem(const DualGraph& g, const SymmetricMarks& m) {
  if (!g.symmetric()) return "graph has no symmetry map";
  if (!g.embedding()) return "graph has no embedding";
  const auto& emb = *g.embedding();
  for (Vertex v : {m.a1, m.b1, m.c1, m.d1})
    if (v >= g.vertex_count()) return "mark outside the region";
  const std::vector<Vertex> ring{m.a1, m.b1, m.c1, g.partner(m.a1), g.partner(m.b1), g.partner(m.c1)};
  std::vector<Vertex> all = ring;
  all.push_back(m.d1);
  all.push_back(g.partner(m.d1));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (all[i] == all[j]) return "marks coincide";
  std::vector<std::size_t> pos;
  for (Vertex v : ring) {
    auto it = std::find(emb.outer_cycle.begin(), emb.outer_cycle.end(), v);
    if (it == emb.outer_cycle.end()) return "a, b, c marks must lie on the outer face";
    if (std::count(emb.outer_cycle.begin(), emb.outer_cycle.end(), v) > 1)
      return "a, b, c marks must not sit where the outer face touches itself";
    pos.push_back(static_cast<std::size_t>(it - emb.outer_cycle.begin()));
  }
  // Cyclic order a1 b1 c1 a2 b2 c2 in one of the two directions.
  auto cyclic = [&](bool forward) {
    std::size_t descents = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      const std::size_t p = pos[i];
      const std::size_t q = pos[(i + 1) % 6];
      descents += forward ? (q < p ? 1 : 0) : (q > p ? 1 : 0);
    }
    return descents == 1;
  };
  if (!cyclic(true) && !cyclic(false)) return "outer marks are not in cyclic order a1 b1 c1 a2 b2 c2";
  if (g.colored()) {
    for (std::size_t i = 0; i < 6; ++i)
      if (g.color(ring[i]) == g.color(ring[(i + 1) % 6])) return "outer marks do not alternate in color";
  }
  if (!emb.on_face(m.d_face, m.d1)) return "d1 is not on face " + m.d_face;
  return {};
}

/// Ms(G) Ms(G_abcd) = Ms(G_ab) Ms(G_cd) + Ms(G_ac) Ms(G_bd) + Ms(G_ad) Ms(G_bc)
/// over sigma-invariant matchings, G_S removing both members of each pair in S.
inline IdentityReport verify_theorem2(const DualGraph& g, const SymmetricMarks& m) {
  if (auto why = symmetric_marks_problem(g, m); !why.empty()) throw MarkError(why);
  auto M = [&](std::initializer_list<Vertex> vs) {
    return detail::symmetric_count_without(g, detail::with_partners(g, vs));
  };
  IdentityReport rep;
  rep.identity = "T2";
  rep.lhs = M({}) * M({m.a1, m.b1, m.c1, m.d1});
  rep.rhs = {M({m.a1, m.b1}) * M({m.c1, m.d1}), M({m.a1, m.c1}) * M({m.b1, m.d1}),
             M({m.a1, m.d1}) * M({m.b1, m.c1})};
  rep.holds = rep.lhs == rep.rhs_total();
  return rep;
}

struct SpecialPairStats {
  Rational weight = 0;
  std::size_t pairs_examined = 0;
  std::size_t special_pairs = 0;
};

/// Total weight of special pairs: for x in {a, b, c}, mu symmetric on G minus
/// the x and d pairs, nu symmetric on G minus the other two outer pairs, such
/// that a boundary path of the superposition has ends of equal color and
/// crosses the F1-F2 separator an odd number of times. Zero when the graph
/// records no separator (the two hole faces coincide).
inline SpecialPairStats special_pair_stats(const DualGraph& g, const SymmetricMarks& m,
                                           std::size_t cap = kDefaultEnumerationCap) {
  if (!g.embedding()) throw MarkError("special pairs need an embedding");
  SpecialPairStats out;
  const auto& sep = g.embedding()->separator;
  if (sep.empty()) return out;
  std::vector<bool> crossing(g.edge_count(), false);
  for (EdgeId e : sep) crossing[e] = true;
  const std::array<Vertex, 3> outer{m.a1, m.b1, m.c1};
  std::vector<Vertex> outer_all;
  for (Vertex v : outer) {
    outer_all.push_back(v);
    outer_all.push_back(g.partner(v));
  }
  auto is_outer = [&](Vertex v) { return std::find(outer_all.begin(), outer_all.end(), v) != outer_all.end(); };

  for (std::size_t xi = 0; xi < 3; ++xi) {
    const std::vector<Vertex> s1 = detail::with_partners(g, {outer[xi], m.d1});
    std::vector<Vertex> s2;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != xi) {
        s2.push_back(outer[j]);
        s2.push_back(g.partner(outer[j]));
      }
    auto sub1 = remove_vertices(g, s1);
    auto sub2 = remove_vertices(g, s2);
    std::vector<Matching> left;
    for_each_symmetric_matching(sub1.graph, [&](const Matching& mm) { left.push_back(lift(sub1, mm)); }, cap);
    std::vector<Matching> right;
    for_each_symmetric_matching(sub2.graph, [&](const Matching& mm) { right.push_back(lift(sub2, mm)); }, cap);
    for (const auto& mu : left) {
      for (const auto& nu : right) {
        ++out.pairs_examined;
        const auto sup = superpose(g, mu, s1, nu, s2);
        bool special = false;
        for (const auto& p : sup.paths) {
          if (!is_outer(p.front()) || !is_outer(p.back())) continue;
          if (p.back() == g.partner(p.front())) continue;
          if (p.length() % 2 != 0) continue;
          std::size_t cross = 0;
          for (EdgeId e : p.edges) cross += crossing[e] ? 1 : 0;
          if (cross % 2 == 1) special = true;
        }
        if (special) {
          ++out.special_pairs;
          out.weight += symmetric_matching_weight(g, mu) * symmetric_matching_weight(g, nu);
        }
      }
    }
  }
  return out;
}

inline Rational special_pair_weight(const DualGraph& g, const SymmetricMarks& m,
                                    std::size_t cap = kDefaultEnumerationCap) {
  return special_pair_stats(g, m, cap).weight;
}

/// The symmetric identity with the special-pair weight subtracted on the right.
inline IdentityReport verify_theorem3(const DualGraph& g, const SymmetricMarks& m,
                                      std::size_t cap = kDefaultEnumerationCap) {
  IdentityReport rep = verify_theorem2(g, m);
  rep.identity = "T3";
  rep.correction = special_pair_weight(g, m, cap);
  rep.holds = rep.lhs == rep.rhs_total() - rep.correction;
  return rep;
}

// ---------------------------------------------------------------------------
// Marks and reductions for the bowtie families

/// One cell of each mark pair: a near the corner where the x-side ends, b
/// where it starts, c at the far end of the z-side, d on the lobe edge
/// opposite the lobe apex, at the apex end.
struct RegionMarks {
  TriCell a1;
  TriCell b1;
  TriCell c1;
  TriCell d1;
};

inline RegionMarks region_marks(const RegionParams& p) {
  const LatticePoint apex = lobe_apex(p);
  return {up(p.x - 1, 0), down(-1, 0), up(-p.z, p.z), up(apex.a, apex.b + p.k)};
}

inline std::string hole_face_name(const RegionParams& p) {
  return p.family == Family::DisconnectedBowtie ? "F1" : "central";
}

struct MarkedRegion {
  Region region;
  DualGraph graph;
  std::optional<SymmetricMarks> marks;
  /// Empty when marks are usable.
  std::string problem;
};

inline MarkedRegion marked_region(const RegionParams& p) {
  MarkedRegion out{build_region(p), {}, std::nullopt, {}};
  out.graph = dual_graph(out.region);
  const RegionMarks rm = region_marks(p);
  auto idx = [&](const TriCell& c) { return out.region.index_of(c); };
  auto a = idx(rm.a1), b = idx(rm.b1), c = idx(rm.c1), d = idx(rm.d1);
  if (!a || !b || !c || !d) {
    out.problem = "mark outside the region";
    return out;
  }
  SymmetricMarks m{*a, *b, *c, *d, hole_face_name(p)};
  out.problem = symmetric_marks_problem(out.graph, m);
  if (out.problem.empty()) out.marks = m;
  return out;
}

/// Orbit-graph marks for the plain identity.
inline FourMarks orbit_marks(const OrbitGraph& og, const SymmetricMarks& m) {
  return {og.vertex_map[m.a1], og.vertex_map[m.b1], og.vertex_map[m.c1], og.vertex_map[m.d1]};
}

/// Parameter change caused by removing each mark pair: every subset of marks
/// turns the region, after forced lozenges, into another family member.
inline RegionParams shifted_params(const RegionParams& p, const std::string& subset) {
  RegionParams q = p;
  for (char t : subset) {
    switch (t) {
      case 'a': q.x -= 1, q.y += 1, q.z -= 1; break;
      case 'b': q.x += 1, q.y -= 1, q.z -= 1; break;
      case 'c': q.x -= 1, q.y -= 1, q.z += 1; break;
      case 'd': q.k += 1; break;
      default: throw std::invalid_argument("unknown mark " + std::string(1, t));
    }
  }
  return q;
}

inline const std::array<std::string, 7>& mark_subsets() {
  static const std::array<std::string, 7> s{"ab", "cd", "ac", "bd", "ad", "bc", "abcd"};
  return s;
}

/// Repeatedly places forced lozenges (a cell with a single neighbour must pair
/// with it). nullopt when some cell is left with no neighbour.
inline std::optional<std::vector<TriCell>> reduce_forced(std::vector<TriCell> cells) {
  std::sort(cells.begin(), cells.end());
  std::set<TriCell> live(cells.begin(), cells.end());
  std::vector<TriCell> work(cells.begin(), cells.end());
  while (!work.empty()) {
    const TriCell c = work.back();
    work.pop_back();
    if (!live.count(c)) continue;
    std::vector<TriCell> ns;
    for (const auto& n : edge_neighbors(c))
      if (live.count(n)) ns.push_back(n);
    if (ns.empty()) return std::nullopt;
    if (ns.size() > 1) continue;
    live.erase(c);
    live.erase(ns[0]);
    for (const auto& n : edge_neighbors(ns[0]))
      if (live.count(n)) work.push_back(n);
  }
  return std::vector<TriCell>(live.begin(), live.end());
}

struct ReductionCheck {
  std::string subset;
  RegionParams expected;
  bool matches = false;
};

/// For each of the seven mark subsets S, compares the forced reduction of
/// G minus the S pairs with the forced reduction of the predicted region.
inline std::vector<ReductionCheck> check_reductions(const RegionParams& p) {
  const Region region = build_region(p);
  const RegionMarks rm = region_marks(p);
  auto mark = [&](char t) {
    switch (t) {
      case 'a': return rm.a1;
      case 'b': return rm.b1;
      case 'c': return rm.c1;
      default: return rm.d1;
    }
  };
  auto reduced_shape = [](std::vector<TriCell> cells) -> std::optional<std::vector<TriCell>> {
    auto r = reduce_forced(std::move(cells));
    if (!r) return std::nullopt;
    return canonical_shape(*r);
  };
  std::vector<ReductionCheck> out;
  for (const auto& s : mark_subsets()) {
    ReductionCheck rc{s, shifted_params(p, s), false};
    std::set<TriCell> gone;
    for (char t : s) {
      gone.insert(mark(t));
      gone.insert(central_image(region, mark(t)));
    }
    std::vector<TriCell> rest;
    for (const auto& c : region.cells())
      if (!gone.count(c)) rest.push_back(c);
    if (params_valid(rc.expected)) {
      const auto got = reduced_shape(rest);
      const Region want = build_region(rc.expected);
      const auto exp = reduced_shape(std::vector<TriCell>(want.cells().begin(), want.cells().end()));
      rc.matches = got.has_value() && exp.has_value() && *got == *exp;
    }
    out.push_back(rc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Recurrence

struct RecurrenceStats {
  std::size_t recursive = 0;
  std::size_t brute_force = 0;
  std::size_t zero_denominator = 0;
};

/// Symmetric tiling counts of B and B' regions from the condensation
/// recurrence. Cells with a usable recurrence are solved for the first factor
/// by exact division; all others (small sides, k near min(x,y,z), marks that
/// collide or miss their faces) are counted directly. Not thread-safe.
class RecurrenceSolver {
 public:
  BigInt count(const RegionParams& p) {
    validate(p);
    if (p.family == Family::Hexagon) throw InvalidParams("recurrence covers the bowtie families only");
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    BigInt value = solve(p);
    memo_.emplace(p, value);
    return value;
  }

  const RecurrenceStats& stats() const { return stats_; }
  std::size_t memo_size() const { return memo_.size(); }

  /// Whether p is computed through the recurrence rather than directly.
  static bool recurses(const RegionParams& p) {
    if (p.family == Family::DisconnectedBowtie && p.gap != 1) return false;
    for (const auto& s : mark_subsets())
      if (!params_valid(shifted_params(p, s))) return false;
    return marked_region(p).marks.has_value();
  }

 private:
  BigInt brute(const RegionParams& p) {
    ++stats_.brute_force;
    return count_symmetric_matchings(dual_graph(build_region(p)));
  }

  BigInt solve(const RegionParams& p) {
    if (!recurses(p)) return brute(p);
    auto at = [&](const char* s) { return count(shifted_params(p, s)); };
    const BigInt denominator = at("abcd");
    if (denominator == 0) {
      ++stats_.zero_denominator;
      return brute(p);
    }
    const BigInt numerator = at("ab") * at("cd") + at("ac") * at("bd") + at("ad") * at("bc");
    if (numerator % denominator != 0)
      throw std::logic_error("recurrence division is inexact at " + describe(p));
    ++stats_.recursive;
    return numerator / denominator;
  }

  std::map<RegionParams, BigInt> memo_;
  RecurrenceStats stats_;
};

inline BigInt recurrence_count(const RegionParams& p) {
  RecurrenceSolver solver;
  return solver.count(p);
}

}  // namespace lozenge
