#include <gtest/gtest.h>

#include "helpers.hpp"

#include <random>
#include <set>

using namespace lozenge;

namespace {

struct Fixture {
  DualGraph g;
  std::vector<Vertex> mu_missing;
  std::vector<Vertex> nu_missing;
  std::vector<Matching> mus;
  std::vector<Matching> nus;
};

// Hexagon (2,2,2) with two black and two white marks on the boundary; mu is
// perfect on G, nu on G minus the four marks.
Fixture hexagon_fixture() {
  Fixture f;
  f.g = dual_graph(build_hexagon(2, 2, 2));
  const auto& ring = f.g.embedding()->outer_cycle;
  std::vector<Vertex> black, white;
  for (Vertex v : ring) (f.g.color(v) == Color::Black ? black : white).push_back(v);
  f.nu_missing = {black[0], white[1], black[2], white[3]};
  f.mus = enumerate_matchings(f.g);
  const auto sub = remove_vertices(f.g, f.nu_missing);
  for (const auto& m : enumerate_matchings(sub.graph)) f.nus.push_back(lift(sub, m));
  return f;
}

}  // namespace

TEST(Superposition, PartitionsEveryVertex) {
  const Fixture f = hexagon_fixture();
  ASSERT_FALSE(f.nus.empty());
  for (const auto& mu : f.mus) {
    for (const auto& nu : f.nus) {
      const auto s = superpose(f.g, mu, f.mu_missing, nu, f.nu_missing);
      std::multiset<Vertex> seen;
      for (EdgeId e : s.doubled) {
        seen.insert(f.g.edge(e).u);
        seen.insert(f.g.edge(e).v);
      }
      for (const auto& c : s.cycles) {
        EXPECT_EQ(c.length() % 2, 0U);
        EXPECT_EQ(c.vertices.size(), c.length());
        seen.insert(c.vertices.begin(), c.vertices.end());
      }
      for (const auto& p : s.paths) {
        EXPECT_EQ(p.vertices.size(), p.length() + 1);
        seen.insert(p.vertices.begin(), p.vertices.end());
        for (std::size_t i = 1; i < p.from_mu.size(); ++i) EXPECT_NE(p.from_mu[i], p.from_mu[i - 1]);
      }
      EXPECT_EQ(seen.size(), f.g.vertex_count());
      EXPECT_EQ(std::set<Vertex>(seen.begin(), seen.end()).size(), f.g.vertex_count());
      EXPECT_EQ(s.paths.size(), 2U);
      for (Vertex v : f.nu_missing) EXPECT_NE(s.path_through(v), nullptr);
    }
  }
}

TEST(Superposition, ShiftIsAnInvolution) {
  const Fixture f = hexagon_fixture();
  const Vertex d = f.nu_missing.back();
  for (const auto& mu : f.mus) {
    for (const auto& nu : f.nus) {
      const auto s = superpose(f.g, mu, f.mu_missing, nu, f.nu_missing);
      const auto t = shift_along_path(s, d);
      EXPECT_TRUE(covers_exactly(f.g, t.mu, t.mu_missing));
      EXPECT_TRUE(covers_exactly(f.g, t.nu, t.nu_missing));
      EXPECT_EQ(t.mu_missing.size(), 2U);
      EXPECT_EQ(matching_weight(f.g, t.mu) * matching_weight(f.g, t.nu), Rational(1));
      const auto back = shift_along_path(superpose(f.g, t.mu, t.mu_missing, t.nu, t.nu_missing), d);
      EXPECT_EQ(back.mu, mu);
      EXPECT_EQ(back.nu, nu);
      EXPECT_TRUE(back.mu_missing.empty());
    }
  }
}

TEST(Superposition, IdenticalMatchingsAreAllDoubled) {
  const DualGraph g = dual_graph(build_hexagon(1, 2, 1));
  for (const auto& m : enumerate_matchings(g)) {
    const auto s = superpose(g, m, {}, m, {});
    EXPECT_EQ(s.doubled.size(), m.edges.size());
    EXPECT_TRUE(s.cycles.empty());
    EXPECT_TRUE(s.paths.empty());
  }
}

TEST(Superposition, TwoTilingsOfASingleHexagonFormOneCycle) {
  const DualGraph g = dual_graph(build_hexagon(1, 1, 1));
  const auto all = enumerate_matchings(g);
  ASSERT_EQ(all.size(), 2U);
  const auto s = superpose(g, all[0], {}, all[1], {});
  EXPECT_TRUE(s.doubled.empty());
  ASSERT_EQ(s.cycles.size(), 1U);
  EXPECT_EQ(s.cycles[0].length(), 6U);
}

TEST(Superposition, RejectsBadInput) {
  const Fixture f = hexagon_fixture();
  const auto& mu = f.mus.front();
  const auto& nu = f.nus.front();
  EXPECT_THROW(superpose(f.g, nu, f.mu_missing, nu, f.nu_missing), SuperpositionError);
  EXPECT_THROW(superpose(f.g, mu, f.nu_missing, nu, f.nu_missing), SuperpositionError);
  const auto s = superpose(f.g, mu, f.mu_missing, nu, f.nu_missing);
  Vertex interior = 0;
  while (std::find(f.nu_missing.begin(), f.nu_missing.end(), interior) != f.nu_missing.end()) ++interior;
  EXPECT_THROW(shift_along_path(s, interior), SuperpositionError);
}
