#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace lozenge;

TEST(Hexagon, CellCountsAndBalance) {
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y)
      for (int z = 0; z <= 4; ++z) {
        const Region r = build_hexagon(x, y, z);
        EXPECT_EQ(r.size(), static_cast<std::size_t>(2 * (x * y + y * z + z * x)));
        EXPECT_EQ(r.count(Orientation::Up), r.count(Orientation::Down));
      }
}

TEST(Hexagon, AgreesWithHalfPlaneDescription) {
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y)
      for (int z = 0; z <= 4; ++z) EXPECT_EQ(testing_support::to_oracle(build_hexagon(x, y, z)), oracle::hexagon(x, y, z));
}

TEST(Hexagon, CenterIsALatticePointIffSidesShareParity) {
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y)
      for (int z = 0; z <= 4; ++z) {
        const auto c = build_hexagon(x, y, z).center();
        ASSERT_TRUE(c.has_value());
        const bool lattice = c->a2 % 2 == 0 && c->b2 % 2 == 0;
        EXPECT_EQ(lattice, (x - z) % 2 == 0 && (y - z) % 2 == 0);
      }
}

TEST(Bowtie, RemovesTwoLobesOfSizeK) {
  for (const auto& p : testing_support::family_sweep(Family::Bowtie, 12)) {
    const Region r = build_region(p);
    EXPECT_EQ(r.size() + 2 * static_cast<std::size_t>(p.k * p.k), build_hexagon(p.x, p.y, p.z).size()) << describe(p);
    EXPECT_EQ(removed_cells(p).size(), 2 * static_cast<std::size_t>(p.k * p.k));
    EXPECT_EQ(r.count(Orientation::Up), r.count(Orientation::Down)) << describe(p);
  }
}

TEST(DisconnectedBowtie, RemovesTwoLobesAndStaysBalanced) {
  for (const auto& p : testing_support::family_sweep(Family::DisconnectedBowtie, 12)) {
    const Region r = build_region(p);
    EXPECT_EQ(removed_cells(p).size(), 2 * static_cast<std::size_t>(p.k * p.k)) << describe(p);
    EXPECT_EQ(r.count(Orientation::Up), r.count(Orientation::Down)) << describe(p);
  }
}

TEST(Regions, AreCentrallySymmetric) {
  for (Family f : {Family::Bowtie, Family::DisconnectedBowtie}) {
    for (const auto& p : testing_support::family_sweep(f, 10)) {
      const Region r = build_region(p);
      ASSERT_TRUE(r.center().has_value()) << describe(p);
      for (const auto& c : r.cells()) {
        const TriCell img = central_image(r, c);
        EXPECT_NE(img.orient, c.orient);
        EXPECT_EQ(central_image(r, img), c);
      }
    }
  }
}

TEST(Regions, LobesAreCentralImagesOfEachOther) {
  const RegionParams p{Family::Bowtie, 6, 6, 6, 2, 1};
  const auto holes = removed_cells(p);
  const DoubledPoint center{p.x - p.z, p.y + p.z};
  std::set<TriCell> hs(holes.begin(), holes.end());
  for (const auto& c : holes) EXPECT_TRUE(hs.count(reflect_through(center, c)));
}

TEST(Regions, LobesTouchAtTheCenterForBowties) {
  const RegionParams p{Family::Bowtie, 4, 4, 4, 2, 1};
  const Region r = build_region(p);
  const FaceMap faces(r);
  const LatticePoint c{(p.x - p.z) / 2, (p.y + p.z) / 2};
  ASSERT_TRUE(faces.face_at(c).has_value());
  EXPECT_NE(*faces.face_at(c), faces.outer());
  EXPECT_EQ(lobe_apex(p), c);
}

TEST(Regions, DisconnectedLobesAreSeparatedByTheGap) {
  for (int gap : {1, 3}) {
    const RegionParams p{Family::DisconnectedBowtie, 4, 5, 4, 1, gap};
    const Region r = build_region(p);
    const FaceMap faces(r);
    const LatticePoint q = lobe_apex(p);
    const LatticePoint pp{q.a, q.b - gap};
    ASSERT_TRUE(faces.face_at(q) && faces.face_at(pp));
    EXPECT_NE(*faces.face_at(q), *faces.face_at(pp));
    EXPECT_EQ(central_segment(p).size(), static_cast<std::size_t>(gap));
    const DualGraph g = dual_graph(r);
    ASSERT_TRUE(g.embedding().has_value());
    EXPECT_EQ(g.embedding()->separator.size(), static_cast<std::size_t>(gap));
  }
}

TEST(Params, InvalidTuplesAreRejected) {
  EXPECT_THROW(carve_bowtie(2, 2, 2, 1), InvalidParams);
  EXPECT_THROW(carve_bowtie(2, 2, 2, 4), InvalidParams);
  EXPECT_THROW(carve_disconnected_bowtie(2, 2, 2, 0), InvalidParams);
  EXPECT_THROW(carve_disconnected_bowtie(2, 1, 2, 1, 2), InvalidParams);
  EXPECT_THROW(build_hexagon(-1, 2, 2), InvalidParams);
  EXPECT_NO_THROW(carve_disconnected_bowtie(2, 1, 2, 1));
  EXPECT_FALSE(params_problem({Family::Bowtie, 3, 3, 3, 0, 1}).empty());
  EXPECT_TRUE(params_problem({Family::Bowtie, 3, 3, 3, 1, 1}).empty());
}

TEST(Params, DescribeAndParseFamily) {
  EXPECT_EQ(describe({Family::Hexagon, 1, 2, 3, 0, 1}), "hex(1,2,3)");
  EXPECT_EQ(describe({Family::Bowtie, 4, 4, 4, 2, 1}), "B(4,4,4,2)");
  EXPECT_EQ(describe({Family::DisconnectedBowtie, 4, 3, 4, 0, 3}), "Bprime(4,3,4,0;gap=3)");
  EXPECT_EQ(parse_family("B'"), Family::DisconnectedBowtie);
  EXPECT_EQ(parse_family("hex"), Family::Hexagon);
  EXPECT_FALSE(parse_family("square").has_value());
}

TEST(Regions, EmptyRegionKeepsItsCenter) {
  const Region r = carve_bowtie(0, 0, 0, 0);
  EXPECT_TRUE(r.empty());
  EXPECT_TRUE(r.center().has_value());
}

TEST(Regions, FreeRegionCenterFromCells) {
  const Region h = build_hexagon(2, 2, 2);
  const Region plain(std::vector<TriCell>(h.cells().begin(), h.cells().end()), "copy");
  ASSERT_TRUE(plain.center().has_value());
  EXPECT_EQ(*plain.center(), *h.center());
  const Region lopsided({up(0, 0), down(0, 0), up(1, 0)}, "three");
  EXPECT_FALSE(lopsided.center().has_value());
}

TEST(Shapes, CanonicalShapeIsTranslationInvariant) {
  const Region r = build_hexagon(2, 3, 1);
  std::vector<TriCell> moved;
  for (auto c : r.cells()) moved.push_back({c.row + 5, c.col - 3, c.orient});
  EXPECT_EQ(canonical_shape(r.cells()), canonical_shape(moved));
  EXPECT_NE(canonical_shape(r.cells()), canonical_shape(build_hexagon(3, 2, 1).cells()));
}

TEST(Geometry, NeighborsShareTwoCorners) {
  for (auto o : {Orientation::Up, Orientation::Down}) {
    const TriCell c{3, -2, o};
    for (const auto& n : edge_neighbors(c)) {
      EXPECT_TRUE(oracle::share_edge({c.row, c.col, o == Orientation::Up},
                                     {n.row, n.col, n.orient == Orientation::Up}));
    }
  }
}

TEST(Embedding, OuterWalkFollowsEdges) {
  for (const RegionParams& p : {RegionParams{Family::Bowtie, 4, 4, 4, 2, 1}, RegionParams{Family::Bowtie, 0, 2, 4, 0, 1},
                                RegionParams{Family::DisconnectedBowtie, 3, 4, 5, 1, 1}}) {
    const DualGraph g = dual_graph(build_region(p));
    const auto& ring = g.embedding()->outer_cycle;
    ASSERT_GT(ring.size(), 2U);
    for (std::size_t i = 0; i < ring.size(); ++i)
      EXPECT_TRUE(g.find_edge(ring[i], ring[(i + 1) % ring.size()]).has_value()) << describe(p) << " step " << i;
    const FaceMap faces(build_region(p));
    const Region r = build_region(p);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(g.embedding()->on_outer_face(v), faces.on_face(r.cells()[v], faces.outer())) << describe(p);
  }
}

TEST(Embedding, OuterWalkRunsCounterclockwise) {
  const Region r = build_hexagon(3, 3, 3);
  const DualGraph g = dual_graph(r);
  const auto& ring = g.embedding()->outer_cycle;
  double area = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto [a0, b0] = g.embedding()->positions[ring[i]];
    const auto [a1, b1] = g.embedding()->positions[ring[(i + 1) % ring.size()]];
    area += (a0 + 0.5 * b0) * b1 - (a1 + 0.5 * b1) * b0;
  }
  EXPECT_GT(area, 0);
  EXPECT_EQ(ring.size(), std::set<Vertex>(ring.begin(), ring.end()).size());
}
