#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace lozenge;

TEST(Json, RegionRoundTrip) {
  for (const RegionParams& p : {RegionParams{Family::Bowtie, 4, 4, 4, 2, 1},
                                RegionParams{Family::DisconnectedBowtie, 4, 3, 4, 0, 3},
                                RegionParams{Family::Hexagon, 1, 2, 3, 0, 1}}) {
    const Region r = build_region(p);
    const Json j = region_to_json(r);
    const Region back = region_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, r);
    EXPECT_EQ(back.params(), r.params());
    EXPECT_EQ(back.label(), r.label());
  }
}

TEST(Json, ParamsOmitDefaultGap) {
  EXPECT_FALSE(to_json({Family::DisconnectedBowtie, 2, 1, 2, 1, 1}).contains("gap"));
  EXPECT_EQ(to_json({Family::DisconnectedBowtie, 4, 3, 4, 0, 3}).at("gap"), 3);
  EXPECT_EQ(to_json({Family::Bowtie, 2, 2, 2, 0, 1}).at("family"), "B");
}

TEST(Json, RegionRejectsBadOrientation) {
  const Json j = Json::parse(R"({"family": null, "cells": [[0, 0, "X"]]})");
  EXPECT_THROW(region_from_json(j), std::invalid_argument);
}

TEST(Json, GraphRoundTripKeepsWeightsAndSymmetry) {
  const DualGraph g = dual_graph(carve_bowtie(4, 2, 4, 0));
  DualGraph w(g.vertex_count(), std::vector<Color>(g.colors().begin(), g.colors().end()));
  for (const auto& e : g.edges()) w.add_edge(e.u, e.v, Rational(3, 7));
  w.set_partners(g.partners());
  const DualGraph back = graph_from_json(Json::parse(graph_to_json(w).dump()));
  ASSERT_EQ(back.vertex_count(), w.vertex_count());
  ASSERT_EQ(back.edge_count(), w.edge_count());
  EXPECT_TRUE(back.symmetric());
  for (EdgeId e = 0; e < w.edge_count(); ++e) EXPECT_EQ(back.edge(e).weight, Rational(3, 7));
  EXPECT_EQ(weighted_symmetric_sum(back), weighted_symmetric_sum(w));
  const Json j = graph_to_json(g);
  const auto first = build_region({Family::Bowtie, 4, 2, 4, 0, 1}).cells().front();
  EXPECT_EQ(j.at("vertices")[0].at("color"), first.orient == Orientation::Up ? "black" : "white");
  EXPECT_TRUE(j.at("faces").contains("central"));
  EXPECT_EQ(j.at("outer_face").size(), g.embedding()->outer_cycle.size());
}

TEST(Json, GraphWithoutColorsOrPartners) {
  const Json j = Json::parse(R"({"vertices": [{}, {}], "edges": [[0, 1, 2, 3]]})");
  const DualGraph g = graph_from_json(j);
  EXPECT_FALSE(g.colored());
  EXPECT_FALSE(g.symmetric());
  EXPECT_EQ(weighted_matching_sum(g), Rational(2, 3));
}

TEST(Json, ReportFields) {
  IdentityReport r;
  r.identity = "T3";
  r.params = RegionParams{Family::DisconnectedBowtie, 4, 3, 4, 0, 3};
  r.lhs = 360;
  r.rhs = {Rational(100), Rational(200), Rational(240)};
  r.correction = 180;
  r.holds = true;
  const Json j = report_to_json(r);
  EXPECT_EQ(j.at("lhs"), "360");
  EXPECT_EQ(j.at("correction"), "180");
  EXPECT_EQ(j.at("rhs")[2], "240");
  EXPECT_TRUE(j.at("holds").get<bool>());
  EXPECT_FALSE(j.contains("note"));
}

TEST(Svg, RegionAndTiling) {
  const Region r = carve_bowtie(4, 4, 4, 2);
  const DualGraph g = dual_graph(r);
  const auto tilings = enumerate_symmetric_matchings(g);
  ASSERT_FALSE(tilings.empty());
  const std::string svg = render_svg(r, removed_cells(*r.params()), tilings.front());
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("id=\"tiling\""), std::string::npos);
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polygons;
  EXPECT_EQ(polygons, r.size() + removed_cells(*r.params()).size() + r.size() / 2);
  const std::string bare = render_svg(r, {});
  EXPECT_EQ(bare.find("id=\"tiling\""), std::string::npos);
}
