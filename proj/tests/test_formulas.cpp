#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace lozenge;
using testing_support::family_sweep;
using testing_support::to_oracle;

namespace {

// Box formula written as prod (i+j+k-1)/(i+j+k-2) over the x*y*z box.
BigInt box_formula(int x, int y, int z) {
  Rational r = 1;
  for (int i = 1; i <= x; ++i)
    for (int j = 1; j <= y; ++j)
      for (int k = 1; k <= z; ++k) r *= Rational(i + j + k - 1, i + j + k - 2);
  return boost::multiprecision::numerator(r);
}

BigInt symmetric_by_geometry(const RegionParams& p) {
  return BigInt(oracle::count_symmetric(to_oracle(build_region(p))));
}

}  // namespace

TEST(Pochhammer, SmallValues) {
  EXPECT_EQ(pochhammer(3L, 0L), Rational(1));
  EXPECT_EQ(pochhammer(3L, 3L), Rational(60));
  EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(3, 4));
  EXPECT_EQ(pochhammer(-2L, 3L), Rational(0));
}

TEST(MacMahon, AgreesWithBoxProduct) {
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y)
      for (int z = 0; z <= 6; ++z) EXPECT_EQ(macmahon(x, y, z), box_formula(x, y, z));
}

TEST(MacMahon, SmallHexagonsByGeometry) {
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z) EXPECT_EQ(macmahon(x, y, z), BigInt(oracle::tilings(oracle::hexagon(x, y, z)).size()));
}

TEST(Theorem4, SmallBowtiesByGeometry) {
  for (const auto& p : family_sweep(Family::Bowtie, 8))
    EXPECT_EQ(theorem4(p.x, p.y, p.z, p.k), symmetric_by_geometry(p)) << describe(p);
}

TEST(Theorem5, SmallDisconnectedBowtiesByGeometry) {
  for (const auto& p : family_sweep(Family::DisconnectedBowtie, 8)) {
    const BigInt want = symmetric_by_geometry(p);
    if ((p.k - p.x) % 2 == 0) EXPECT_EQ(theorem5a(p.x, p.y, p.z, p.k), want) << describe(p);
    else EXPECT_EQ(theorem5b(p.x, p.y, p.z, p.k), want) << describe(p);
    EXPECT_EQ(formula_count(p), want) << describe(p);
  }
}

TEST(Theorem5, PrintedVersionOfTheOddCaseIsNotACount) {
  EXPECT_EQ(theorem5b_as_printed(1, 2, 1, 0), Rational(1, 2));
  EXPECT_EQ(theorem5b(1, 2, 1, 0), symmetric_by_geometry({Family::DisconnectedBowtie, 1, 2, 1, 0, 1}));
}

TEST(Stanley, SmallHexagonsByGeometry) {
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y)
      for (int z = 0; z <= 3; ++z)
        EXPECT_EQ(stanley_sc(x, y, z), BigInt(oracle::count_symmetric(oracle::hexagon(x, y, z)))) << x << y << z;
}

TEST(Stanley, NamedValues) {
  EXPECT_EQ(stanley_sc(2, 2, 2), 4);
  EXPECT_EQ(stanley_sc(3, 3, 3), 0);
  EXPECT_EQ(stanley_sc(2, 1, 2), 2);
}

TEST(Preconditions, BadArgumentsThrow) {
  EXPECT_THROW(theorem4(2, 2, 2, 1), InvalidParams);
  EXPECT_THROW(theorem4(2, 2, 2, 4), InvalidParams);
  EXPECT_THROW(theorem5a(2, 2, 2, 0), InvalidParams);
  EXPECT_THROW(theorem5b(2, 1, 2, 0), InvalidParams);
  EXPECT_THROW(macmahon(-1, 0, 0), InvalidParams);
  EXPECT_THROW(stanley_sc(-1, 0, 0), InvalidParams);
  EXPECT_THROW(formula_count({Family::DisconnectedBowtie, 4, 3, 4, 0, 3}), InvalidParams);
}

TEST(Dispatch, FormulaCountPicksTheRightClosedForm) {
  EXPECT_EQ(formula_count({Family::Hexagon, 2, 3, 4, 0, 1}), macmahon(2, 3, 4));
  EXPECT_EQ(formula_count({Family::Bowtie, 4, 4, 4, 2, 1}), 80);
  EXPECT_EQ(formula_count({Family::DisconnectedBowtie, 3, 2, 3, 1, 1}), theorem5a(3, 2, 3, 1));
  EXPECT_EQ(formula_count({Family::DisconnectedBowtie, 3, 2, 3, 0, 1}), theorem5b(3, 2, 3, 0));
}
