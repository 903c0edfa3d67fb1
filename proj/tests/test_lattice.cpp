#include <gtest/gtest.h>

#include <limits>

#include "fixtures.hpp"

using namespace hyperslide;
using fx::cfg;
using fx::ordered;

TEST(Neighbors, FaceNeighborsOfOriginInThePlane) {
  auto n = face_neighbors(Cell{0, 0}, 2);
  std::set<Cell> got(n.begin(), n.end());
  EXPECT_EQ(got, (std::set<Cell>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

TEST(Neighbors, FaceNeighborCountIsTwiceTheDimension) {
  EXPECT_EQ(face_neighbors(Cell{7, -3, 2}, 3).size(), 6u);
  auto n = face_neighbors(Cell{1, 2, 3, 4}, 4);
  ASSERT_EQ(n.size(), 8u);
  for (const Cell& c : n) {
    Coord l1 = std::abs(c[0] - 1) + std::abs(c[1] - 2) + std::abs(c[2] - 3) + std::abs(c[3] - 4);
    EXPECT_EQ(l1, 1);
  }
}

TEST(Neighbors, EdgeNeighbors) {
  auto n = edge_neighbors(Cell{0, 0}, 2);
  std::set<Cell> got(n.begin(), n.end());
  EXPECT_EQ(got, (std::set<Cell>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  EXPECT_EQ(edge_neighbors(Cell{4, 4, 4}, 3).size(), 12u);
  auto m = edge_neighbors(Cell{5, 5}, 2);
  EXPECT_NE(std::find(m.begin(), m.end(), Cell{6, 6}), m.end());
  EXPECT_EQ(std::find(m.begin(), m.end(), Cell{7, 5}), m.end());
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(cfg(2, {{0, 0}, {1, 0}})));
  EXPECT_FALSE(is_connected(cfg(2, {{0, 0}, {1, 1}})));
  EXPECT_TRUE(is_connected(cfg(2, {{0, 0}, {1, 0}, {0, 1}})));
  EXPECT_TRUE(is_connected(cfg(3, {{0, 0, 0}})));
}

TEST(Configuration, RejectsBadInput) {
  EXPECT_THROW(cfg(1, {{0}}), PreconditionError);
  EXPECT_THROW(Configuration(2, std::vector<Cell>{}), PreconditionError);
  EXPECT_THROW(cfg(2, {{0, 0}, {0, 0}}), PreconditionError);
  EXPECT_THROW(cfg(2, {{0, 0}, {0, 0, 1}}), PreconditionError);
}

TEST(Configuration, ExtremalIsMaxFirstCoordinateThenLexGreatest) {
  auto v = cfg(3, {{0, 0, 0}, {2, 0, 5}, {2, 1, -4}, {1, 9, 9}});
  EXPECT_EQ(v.extremal(), (Cell{2, 1, -4}));
}

TEST(Complement, BlockHasNoHoles) {
  auto c = complement_components(cfg(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(c.holes.empty());
  EXPECT_EQ(c.box_volume, 16u);
  EXPECT_EQ(c.infinite_size, 12u);
}

TEST(Complement, RingHasItsCentreAsTheHole) {
  auto c = complement_components(Configuration(2, fx::ring(0, 2)));
  ASSERT_EQ(c.holes.size(), 1u);
  EXPECT_EQ(c.holes[0], (std::vector<Cell>{{1, 1}}));
}

TEST(Complement, HollowCubeHasItsCentreAsTheHole) {
  auto shell = fx::hollow_box({0, 0, 0}, {2, 2, 2});
  ASSERT_EQ(shell.size(), 26u);
  auto c = complement_components(Configuration(3, shell));
  ASSERT_EQ(c.holes.size(), 1u);
  EXPECT_EQ(c.holes[0], (std::vector<Cell>{{1, 1, 1}}));
}

TEST(Complement, InflationOverflowIsReported) {
  const Coord top = std::numeric_limits<Coord>::max();
  EXPECT_THROW(complement_components(cfg(2, {{top, 0}})), OverflowError);
  EXPECT_THROW((Cell{top, 0}.step(Direction{0, 1})), OverflowError);
}

TEST(OuterBoundary, Domino) {
  auto b = outer_boundary(cfg(2, {{0, 0}, {1, 0}}));
  EXPECT_EQ(b.modules.size(), 2u);
  EXPECT_EQ(b.faces.size(), 6u);
}

TEST(OuterBoundary, RingInwardFacesAreNotOuter) {
  auto b = outer_boundary(Configuration(2, fx::ring(0, 2)));
  EXPECT_EQ(b.modules.size(), 8u);
  // 12 outward faces; the four edge-centre modules each have an inward face that is excluded
  EXPECT_EQ(b.faces.size(), 12u);
  for (const Face& f : b.faces) EXPECT_NE(f.cell.step(f.dir), (Cell{1, 1}));
}

TEST(OuterBoundary, PlugHasNoOuterFaces) {
  auto b = outer_boundary(fx::ring_plus_plug());
  EXPECT_FALSE(b.on_boundary(Cell{2, 1}));
  for (const Face& f : b.faces) EXPECT_NE(f.cell, (Cell{2, 1}));
  EXPECT_EQ(b.modules.size(), 16u);
}

class LatticeProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(LatticeProperties, PartitionAndBoundaryInvariants) {
  const std::size_t d = GetParam();
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto style = static_cast<GenStyle>(seed % 3);
    auto v = random_connected({1 + seed % 30, d, seed, style});
    ComplementMap map(v.occupancy(), d);
    auto comps = complement_components(v);
    std::uint64_t holes = 0;
    for (const auto& h : comps.holes) holes += h.size();
    EXPECT_EQ(v.size() + comps.infinite_size + holes, comps.box_volume);

    auto b = outer_boundary(v);
    if (v.size() >= 2) EXPECT_GE(b.modules.size(), 2u);
    for (const Face& f : b.faces) EXPECT_TRUE(map.exterior(f.cell.step(f.dir)));
    std::set<Cell> owners;
    for (const Face& f : b.faces) owners.insert(f.cell);
    EXPECT_EQ(owners, std::set<Cell>(b.modules.begin(), b.modules.end()));
    // exterior cells touching V touch a boundary module
    for (const Cell& c : v.cells()) {
      for (const Cell& n : face_neighbors(c, d)) {
        if (v.contains(n) || !map.exterior(n)) continue;
        bool touches = false;
        for (const Cell& m : face_neighbors(n, d)) touches |= b.on_boundary(m);
        EXPECT_TRUE(touches) << n;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, LatticeProperties, ::testing::Values(2, 3, 4));

TEST(OuterBoundary, MatchesEscapeWalkOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    // sparse random sets wrapped around a ring make holes common
    std::set<Cell> cells;
    if (trial % 2) {
      for (const Cell& c : fx::ring(0, 3)) cells.insert(c);
    }
    auto grow = random_connected({1 + rng() % 12, 2, rng(), static_cast<GenStyle>(trial % 3)});
    for (const Cell& c : grow.cells()) cells.insert(Cell{c[0] + 1, c[1] + 1});
    if (!fx::connected(cells)) continue;
    auto v = fx::to_config(cells);
    auto b = outer_boundary(v);
    EXPECT_EQ(std::set<Cell>(b.modules.begin(), b.modules.end()), fx::naive_boundary_modules(cells));
  }
}

TEST(Components, SortedAndComplete) {
  auto comps = components(fx::set_of({{5, 5}, {0, 0}, {1, 0}, {9, 9}, {9, 8}}), 2);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Cell>{{0, 0}, {1, 0}}));
  EXPECT_EQ(comps[1], (std::vector<Cell>{{5, 5}}));
  EXPECT_EQ(comps[2], (std::vector<Cell>{{9, 8}, {9, 9}}));
}
