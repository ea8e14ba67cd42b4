#include "n3l/geometry.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace {

using namespace n3l;
using n3l::test::brute_subgroup;

std::set<std::vector<int>> subgroups_of(const BoardGeometry& g, const std::vector<Direction>& dirs) {
  std::set<std::vector<int>> out;
  for (auto d : dirs) out.insert(brute_subgroup(g, d.a, d.b));
  return out;
}

TEST(BoardGeometry, IndexBijection) {
  auto g = BoardGeometry::torus(4, 7);
  std::set<int> seen;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 7; ++y) {
      int i = g.index({x, y});
      EXPECT_EQ(g.point(i), (Point{x, y}));
      seen.insert(i);
    }
  EXPECT_EQ(seen.size(), 28U);
  EXPECT_EQ(*seen.rbegin(), 27);
}

TEST(BoardGeometry, RejectsNonPositive) {
  EXPECT_THROW(BoardGeometry::torus(0, 3), InvalidInput);
  EXPECT_THROW(BoardGeometry::lattice(3, -1), InvalidInput);
}

TEST(LiftableDirections, ThreeByThree) {
  auto dirs = liftable_directions(BoardGeometry::torus(3, 3));
  EXPECT_EQ(dirs.size(), 4U);
  std::vector<Direction> expect{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  EXPECT_EQ(dirs, expect);
}

TEST(LiftableDirections, TwoByFour) {
  auto g = BoardGeometry::torus(2, 4);
  auto dirs = liftable_directions(g);
  std::map<Direction, std::size_t> orders;
  for (auto d : dirs) orders[d] = brute_subgroup(g, d.a, d.b).size();
  std::map<Direction, std::size_t> expect{{{0, 1}, 4}, {{1, 1}, 4}, {{1, 0}, 2}, {{1, 2}, 2}};
  EXPECT_EQ(orders, expect);
}

TEST(LiftableDirections, SinglePoint) {
  auto dirs = liftable_directions(BoardGeometry::torus(1, 1));
  ASSERT_EQ(dirs.size(), 1U);
  EXPECT_EQ(dirs[0], (Direction{0, 0}));
}

TEST(LiftableDirections, LatticeUnsupported) {
  EXPECT_THROW(liftable_directions(BoardGeometry::lattice(3, 3)), UnsupportedGeometry);
}

TEST(LiftableDirections, CanonicalAndDistinct) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      auto g = BoardGeometry::torus(m, n);
      auto dirs = liftable_directions(g);
      EXPECT_EQ(subgroups_of(g, dirs).size(), dirs.size()) << m << "x" << n;
      for (auto d : dirs) {
        // No other generator of the same subgroup is lexicographically smaller.
        auto h = brute_subgroup(g, d.a, d.b);
        for (int i : h) {
          Point e = g.point(i);
          if (brute_subgroup(g, e.x, e.y) == h) {
            EXPECT_LE(d, (Direction{e.x, e.y}));
          }
        }
      }
    }
}

// Brute force over primitive integer vectors: the subgroups they project to
// are exactly the liftable-direction subgroups.
TEST(LiftableDirections, MatchesPrimitiveLifts) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      auto g = BoardGeometry::torus(m, n);
      std::set<std::vector<int>> brute;
      for (int a = 0; a <= 4 * m * n; ++a)
        for (int b = 0; b <= 4 * m * n; ++b)
          if (std::gcd(a, b) == 1) brute.insert(brute_subgroup(g, a % m, b % n));
      EXPECT_EQ(subgroups_of(g, liftable_directions(g)), brute) << m << "x" << n;
    }
}

TEST(EnumerateLines, TorusThreeByThree) {
  auto lines = enumerate_lines(BoardGeometry::torus(3, 3), 3);
  EXPECT_EQ(lines.size(), 12U);
  for (const auto& l : lines) EXPECT_EQ(l.size(), 3U);
}

TEST(EnumerateLines, TorusTwoByFour) {
  auto lines = enumerate_lines(BoardGeometry::torus(2, 4), 3);
  EXPECT_EQ(lines.size(), 4U);
  for (const auto& l : lines) EXPECT_EQ(l.size(), 4U);
}

TEST(EnumerateLines, LatticeThreeByThree) {
  auto lines = enumerate_lines(BoardGeometry::lattice(3, 3), 3);
  EXPECT_EQ(lines.size(), 8U);
}

TEST(EnumerateLines, MinSizeTwoListsShortCosets) {
  // (2,4): two order-4 classes plus two order-2 classes, 2 + 2 + 4 + 4 cosets.
  auto lines = enumerate_lines(BoardGeometry::torus(2, 4), 2);
  EXPECT_EQ(lines.size(), 12U);
  EXPECT_THROW(enumerate_lines(BoardGeometry::torus(2, 4), 1), InvalidInput);
}

TEST(EnumerateLines, SortedAndDeterministic) {
  auto g = BoardGeometry::torus(4, 6);
  auto a = enumerate_lines(g, 3);
  auto b = enumerate_lines(g, 3);
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].points, a[i].points);
}

TEST(EnumerateLines, InclusionMaximal) {
  for (auto g : {BoardGeometry::torus(4, 8), BoardGeometry::torus(6, 6), BoardGeometry::lattice(5, 4)}) {
    auto lines = enumerate_lines(g, 3);
    for (const auto& a : lines)
      for (const auto& b : lines)
        if (&a != &b) {
          EXPECT_FALSE(std::includes(b.points.begin(), b.points.end(), a.points.begin(), a.points.end()));
        }
  }
}

// Lattice lines are exactly the maximal sets of pairwise-collinear points.
TEST(EnumerateLines, LatticeMatchesDeterminant) {
  for (auto [m, n] : {std::pair{3, 3}, {4, 5}, {5, 5}, {2, 6}}) {
    auto g = BoardGeometry::lattice(m, n);
    auto lines = enumerate_lines(g, 3);
    for (int i = 0; i < g.size(); ++i)
      for (int j = i + 1; j < g.size(); ++j)
        for (int k = j + 1; k < g.size(); ++k) {
          Point p = g.point(i), q = g.point(j), r = g.point(k);
          bool on_line = std::any_of(lines.begin(), lines.end(), [&](const Line& l) {
            return l.contains(p) && l.contains(q) && l.contains(r);
          });
          EXPECT_EQ(on_line, orientation(p, q, r) == 0);
        }
  }
}

TEST(CosetStructure, ClassesPartitionAndTranslate) {
  for (auto [m, n] : {std::pair{3, 3}, {2, 4}, {4, 6}, {6, 6}, {3, 9}}) {
    auto g = BoardGeometry::torus(m, n);
    auto lines = enumerate_lines(g, 3);
    std::set<std::vector<Point>> all;
    std::map<Direction, int> class_points;
    for (const auto& l : lines) {
      all.insert(l.points);
      class_points[l.direction] += static_cast<int>(l.size());
      auto h = brute_subgroup(g, l.direction.a, l.direction.b);
      EXPECT_EQ(l.size(), h.size());
      for (auto p : l.points)
        for (auto q : l.points) {
          Point d = g.wrap(q.x - p.x, q.y - p.y);
          EXPECT_TRUE(std::binary_search(h.begin(), h.end(), g.index(d)));
        }
    }
    for (auto [d, total] : class_points) EXPECT_EQ(total, m * n);
    for (const auto& l : lines)
      for (int t = 0; t < g.size(); ++t) {
        Point s = g.point(t);
        std::vector<Point> moved;
        for (auto p : l.points) moved.push_back(g.wrap(p.x + s.x, p.y + s.y));
        std::sort(moved.begin(), moved.end());
        EXPECT_TRUE(all.count(moved));
      }
  }
}

TEST(Collinear, Examples) {
  auto t33 = BoardGeometry::torus(3, 3);
  EXPECT_TRUE(collinear(t33, {0, 0}, {1, 1}, {2, 2}));
  EXPECT_TRUE(collinear(t33, {0, 0}, {1, 2}, {2, 1}));
  EXPECT_FALSE(collinear(BoardGeometry::lattice(3, 3), {0, 0}, {1, 2}, {2, 1}));
  EXPECT_EQ(orientation({0, 0}, {1, 2}, {2, 1}), -3);
  EXPECT_FALSE(collinear(BoardGeometry::torus(2, 4), {0, 0}, {1, 0}, {0, 1}));
}

TEST(Collinear, Errors) {
  auto g = BoardGeometry::torus(3, 3);
  EXPECT_THROW(collinear(g, {0, 0}, {0, 0}, {1, 1}), InvalidInput);
  EXPECT_THROW(collinear(g, {0, 0}, {3, 0}, {1, 1}), InvalidInput);
}

TEST(Collinear, AgreesWithLineSet) {
  for (auto [m, n] : {std::pair{3, 5}, {4, 4}, {2, 6}, {6, 4}}) {
    auto g = BoardGeometry::torus(m, n);
    auto lines = enumerate_lines(g, 3);
    for (int i = 0; i < g.size(); ++i)
      for (int j = i + 1; j < g.size(); ++j)
        for (int k = j + 1; k < g.size(); ++k) {
          Point p = g.point(i), q = g.point(j), r = g.point(k);
          bool on_line = std::any_of(lines.begin(), lines.end(), [&](const Line& l) {
            return l.contains(p) && l.contains(q) && l.contains(r);
          });
          EXPECT_EQ(collinear(g, p, q, r), on_line);
        }
  }
}

TEST(Collinear, TranslationAndTransposeInvariance) {
  n3l::test::Lcg rng(11);
  for (int round = 0; round < 400; ++round) {
    int m = 1 + rng.below(6), n = 1 + rng.below(6);
    if (m * n < 3) continue;
    auto g = BoardGeometry::torus(m, n);
    auto gt = BoardGeometry::torus(n, m);
    int i = rng.below(g.size()), j = rng.below(g.size()), k = rng.below(g.size());
    if (i == j || j == k || i == k) continue;
    Point p = g.point(i), q = g.point(j), r = g.point(k);
    Point t = g.point(rng.below(g.size()));
    bool c = collinear(g, p, q, r);
    EXPECT_EQ(c, collinear(g, g.wrap(p.x + t.x, p.y + t.y), g.wrap(q.x + t.x, q.y + t.y),
                           g.wrap(r.x + t.x, r.y + t.y)));
    EXPECT_EQ(c, collinear(gt, {p.y, p.x}, {q.y, q.x}, {r.y, r.x}));
  }
}

TEST(LinesThrough, Examples) {
  EXPECT_EQ(lines_through(BoardGeometry::torus(3, 3), {0, 0}).size(), 4U);
  EXPECT_EQ(lines_through(BoardGeometry::torus(5, 5), {2, 3}).size(), 6U);
  EXPECT_EQ(lines_through(BoardGeometry::torus(2, 4), {0, 0}).size(), 2U);
}

TEST(LinesThrough, PrimeSquareTori) {
  for (int p : {2, 3, 5, 7}) {
    auto g = BoardGeometry::torus(p, p);
    EXPECT_EQ(liftable_directions(g).size(), static_cast<std::size_t>(p + 1));
    if (p == 2) continue;  // lines of two points are not listed
    for (int i = 0; i < g.size(); ++i)
      EXPECT_EQ(lines_through(g, g.point(i)).size(), static_cast<std::size_t>(p + 1));
  }
}

TEST(CoverOracle, Examples) {
  auto t33 = BoardGeometry::torus(3, 3);
  EXPECT_TRUE(cover_oracle_collinear(t33, {0, 0}, {1, 2}, {2, 1}, 10));
  auto t44 = BoardGeometry::torus(4, 4);
  EXPECT_TRUE(cover_oracle_collinear(t44, {2, 0}, {2, 1}, {2, 3}, 10));
  EXPECT_FALSE(cover_oracle_collinear(BoardGeometry::torus(2, 4), {0, 0}, {1, 0}, {0, 1}, 10));
  EXPECT_THROW(cover_oracle_collinear(BoardGeometry::lattice(3, 3), {0, 0}, {1, 1}, {2, 2}, 10),
               UnsupportedGeometry);
}

TEST(CoverOracle, AgreesWithCollinearSmallBoards) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto g = BoardGeometry::torus(m, n);
      for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
          for (int k = j + 1; k < g.size(); ++k) {
            Point p = g.point(i), q = g.point(j), r = g.point(k);
            EXPECT_EQ(collinear(g, p, q, r), cover_oracle_collinear(g, p, q, r, 4 * (m + n)))
                << m << "x" << n;
          }
    }
}

}  // namespace
