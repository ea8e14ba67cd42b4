#include "n3l/constraints.hpp"

#include <regex>
#include <set>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

using namespace n3l;

TEST(LineSystem, TripleCounts) {
  EXPECT_EQ(build_line_system(BoardGeometry::torus(3, 3)).triples().size(), 12U);
  EXPECT_EQ(build_line_system(BoardGeometry::torus(2, 4)).triples().size(), 16U);
  EXPECT_EQ(build_line_system(BoardGeometry::torus(2, 2)).triples().size(), 0U);
}

TEST(LineSystem, TriplesAreExactlyCollinearTriples) {
  for (auto kind : {Kind::torus, Kind::lattice})
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= 5; ++n) {
        BoardGeometry g(kind, m, n);
        auto sys = build_line_system(g);
        std::set<Triple> got(sys.triples().begin(), sys.triples().end());
        std::set<Triple> want;
        for (int i = 0; i < g.size(); ++i)
          for (int j = i + 1; j < g.size(); ++j)
            for (int k = j + 1; k < g.size(); ++k)
              if (collinear(g, g.point(i), g.point(j), g.point(k))) want.insert({i, j, k});
        EXPECT_EQ(got, want) << to_string(kind) << " " << m << "x" << n;
      }
}

TEST(LineSystem, PairExclusionInvariants) {
  for (auto g : {BoardGeometry::torus(4, 4), BoardGeometry::torus(3, 6), BoardGeometry::lattice(5, 4)}) {
    auto sys = build_line_system(g);
    std::size_t total = 0;
    for (int p = 0; p < g.size(); ++p)
      for (int q = p + 1; q < g.size(); ++q) {
        auto ex = sys.pair_exclusion(p, q);
        total += ex.size();
        EXPECT_EQ(ex, sys.pair_exclusion(q, p));
        for (int r : ex) {
          EXPECT_TRUE(sys.excludes(p, r, q));
          Triple t{p, q, r};
          std::sort(t.begin(), t.end());
          EXPECT_TRUE(std::binary_search(sys.triples().begin(), sys.triples().end(), t));
        }
      }
    EXPECT_EQ(total, 3 * sys.triples().size());
  }
}

TEST(LineSystem, EmptyExclusionOffLines) {
  // On (2,4), (0,0) and (1,0) share only a two-point coset.
  auto g = BoardGeometry::torus(2, 4);
  auto sys = build_line_system(g);
  EXPECT_TRUE(sys.pair_exclusion(g.index({0, 0}), g.index({1, 0})).empty());
}

std::size_t count_matches(const std::string& s, const std::string& re) {
  std::regex r(re);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), r), std::sregex_iterator()));
}

TEST(EmitIdeal, GeneratorCounts) {
  auto lat = emit_ideal(build_line_system(BoardGeometry::lattice(3, 3)), IdealFormat::macaulay2);
  EXPECT_EQ(count_matches(lat, R"(x_\(\d,\d\)\*x_\(\d,\d\)\*x_\(\d,\d\))"), 8U);
  EXPECT_EQ(count_matches(lat, R"(\^2)"), 9U);
  auto tor = emit_ideal(build_line_system(BoardGeometry::torus(3, 3)), IdealFormat::macaulay2);
  EXPECT_EQ(count_matches(tor, R"(x_\(\d,\d\)\*x_\(\d,\d\)\*x_\(\d,\d\))"), 12U);
  EXPECT_EQ(count_matches(tor, R"(\^2)"), 9U);
}

// The 3x3 lattice ideal lists 8 cubic monomials; the torus adds exactly
// x11 x23 x32, x12 x21 x33, x12 x23 x31 and x13 x21 x32 (1-indexed).
TEST(EmitIdeal, ThreeByThreeMonomials) {
  auto cubics = [](Kind k) {
    auto j = nlohmann::json::parse(emit_ideal(build_line_system(BoardGeometry(k, 3, 3)), IdealFormat::json));
    std::set<std::vector<int>> s;
    for (const auto& c : j["cubics"]) s.insert(c.get<std::vector<int>>());
    return s;
  };
  std::set<std::vector<int>> lattice{{1, 1, 2, 1, 3, 1}, {1, 1, 1, 2, 1, 3}, {1, 2, 2, 2, 3, 2},
                                     {2, 1, 2, 2, 2, 3}, {1, 3, 2, 3, 3, 3}, {3, 1, 3, 2, 3, 3},
                                     {1, 3, 2, 2, 3, 1}, {1, 1, 2, 2, 3, 3}};
  EXPECT_EQ(cubics(Kind::lattice), lattice);
  auto torus = lattice;
  for (auto e : std::vector<std::vector<int>>{{1, 1, 2, 3, 3, 2}, {1, 2, 2, 1, 3, 3}, {1, 2, 2, 3, 3, 1}, {1, 3, 2, 1, 3, 2}})
    torus.insert(e);
  EXPECT_EQ(cubics(Kind::torus), torus);
}

TEST(EmitIdeal, JsonShape) {
  auto j = nlohmann::json::parse(emit_ideal(build_line_system(BoardGeometry::torus(2, 2)), IdealFormat::json));
  EXPECT_EQ(j["kind"], "torus");
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["n"], 2);
  EXPECT_TRUE(j["cubics"].empty());
  EXPECT_EQ(j["square_count"], 4);
}

TEST(EmitIdeal, DeterministicAndCountsMatch) {
  for (auto f : {IdealFormat::macaulay2, IdealFormat::singular, IdealFormat::cocoa, IdealFormat::json}) {
    auto sys = build_line_system(BoardGeometry::torus(4, 6));
    auto a = emit_ideal(sys, f);
    EXPECT_EQ(a, emit_ideal(build_line_system(BoardGeometry::torus(4, 6)), f));
    if (f == IdealFormat::json) continue;
    EXPECT_EQ(count_matches(a, R"(\^2)"), 24U);
    EXPECT_EQ(count_matches(a, R"(\*)"), 2 * sys.triples().size());
  }
}

TEST(EmitIdeal, VariableHeaders) {
  auto sys = build_line_system(BoardGeometry::torus(2, 3));
  EXPECT_NE(emit_ideal(sys, IdealFormat::macaulay2).find("R = ZZ/2[x_(1,1)..x_(2,3)];"), std::string::npos);
  EXPECT_NE(emit_ideal(sys, IdealFormat::singular).find("ring r = 2, (x(1..2)(1..3)), dp;"), std::string::npos);
  EXPECT_NE(emit_ideal(sys, IdealFormat::cocoa).find("use R ::= ZZ/(2)[x[1..2,1..3]];"), std::string::npos);
}

TEST(EmitIdeal, UnknownFormat) { EXPECT_THROW(parse_ideal_format("maple"), InvalidInput); }

}  // namespace
