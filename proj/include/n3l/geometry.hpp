#pragma once

/**
 * @file geometry.hpp
 * @brief Boards, points, directions and lines on discrete tori and lattices.
 *
 * A torus line is the image of an integer line under the projection
 * Z x Z -> Z_m x Z_n. Such an image is a coset of the cyclic subgroup
 * generated by the residue of a primitive integer vector. A residue pair
 * (a, b) arises that way exactly when gcd(a, b, gcd(m, n)) = 1; we call
 * such pairs liftable. Lattice lines are the usual Euclidean ones,
 * restricted to [0, m) x [0, n).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "n3l/error.hpp"

namespace n3l {

enum class Kind { torus, lattice };

inline std::string to_string(Kind k) { return k == Kind::torus ? "torus" : "lattice"; }

inline Kind parse_kind(const std::string& s) {
  if (s == "torus") return Kind::torus;
  if (s == "lattice") return Kind::lattice;
  throw InvalidInput("unknown geometry '" + s + "' (expected torus or lattice)");
}

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// A direction vector. On a torus both components are residues in [0,m) x
/// [0,n); on a lattice they are a primitive integer vector with a > 0, or
/// a == 0 and b == 1.
struct Direction {
  int a = 0;
  int b = 0;
  friend constexpr auto operator<=>(const Direction&, const Direction&) = default;
};

/// An m x n board. x ranges over [0, m) (columns), y over [0, n) (rows).
class BoardGeometry {
 public:
  BoardGeometry(Kind kind, int m, int n) : kind_(kind), m_(m), n_(n) {
    if (m < 1 || n < 1)
      throw InvalidInput("board dimensions must be positive, got " + std::to_string(m) + "x" +
                         std::to_string(n));
  }

  static BoardGeometry torus(int m, int n) { return {Kind::torus, m, n}; }
  static BoardGeometry lattice(int m, int n) { return {Kind::lattice, m, n}; }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_torus() const { return kind_ == Kind::torus; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int size() const { return m_ * n_; }

  [[nodiscard]] bool contains(Point p) const { return p.x >= 0 && p.x < m_ && p.y >= 0 && p.y < n_; }

  [[nodiscard]] int index(Point p) const { return p.x * n_ + p.y; }
  [[nodiscard]] Point point(int idx) const { return {idx / n_, idx % n_}; }

  /// Reduce arbitrary integer coordinates onto the torus.
  [[nodiscard]] Point wrap(long long x, long long y) const {
    auto mx = static_cast<int>(((x % m_) + m_) % m_);
    auto my = static_cast<int>(((y % n_) + n_) % n_);
    return {mx, my};
  }

  [[nodiscard]] Point add(Point p, Direction d) const { return wrap(p.x + d.a, p.y + d.b); }

  /// Throws InvalidInput unless p lies on the board.
  void require(Point p) const {
    if (!contains(p))
      throw InvalidInput("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                         ") is outside the " + std::to_string(m_) + "x" + std::to_string(n_) +
                         " board");
  }

  friend bool operator==(const BoardGeometry&, const BoardGeometry&) = default;

 private:
  Kind kind_;
  int m_;
  int n_;
};

struct Line {
  std::vector<Point> points;  // sorted by board index
  Direction direction;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool contains(Point p) const {
    return std::binary_search(points.begin(), points.end(), p);
  }
  friend bool operator==(const Line&, const Line&) = default;
};

using LineSet = std::vector<Line>;

namespace detail {

inline int gcd3(int a, int b, int c) { return std::gcd(std::gcd(a, b), c); }

/// Additive order of (a, b) in Z_m x Z_n.
inline int element_order(const BoardGeometry& g, Direction d) {
  int ox = g.m() / std::gcd(d.a, g.m());
  int oy = g.n() / std::gcd(d.b, g.n());
  return std::lcm(ox, oy);
}

/// Elements of <d> as board indices, sorted.
inline std::vector<int> subgroup(const BoardGeometry& g, Direction d) {
  int ord = element_order(g, d);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ord));
  for (int k = 0; k < ord; ++k)
    out.push_back(g.index(g.wrap(static_cast<long long>(k) * d.a, static_cast<long long>(k) * d.b)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Lexicographically least generator of <d>.
inline Direction canonical_generator(const BoardGeometry& g, Direction d) {
  int ord = element_order(g, d);
  Direction best = d;
  for (int k = 1; k < std::max(ord, 2); ++k) {
    if (std::gcd(k, ord) != 1) continue;
    Point p = g.wrap(static_cast<long long>(k) * d.a, static_cast<long long>(k) * d.b);
    Direction c{p.x, p.y};
    if (c < best) best = c;
  }
  return best;
}

inline bool is_liftable(const BoardGeometry& g, Direction d) {
  return gcd3(d.a, d.b, std::gcd(g.m(), g.n())) == 1;
}

inline bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::vector<Point> to_points(const BoardGeometry& g, const std::vector<int>& idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (int i : idx) pts.push_back(g.point(i));
  return pts;
}

inline void require_distinct(Point p, Point q, Point r) {
  if (p == q || p == r || q == r) throw InvalidInput("collinearity needs three distinct points");
}

}  // namespace detail

/// Canonical generators of the distinct subgroups <(a,b)> over all liftable
/// residue pairs, sorted lexicographically.
inline std::vector<Direction> liftable_directions(const BoardGeometry& g) {
  if (!g.is_torus()) throw UnsupportedGeometry("liftable directions are defined on tori only");
  std::set<Direction> seen;
  for (int a = 0; a < g.m(); ++a)
    for (int b = 0; b < g.n(); ++b)
      if (detail::is_liftable(g, {a, b})) seen.insert(detail::canonical_generator(g, {a, b}));
  return {seen.begin(), seen.end()};
}

namespace detail {

inline LineSet torus_lines(const BoardGeometry& g, int min_size) {
  auto dirs = liftable_directions(g);
  std::vector<std::vector<int>> groups;
  groups.reserve(dirs.size());
  for (auto d : dirs) groups.push_back(subgroup(g, d));

  LineSet lines;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto& h = groups[i];
    if (static_cast<int>(h.size()) < min_size) continue;
    // A coset of <d> is contained in a coset of <d'> iff <d> is a subgroup of <d'>.
    bool maximal = true;
    for (std::size_t j = 0; j < dirs.size() && maximal; ++j)
      if (j != i && groups[j].size() > h.size() && is_subset(h, groups[j])) maximal = false;
    if (!maximal) continue;

    std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
    for (int t = 0; t < g.size(); ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      Point base = g.point(t);
      std::vector<int> coset;
      coset.reserve(h.size());
      for (int e : h) {
        Point q = g.point(e);
        int idx = g.index(g.wrap(base.x + q.x, base.y + q.y));
        used[static_cast<std::size_t>(idx)] = true;
        coset.push_back(idx);
      }
      std::sort(coset.begin(), coset.end());
      lines.push_back({to_points(g, coset), dirs[i]});
    }
  }
  return lines;
}

inline LineSet lattice_lines(const BoardGeometry& g, int min_size) {
  LineSet lines;
  for (int a = 0; a < g.m(); ++a) {
    for (int b = -(g.n() - 1); b < g.n(); ++b) {
      if (a == 0 && b != 1) continue;
      if (std::gcd(a, std::abs(b)) != 1) continue;
      for (int s = 0; s < g.size(); ++s) {
        Point p = g.point(s);
        if (g.contains({p.x - a, p.y - b})) continue;  // not the start of its line
        std::vector<Point> pts;
        for (Point q = p; g.contains(q); q = {q.x + a, q.y + b}) pts.push_back(q);
        if (static_cast<int>(pts.size()) < min_size) continue;
        std::sort(pts.begin(), pts.end());
        lines.push_back({std::move(pts), {a, b}});
      }
    }
  }
  return lines;
}

}  // namespace detail

/// All inclusion-maximal lines with at least min_size points, sorted by
/// their point-index sequences.
inline LineSet enumerate_lines(const BoardGeometry& g, int min_size = 3) {
  if (min_size < 2) throw InvalidInput("min_size must be at least 2");
  LineSet lines = g.is_torus() ? detail::torus_lines(g, min_size) : detail::lattice_lines(g, min_size);
  // Point order within a line equals index order, so comparing point vectors
  // compares index sequences.
  std::sort(lines.begin(), lines.end(),
            [](const Line& l, const Line& r) { return l.points < r.points; });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const Line& l, const Line& r) { return l.points == r.points; }),
              lines.end());
  return lines;
}

namespace detail {

inline bool in_subgroup(const BoardGeometry& g, Direction d, Point u) {
  int ord = element_order(g, d);
  for (int k = 0; k < ord; ++k)
    if (g.wrap(static_cast<long long>(k) * d.a, static_cast<long long>(k) * d.b) == u) return true;
  return false;
}

}  // namespace detail

/// Integer determinant of the 3x3 matrix with rows (1,1,1), (x1,x2,x3), (y1,y2,y3).
inline long long orientation(Point p, Point q, Point r) {
  return static_cast<long long>(q.x - p.x) * (r.y - p.y) -
         static_cast<long long>(r.x - p.x) * (q.y - p.y);
}

/// Whether three distinct points lie on a common line of the board.
inline bool collinear(const BoardGeometry& g, Point p, Point q, Point r) {
  g.require(p);
  g.require(q);
  g.require(r);
  detail::require_distinct(p, q, r);
  if (!g.is_torus()) return orientation(p, q, r) == 0;

  // On the torus: both differences from p must lie in one liftable subgroup.
  Point u = g.wrap(q.x - p.x, q.y - p.y);
  Point v = g.wrap(r.x - p.x, r.y - p.y);
  for (int a = 0; a < g.m(); ++a)
    for (int b = 0; b < g.n(); ++b) {
      Direction d{a, b};
      if (!detail::is_liftable(g, d)) continue;
      if (detail::element_order(g, d) < 3) continue;
      if (detail::in_subgroup(g, d, u) && detail::in_subgroup(g, d, v)) return true;
    }
  return false;
}

/// Lines with at least three points through p.
inline LineSet lines_through(const BoardGeometry& g, Point p) {
  g.require(p);
  LineSet out;
  for (auto& l : enumerate_lines(g, 3))
    if (l.contains(p)) out.push_back(l);
  return out;
}

/// Test oracle straight from the covering-projection definition: search
/// integer lifts (a + i m, b + j n), i, j in [0, lift_bound), of every residue
/// direction for a primitive vector whose projected line through p also
/// contains q and r.
inline bool cover_oracle_collinear(const BoardGeometry& g, Point p, Point q, Point r, int lift_bound) {
  if (!g.is_torus()) throw UnsupportedGeometry("cover oracle is defined on tori only");
  g.require(p);
  g.require(q);
  g.require(r);
  detail::require_distinct(p, q, r);
  for (int a = 0; a < g.m(); ++a)
    for (int b = 0; b < g.n(); ++b) {
      bool primitive_lift = false;
      for (int i = 0; i < lift_bound && !primitive_lift; ++i)
        for (int j = 0; j < lift_bound && !primitive_lift; ++j)
          primitive_lift = std::gcd(a + i * g.m(), b + j * g.n()) == 1;
      if (!primitive_lift) continue;
      // The projected line through p is {p + k (a, b)}; the order of (a, b)
      // bounds the steps before it closes up.
      bool hit_q = false, hit_r = false;
      Point cur = p;
      for (int k = 0; k < g.size(); ++k) {
        hit_q = hit_q || cur == q;
        hit_r = hit_r || cur == r;
        cur = g.add(cur, {a, b});
      }
      if (hit_q && hit_r) return true;
    }
  return false;
}

}  // namespace n3l
