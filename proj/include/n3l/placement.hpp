#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "n3l/geometry.hpp"

namespace n3l {

/// A set of distinct board points, kept sorted by board index.
class Placement {
 public:
  Placement(const BoardGeometry& g, std::vector<Point> pts) : geom_(g), points_(std::move(pts)) {
    for (auto p : points_) g.require(p);
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
      throw InvalidInput("placement contains a repeated point");
  }

  static Placement from_indices(const BoardGeometry& g, const std::vector<int>& idx) {
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (int i : idx) {
      if (i < 0 || i >= g.size()) throw InvalidInput("point index " + std::to_string(i) + " out of range");
      pts.push_back(g.point(i));
    }
    return {g, std::move(pts)};
  }

  [[nodiscard]] const BoardGeometry& geometry() const { return geom_; }
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }

  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(points_.size());
    for (auto p : points_) out.push_back(geom_.index(p));
    return out;
  }

  /// Every point shifted by t (torus only).
  [[nodiscard]] Placement translated(Point t) const {
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (auto p : points_) pts.push_back(geom_.wrap(p.x + t.x, p.y + t.y));
    return {geom_, std::move(pts)};
  }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  BoardGeometry geom_;
  std::vector<Point> points_;
};

}  // namespace n3l
