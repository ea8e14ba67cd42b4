#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "n3l/constraints.hpp"
#include "n3l/placement.hpp"

namespace n3l {

struct Witness {
  std::array<Point, 3> triple;
  Line line;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
};

namespace detail {

inline void require_same_board(const LineSystem& sys, const Placement& pl) {
  if (!(sys.geometry() == pl.geometry()))
    throw InvalidInput("placement geometry does not match the line system");
}

}  // namespace detail

/// Decides the no-three-in-line condition. On failure the witness is the
/// violating triple with the least sorted index sequence, together with the
/// first line (in line-set order) containing it.
namespace detail {

/// Occupancy mask of the placement, one bit per board index.
inline std::vector<std::uint64_t> occupancy(const LineSystem& sys, const std::vector<int>& idx) {
  std::vector<std::uint64_t> mask(sys.words(), 0);
  for (int i : idx) mask[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  return mask;
}

/// Least r > after with r excluded by (p, q) and occupied, or -1.
inline int next_excluded(const LineSystem& sys, const std::vector<std::uint64_t>& mask, int p, int q,
                         int after) {
  const auto* row = sys.exclusion_row(p, q);
  for (std::size_t w = static_cast<std::size_t>(after + 1) >> 6; w < sys.words(); ++w) {
    auto bits = row[w] & mask[w];
    if (w == static_cast<std::size_t>(after + 1) >> 6) bits &= ~std::uint64_t{0} << ((after + 1) & 63);
    if (bits) return static_cast<int>(64 * w) + std::countr_zero(bits);
  }
  return -1;
}

}  // namespace detail

/// Decides the no-three-in-line condition. On failure the witness is the
/// violating triple with the least sorted index sequence, together with the
/// first line (in line-set order) containing it.
inline CheckResult check_placement(const LineSystem& sys, const Placement& pl) {
  detail::require_same_board(sys, pl);
  const auto idx = pl.indices();  // ascending
  const auto mask = detail::occupancy(sys, idx);
  const auto& g = sys.geometry();
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      int r = detail::next_excluded(sys, mask, idx[i], idx[j], idx[j]);
      if (r < 0) continue;
      Witness w{{g.point(idx[i]), g.point(idx[j]), g.point(r)}, {}};
      for (const auto& l : sys.lines())
        if (l.contains(w.triple[0]) && l.contains(w.triple[1]) && l.contains(w.triple[2])) {
          w.line = l;
          break;
        }
      return {false, std::move(w)};
    }
  return {};
}

/// Number of 3-subsets of the placement that lie on a common line.
inline std::uint64_t count_collinear_triples(const LineSystem& sys, const Placement& pl) {
  detail::require_same_board(sys, pl);
  const auto idx = pl.indices();
  const auto mask = detail::occupancy(sys, idx);
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      for (int r = detail::next_excluded(sys, mask, idx[i], idx[j], idx[j]); r >= 0;
           r = detail::next_excluded(sys, mask, idx[i], idx[j], r))
        ++c;
  return c;
}

}  // namespace n3l
