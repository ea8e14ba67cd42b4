#pragma once

/**
 * @file constraints.hpp
 * @brief Forbidden triples and the pair-exclusion index, plus emission of the
 * equivalent squarefree monomial ideal for external computer algebra.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "n3l/geometry.hpp"

namespace n3l {

using Triple = std::array<int, 3>;  // sorted board indices

/// Search substrate for one board. Immutable once built.
class LineSystem {
 public:
  explicit LineSystem(const BoardGeometry& g) : geom_(g), lines_(enumerate_lines(g, 3)) {
    const int n = g.size();
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    excl_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * words_, 0);
    line_index_.resize(lines_.size());

    for (std::size_t li = 0; li < lines_.size(); ++li) {
      auto& idx = line_index_[li];
      for (auto p : lines_[li].points) idx.push_back(g.index(p));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
          for (std::size_t k = j + 1; k < idx.size(); ++k) triples_.push_back({idx[i], idx[j], idx[k]});
    }
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

    for (auto [a, b, c] : triples_) {
      mark(a, b, c);
      mark(b, a, c);
      mark(a, c, b);
      mark(c, a, b);
      mark(b, c, a);
      mark(c, b, a);
    }
  }

  [[nodiscard]] const BoardGeometry& geometry() const { return geom_; }
  [[nodiscard]] const LineSet& lines() const { return lines_; }
  /// Board indices of line i, ascending.
  [[nodiscard]] const std::vector<int>& line_indices(std::size_t i) const { return line_index_[i]; }
  [[nodiscard]] const std::vector<Triple>& triples() const { return triples_; }
  [[nodiscard]] int size() const { return geom_.size(); }

  /// Number of 64-bit words per exclusion row.
  [[nodiscard]] std::size_t words() const { return words_; }

  /// Raw bit row for pair_exclusion(p, q).
  [[nodiscard]] const std::uint64_t* exclusion_row(int p, int q) const {
    return excl_.data() + (static_cast<std::size_t>(p) * static_cast<std::size_t>(size()) +
                           static_cast<std::size_t>(q)) *
                              words_;
  }

  [[nodiscard]] bool excludes(int p, int q, int r) const {
    return (exclusion_row(p, q)[r >> 6] >> (r & 63)) & 1U;
  }

  /// { r : {p, q, r} is a forbidden triple }, ascending.
  [[nodiscard]] std::vector<int> pair_exclusion(int p, int q) const {
    std::vector<int> out;
    if (p == q) return out;
    for (int r = 0; r < size(); ++r)
      if (excludes(p, q, r)) out.push_back(r);
    return out;
  }

 private:
  void mark(int p, int q, int r) {
    auto* row = excl_.data() + (static_cast<std::size_t>(p) * static_cast<std::size_t>(size()) +
                                static_cast<std::size_t>(q)) *
                                   words_;
    row[r >> 6] |= std::uint64_t{1} << (r & 63);
  }

  BoardGeometry geom_;
  LineSet lines_;
  std::vector<std::vector<int>> line_index_;
  std::vector<Triple> triples_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> excl_;
};

inline LineSystem build_line_system(const BoardGeometry& g) { return LineSystem(g); }

enum class IdealFormat { macaulay2, singular, cocoa, json };

inline IdealFormat parse_ideal_format(const std::string& s) {
  if (s == "macaulay2" || s == "m2") return IdealFormat::macaulay2;
  if (s == "singular") return IdealFormat::singular;
  if (s == "cocoa") return IdealFormat::cocoa;
  if (s == "json") return IdealFormat::json;
  throw InvalidInput("unknown ideal format '" + s + "'");
}

namespace detail {

// Variable names are 1-indexed: x_(i,j) is the point (i-1, j-1), i the column.
inline std::string var_name(IdealFormat f, const BoardGeometry& g, int idx) {
  Point p = g.point(idx);
  auto i = std::to_string(p.x + 1);
  auto j = std::to_string(p.y + 1);
  switch (f) {
    case IdealFormat::macaulay2: return "x_(" + i + "," + j + ")";
    case IdealFormat::singular: return "x(" + i + ")(" + j + ")";
    case IdealFormat::cocoa: return "x[" + i + "," + j + "]";
    case IdealFormat::json: break;
  }
  return {};
}

inline std::string join_generators(IdealFormat f, const LineSystem& sys, const char* mul) {
  const auto& g = sys.geometry();
  std::vector<std::string> gens;
  for (const auto& t : sys.triples()) {
    std::string s;
    for (int k = 0; k < 3; ++k) s += (k ? mul : "") + var_name(f, g, t[static_cast<std::size_t>(k)]);
    gens.push_back(std::move(s));
  }
  for (int v = 0; v < g.size(); ++v) gens.push_back(var_name(f, g, v) + "^2");
  std::string out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    out += k ? ",\n  " : "  ";
    out += gens[k];
  }
  return out;
}

}  // namespace detail

/// Script for a computer algebra system whose Hilbert series reproduces the
/// placement counts. Cubic generators come first in triple order, then the
/// squares in index order. Output is byte-deterministic.
inline std::string emit_ideal(const LineSystem& sys, IdealFormat f) {
  const auto& g = sys.geometry();
  const auto m = std::to_string(g.m());
  const auto n = std::to_string(g.n());
  std::ostringstream os;
  const std::string header = "no-three-in-line ideal, " + to_string(g.kind()) + " " + m + "x" + n +
                             ", variables 1-indexed x(i,j) with i the column in [1," + m +
                             "] and j the row in [1," + n + "]; " +
                             std::to_string(sys.triples().size()) + " cubic and " +
                             std::to_string(g.size()) + " square generators";
  switch (f) {
    case IdealFormat::macaulay2:
      os << "-- " << header << "\n";
      os << "R = ZZ/2[x_(1,1)..x_(" << m << "," << n << ")];\n";
      os << "I = ideal(\n" << detail::join_generators(f, sys, "*") << "\n);\n";
      os << "reduceHilbert hilbertSeries(R/I)\n";
      break;
    case IdealFormat::singular:
      os << "// " << header << "\n";
      os << "ring r = 2, (x(1.." << m << ")(1.." << n << ")), dp;\n";
      os << "ideal I =\n" << detail::join_generators(f, sys, "*") << ";\n";
      os << "ideal G = std(I);\n";
      os << "hilb(G);\n";
      break;
    case IdealFormat::cocoa:
      os << "-- " << header << "\n";
      os << "use R ::= ZZ/(2)[x[1.." << m << ",1.." << n << "]];\n";
      os << "I := ideal(\n" << detail::join_generators(f, sys, "*") << "\n);\n";
      os << "HilbertSeries(R/I);\n";
      break;
    case IdealFormat::json: {
      os << "{\"kind\":\"" << to_string(g.kind()) << "\",\"m\":" << m << ",\"n\":" << n
         << ",\"indexing\":\"1-based column,row\",\"cubics\":[";
      bool first = true;
      for (const auto& t : sys.triples()) {
        os << (first ? "" : ",") << "[";
        for (int k = 0; k < 3; ++k) {
          Point p = g.point(t[static_cast<std::size_t>(k)]);
          os << (k ? "," : "") << p.x + 1 << "," << p.y + 1;
        }
        os << "]";
        first = false;
      }
      os << "],\"squares\":\"implicit\",\"square_count\":" << g.size() << "}\n";
      break;
    }
  }
  return os.str();
}

}  // namespace n3l
