#pragma once

/**
 * @file constructions.hpp
 * @brief Explicit no-three-in-line placements on prime-sized tori, and the
 * closed-form values of T known for special families of boards.
 *
 * Every construction is run through the checker before it is returned; a
 * placement that fails is reported as a VerificationFailure, never returned.
 */

#include <optional>
#include <string>
#include <vector>

#include "n3l/checker.hpp"

namespace n3l {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

inline void require_prime(long long p, const char* what) {
  if (!is_prime(p)) throw InvalidInput(std::string(what) + " must be prime, got " + std::to_string(p));
}

inline Placement verified(const BoardGeometry& g, std::vector<Point> pts, std::size_t expected,
                          const std::string& name) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw VerificationFailure(name + ": generated points are not distinct");
  Placement pl(g, std::move(pts));
  if (pl.size() != expected)
    throw VerificationFailure(name + ": expected " + std::to_string(expected) + " points, got " +
                              std::to_string(pl.size()));
  auto res = check_placement(build_line_system(g), pl);
  if (!res.ok) {
    const auto& t = res.witness->triple;
    std::string msg = name + ": three points in a line:";
    for (auto p : t) msg += " (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    throw VerificationFailure(msg);
  }
  return pl;
}

}  // namespace detail

/// Least quadratic nonresidue modulo an odd prime.
inline int least_nonresidue(int p) {
  detail::require_prime(p, "p");
  if (p == 2) throw InvalidInput("there is no quadratic nonresidue modulo 2");
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (long long x = 0; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
  for (int q = 1; q < p; ++q)
    if (!square[static_cast<std::size_t>(q)]) return q;
  throw Error("no nonresidue found");  // unreachable for odd primes
}

/// The points (x, x^2 mod p) on the p x p torus.
inline Placement parabola(int p) {
  detail::require_prime(p, "p");
  std::vector<Point> pts;
  for (long long x = 0; x < p; ++x) pts.push_back({static_cast<int>(x), static_cast<int>(x * x % p)});
  return detail::verified(BoardGeometry::torus(p, p), std::move(pts), static_cast<std::size_t>(p),
                          "parabola");
}

/// The 2p points X = {(x, p x^2 mod p^2)} and its half-turn
/// Y = {(p - 1 - x, -p x^2 - 1 mod p^2)} on the p x p^2 torus.
inline Placement prime_square(int p) {
  detail::require_prime(p, "p");
  const long long p2 = static_cast<long long>(p) * p;
  std::vector<Point> x_set, y_set;
  for (long long x = 0; x < p; ++x) {
    x_set.push_back({static_cast<int>(x), static_cast<int>(detail::mod(p * x * x, p2))});
    y_set.push_back({static_cast<int>(p - x - 1), static_cast<int>(detail::mod(-p * x * x - 1, p2))});
  }
  for (auto a : x_set)
    for (auto b : y_set)
      if (a == b) throw VerificationFailure("prime_square: X and Y intersect");
  x_set.insert(x_set.end(), y_set.begin(), y_set.end());
  return detail::verified(BoardGeometry::torus(p, static_cast<int>(p2)), std::move(x_set),
                          2 * static_cast<std::size_t>(p), "prime_square");
}

/// p + 1 points on the p x p torus: the unit fiber of the norm form
/// x^2 - q y^2 for a nonresidue q. For p = 2 any three points work.
inline Placement conic(int p) {
  detail::require_prime(p, "p");
  auto g = BoardGeometry::torus(p, p);
  if (p == 2) return detail::verified(g, {{0, 0}, {0, 1}, {1, 0}}, 3, "conic");
  const long long q = least_nonresidue(p);
  std::vector<Point> pts;
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y)
      if (detail::mod(x * x - q * y * y, p) == 1) pts.push_back({static_cast<int>(x), static_cast<int>(y)});
  return detail::verified(g, std::move(pts), static_cast<std::size_t>(p) + 1, "conic");
}

/// p + 1 points on the p x pq torus for distinct odd primes p, q:
/// X = {(q x^2 mod p, p x^4 mod pq)} and its half-turn
/// Y = {((p-1)/2 - q x^2 mod p, q (p-1)^2/4 - p x^4 mod pq)}, x in [0, (p-1)/2].
///
/// For p >= 5 every point of X lies in the cyclic subgroup generated by (1, p),
/// so X alone already has three points in a line. In that case the conic of the
/// p x p torus is used instead: lines of the p x pq torus project onto lines of
/// the p x p torus, so any arc there lifts unchanged.
inline Placement prime_pq(int p, int q) {
  detail::require_prime(p, "p");
  detail::require_prime(q, "q");
  if (p == 2 || q == 2) throw InvalidInput("prime_pq needs odd primes");
  if (p == q) throw InvalidInput("prime_pq needs distinct primes");
  const long long pq = static_cast<long long>(p) * q;
  const long long h = (p - 1) / 2;
  const auto g = BoardGeometry::torus(p, static_cast<int>(pq));
  const auto expected = static_cast<std::size_t>(p) + 1;
  std::vector<Point> x_set, y_set;
  for (long long x = 0; x <= h; ++x) {
    const long long x2 = x * x % pq;
    const long long x4 = x2 * x2 % pq;
    x_set.push_back({static_cast<int>(detail::mod(q * x2, p)), static_cast<int>(detail::mod(p * x4, pq))});
    y_set.push_back({static_cast<int>(detail::mod(h - q * x2, p)),
                     static_cast<int>(detail::mod(q * h * h - p * x4, pq))});
  }
  bool disjoint = true;
  for (auto a : x_set)
    for (auto b : y_set)
      if (a == b) disjoint = false;
  if (disjoint) {
    x_set.insert(x_set.end(), y_set.begin(), y_set.end());
    try {
      return detail::verified(g, std::move(x_set), expected, "prime_pq");
    } catch (const VerificationFailure&) {
    }
  }
  return detail::verified(g, conic(p).points(), expected, "prime_pq");
}

enum class Family { cyclic_coprime, two_by_even, p_by_p, p_by_p2, p_by_pq };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::cyclic_coprime: return "cyclic_coprime";
    case Family::two_by_even: return "two_by_even";
    case Family::p_by_p: return "p_by_p";
    case Family::p_by_p2: return "p_by_p2";
    case Family::p_by_pq: return "p_by_pq";
  }
  return {};
}

struct KnownValue {
  int m = 0;
  int n = 0;
  int value = 0;
  Family family = Family::cyclic_coprime;
};

/// Closed-form T for the torus (m, n) when it belongs to a solved family.
inline std::optional<KnownValue> predicted_value(int m, int n) {
  if (m < 1 || n < 1) return std::nullopt;
  const int a = std::min(m, n);
  const int b = std::max(m, n);
  if (std::gcd(a, b) == 1) return KnownValue{m, n, m * n == 1 ? 1 : 2, Family::cyclic_coprime};
  if (a == 2 && b % 2 == 0) return KnownValue{m, n, 4, Family::two_by_even};
  if (!is_prime(a)) return std::nullopt;
  if (a == b) return KnownValue{m, n, a + 1, Family::p_by_p};
  if (b == a * a) return KnownValue{m, n, 2 * a, Family::p_by_p2};
  if (b % a == 0 && is_prime(b / a) && b / a != a && b / a != 2)
    return KnownValue{m, n, a + 1, Family::p_by_pq};
  return std::nullopt;
}

}  // namespace n3l
