#pragma once

// Small independent reference computations used only by the tests.

#include "sympair/matrix.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using sympair::Integer;
using sympair::IntMatrix;
using sympair::Rational;
using sympair::RatVector;

// Fraction-free Bareiss elimination.
inline Integer det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of the k x k minors.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        g = boost::multiprecision::gcd(g, det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Rational cross(const RatVector& o, const RatVector& a, const RatVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Convex hull of planar points (monotone chain), counter-clockwise, collinear points dropped.
inline std::vector<RatVector> hull2d(std::vector<RatVector> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<RatVector> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

inline Rational shoelace(const std::vector<RatVector>& poly) {
  Rational a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return (a < 0 ? Rational(-a) : a) / 2;
}

// 1 inside, 0 on the boundary, -1 outside, for a full-dimensional convex polygon (ccw).
inline int polygon_side(const std::vector<RatVector>& poly, const RatVector& x) {
  int result = 1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Rational c = cross(poly[i], poly[(i + 1) % poly.size()], x);
    if (c < 0) return -1;
    if (c == 0) result = 0;
  }
  return result;
}

}  // namespace oracle
