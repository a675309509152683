#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "jplus/geometry.hpp"

// Test-side reference implementations; the library never sees these.
namespace oracle {

using jplus::Point;
using jplus::PolylineCurve;
using jplus::Rational;

struct OracleHit {
  Point at;
  std::size_t e1, e2;
  Rational t1, t2;
};

// All-pairs exact segment intersection, written without any of the library's
// predicates.
inline std::vector<OracleHit> brute_force(const PolylineCurve& c) {
  std::vector<OracleHit> hits;
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      const Point& p = c.vertices[i];
      const Point& q = c.vertices[(i + 1) % m];
      const Point& r = c.vertices[j];
      const Point& s = c.vertices[(j + 1) % m];
      const Rational dx1 = q.x - p.x, dy1 = q.y - p.y, dx2 = s.x - r.x, dy2 = s.y - r.y;
      const Rational det = dx1 * dy2 - dy1 * dx2;
      if (det == 0) continue;
      const Rational t = ((r.x - p.x) * dy2 - (r.y - p.y) * dx2) / det;
      const Rational u = ((r.x - p.x) * dy1 - (r.y - p.y) * dx1) / det;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      hits.push_back({{p.x + t * dx1, p.y + t * dy1}, i, j, t, u});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const OracleHit& a, const OracleHit& b) {
    return a.e1 < b.e1 || (a.e1 == b.e1 && a.t1 < b.t1);
  });
  return hits;
}

inline PolylineCurve random_curve(std::mt19937_64& rng, std::size_t m, long range) {
  std::uniform_int_distribution<long> coord(0, range);
  PolylineCurve c;
  for (std::size_t i = 0; i < m; ++i) c.vertices.push_back({Rational(coord(rng)), Rational(coord(rng))});
  return c;
}

}  // namespace oracle
