#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jplus/error.hpp"

namespace jplus {

using Rational = mpq_class;
using Integer = mpz_class;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
// Counter-clockwise normal of the same length.
inline Point perp(const Point& a) { return {-a.y, a.x}; }

// Sign of cross(b - a, c - a): +1 when c lies left of the directed line a->b.
int orientation(const Point& a, const Point& b, const Point& c);

// "p/q", "p", or a decimal literal; always exact.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

// Closed polygonal loop through `vertices` in order.
struct PolylineCurve {
  std::vector<Point> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  const Point& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
  Point edge_vector(std::size_t e) const { return vertex(e + 1) - vertex(e); }

  friend bool operator==(const PolylineCurve&, const PolylineCurve&) = default;
};

PolylineCurve reversed(const PolylineCurve& curve);

// Position along the curve: edge index plus parameter in [0, 1).
struct CurvePosition {
  std::size_t edge = 0;
  Rational t;

  friend bool operator==(const CurvePosition& a, const CurvePosition& b) {
    return a.edge == b.edge && a.t == b.t;
  }
  friend bool operator<(const CurvePosition& a, const CurvePosition& b) {
    return a.edge < b.edge || (a.edge == b.edge && a.t < b.t);
  }
};

struct DoublePointRecord {
  Point location;
  CurvePosition first_visit;
  CurvePosition second_visit;
};

struct ValidatedCurve {
  PolylineCurve curve;
  std::vector<DoublePointRecord> double_points;
};

// Structural checks only: vertex count, zero-length edges, exact reversals.
void check_structure(const PolylineCurve& curve);

// All transverse interior crossings, sorted by first visit. Throws on any
// non-generic configuration.
std::vector<DoublePointRecord> find_intersections(const PolylineCurve& curve);

ValidatedCurve validate_curve(const PolylineCurve& curve);

// Rotation number from the summed turning angles (floating point, rounded and
// checked to be near an integer).
long turning_number_by_angles(const PolylineCurve& curve);
// Rotation number as the signed count of tangent passes through the +x
// direction; exact.
long turning_number_by_direction_count(const PolylineCurve& curve);
// Both of the above, required to agree.
long turning_number(const PolylineCurve& curve);

bool point_on_curve(const PolylineCurve& curve, const Point& p);
// Ray cast along (1, eps) with eps symbolic.
long point_winding(const PolylineCurve& curve, const Point& p);

// Exact segment predicates shared by the geometry and construction code.
bool point_on_segment(const Point& p, const Point& a, const Point& b);
// True when closed segments [a,b] and [c,d] share any point.
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d);
// True when the closed segment touches the closed axis-aligned box.
bool segment_touches_box(const Point& a, const Point& b, const Point& lo, const Point& hi);
// True when the ray origin + s*dir (s > 0) meets the closed segment [a,b].
bool ray_touches_segment(const Point& origin, const Point& dir, const Point& a, const Point& b);

// Similarity transforms z -> scale * z + offset with scale as a complex number
// (rotation plus uniform scaling, rational coefficients).
struct Similarity {
  Point scale{Rational(1), Rational(0)};
  Point offset{Rational(0), Rational(0)};

  Point apply(const Point& p) const {
    return {scale.x * p.x - scale.y * p.y + offset.x, scale.y * p.x + scale.x * p.y + offset.y};
  }
  Point apply_vector(const Point& v) const {
    return {scale.x * v.x - scale.y * v.y, scale.y * v.x + scale.x * v.y};
  }
  // this o other
  Similarity compose(const Similarity& other) const {
    return {apply_vector(other.scale), apply(other.offset)};
  }
};

PolylineCurve transformed(const PolylineCurve& curve, const Similarity& map);

}  // namespace jplus
