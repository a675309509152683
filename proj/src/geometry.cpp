#include "jplus/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>

namespace jplus {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::EdgeReversal: return "EdgeReversal";
    case ErrorCode::TripleOrHigherPoint: return "TripleOrHigherPoint";
    case ErrorCode::TangentialIntersection: return "TangentialIntersection";
    case ErrorCode::PointOnCurve: return "PointOnCurve";
    case ErrorCode::InconsistentWinding: return "InconsistentWinding";
    case ErrorCode::CornerPatternViolation: return "CornerPatternViolation";
    case ErrorCode::UnrealizableCode: return "UnrealizableCode";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::ArcNotOuter: return "ArcNotOuter";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::FaceUnbounded: return "FaceUnbounded";
    case ErrorCode::PlacementFailure: return "PlacementFailure";
    case ErrorCode::ArcNotOnFace: return "ArcNotOnFace";
    case ErrorCode::IllegalSite: return "IllegalSite";
    case ErrorCode::NoGeometry: return "NoGeometry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(cross(b - a, c - a));
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  try {
    if (s.find_first_of(".eE") == std::string::npos) {
      Rational r(s, 10);
      if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
  // Decimal literal: sign, digits, optional fraction, optional exponent.
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits.push_back(s[i++]);
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i++]);
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    try {
      std::size_t used = 0;
      exponent += std::stol(s.substr(i), &used);
      i += used;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad exponent in '" + text + "'");
    }
  }
  if (i != s.size()) throw Error(ErrorCode::ParseError, "trailing characters in '" + text + "'");
  Integer mantissa(digits, 10);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

PolylineCurve reversed(const PolylineCurve& curve) {
  PolylineCurve out;
  out.vertices.reserve(curve.size());
  if (curve.size() == 0) return out;
  out.vertices.push_back(curve.vertices[0]);
  for (std::size_t i = curve.size() - 1; i > 0; --i) out.vertices.push_back(curve.vertices[i]);
  return out;
}

PolylineCurve transformed(const PolylineCurve& curve, const Similarity& map) {
  PolylineCurve out;
  out.vertices.reserve(curve.size());
  for (const auto& v : curve.vertices) out.vertices.push_back(map.apply(v));
  return out;
}

void check_structure(const PolylineCurve& curve) {
  const std::size_t n = curve.size();
  if (n < 3) throw Error(ErrorCode::NotClosed, "a closed curve needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (curve.vertex(i) == curve.vertex(i + 1)) {
      throw Error(ErrorCode::NotClosed, "zero-length edge at vertex " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = curve.edge_vector(i + n - 1);
    const Point b = curve.edge_vector(i);
    if (sgn(cross(a, b)) == 0 && sgn(dot(a, b)) < 0) {
      throw Error(ErrorCode::EdgeReversal, "curve reverses direction at vertex " + std::to_string(i));
    }
  }
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && point_on_segment(c, a, b)) || (o2 == 0 && point_on_segment(d, a, b)) ||
         (o3 == 0 && point_on_segment(a, c, d)) || (o4 == 0 && point_on_segment(b, c, d));
}

bool segment_touches_box(const Point& a, const Point& b, const Point& lo, const Point& hi) {
  auto inside = [&](const Point& p) {
    return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
  };
  if (inside(a) || inside(b)) return true;
  const Point c1{lo.x, lo.y}, c2{hi.x, lo.y}, c3{hi.x, hi.y}, c4{lo.x, hi.y};
  return segments_touch(a, b, c1, c2) || segments_touch(a, b, c2, c3) ||
         segments_touch(a, b, c3, c4) || segments_touch(a, b, c4, c1);
}

bool ray_touches_segment(const Point& origin, const Point& dir, const Point& a, const Point& b) {
  const Point d = b - a;
  const Rational denom = cross(dir, d);
  if (sgn(denom) == 0) {
    if (sgn(cross(dir, a - origin)) != 0) return false;
    return sgn(dot(a - origin, dir)) > 0 || sgn(dot(b - origin, dir)) > 0;
  }
  const Rational s = cross(a - origin, d) / denom;
  const Rational lambda = cross(a - origin, dir) / denom;
  return sgn(s) > 0 && sgn(lambda) >= 0 && lambda <= 1;
}

namespace {

bool adjacent_edges(std::size_t i, std::size_t j, std::size_t n) {
  return (i + 1) % n == j || (j + 1) % n == i;
}

struct EdgeBox {
  std::size_t edge;
  Rational min_x, max_x, min_y, max_y;
};

// Classifies one non-adjacent edge pair; returns a record for a transverse
// interior crossing and throws on touching configurations.
std::optional<DoublePointRecord> classify_pair(const PolylineCurve& curve, std::size_t i,
                                               std::size_t j) {
  const Point& a = curve.vertex(i);
  const Point& b = curve.vertex(i + 1);
  const Point& c = curve.vertex(j);
  const Point& d = curve.vertex(j + 1);
  if (!segments_touch(a, b, c, d)) return std::nullopt;
  const Point r = b - a;
  const Point s = d - c;
  const Rational denom = cross(r, s);
  if (sgn(denom) == 0) {
    throw Error(ErrorCode::TangentialIntersection,
                "edges " + std::to_string(i) + " and " + std::to_string(j) + " overlap collinearly");
  }
  const Rational t = cross(c - a, s) / denom;
  const Rational u = cross(c - a, r) / denom;
  if (sgn(t) <= 0 || t >= 1 || sgn(u) <= 0 || u >= 1) {
    throw Error(ErrorCode::TangentialIntersection,
                "edges " + std::to_string(i) + " and " + std::to_string(j) + " meet at an endpoint");
  }
  DoublePointRecord rec;
  rec.location = a + t * r;
  rec.first_visit = {i, t};
  rec.second_visit = {j, u};
  return rec;
}

}  // namespace

std::vector<DoublePointRecord> find_intersections(const PolylineCurve& curve) {
  check_structure(curve);
  const std::size_t n = curve.size();
  std::vector<EdgeBox> boxes;
  boxes.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    const Point& a = curve.vertex(e);
    const Point& b = curve.vertex(e + 1);
    boxes.push_back({e, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                     std::max(a.y, b.y)});
  }
  std::sort(boxes.begin(), boxes.end(),
            [](const EdgeBox& l, const EdgeBox& r) { return l.min_x < r.min_x; });

  // Sweep in x; only pairs with overlapping boxes reach the exact test.
  std::vector<DoublePointRecord> out;
  std::vector<const EdgeBox*> active;
  for (const auto& box : boxes) {
    std::erase_if(active, [&](const EdgeBox* other) { return other->max_x < box.min_x; });
    for (const EdgeBox* other : active) {
      if (other->max_y < box.min_y || box.max_y < other->min_y) continue;
      const std::size_t i = std::min(box.edge, other->edge);
      const std::size_t j = std::max(box.edge, other->edge);
      if (adjacent_edges(i, j, n)) continue;  // sharing a vertex; reversals caught above
      if (auto rec = classify_pair(curve, i, j)) out.push_back(std::move(*rec));
    }
    active.push_back(&box);
  }

  std::map<Point, int> multiplicity;
  for (const auto& rec : out) {
    if (++multiplicity[rec.location] > 1) {
      throw Error(ErrorCode::TripleOrHigherPoint, "three or more edges meet at (" +
                                                      format_rational(rec.location.x) + ", " +
                                                      format_rational(rec.location.y) + ")");
    }
  }
  std::sort(out.begin(), out.end(), [](const DoublePointRecord& l, const DoublePointRecord& r) {
    return l.first_visit < r.first_visit;
  });
  return out;
}

ValidatedCurve validate_curve(const PolylineCurve& curve) {
  ValidatedCurve vc;
  vc.double_points = find_intersections(curve);
  vc.curve = curve;
  return vc;
}

namespace {

long double direction_angle(const Point& v) {
  // Scale into [-1, 1] exactly before converting, so huge or tiny rationals
  // still give a usable double.
  Rational m = abs(v.x) > abs(v.y) ? Rational(abs(v.x)) : Rational(abs(v.y));
  const Rational x = v.x / m;
  const Rational y = v.y / m;
  return std::atan2(static_cast<long double>(y.get_d()), static_cast<long double>(x.get_d()));
}

// Pseudo-angle class: 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Point& v) { return (sgn(v.y) < 0 || (sgn(v.y) == 0 && sgn(v.x) < 0)) ? 1 : 0; }

// Strict angular order on [0, 2pi).
bool angle_less(const Point& a, const Point& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

}  // namespace

long turning_number_by_angles(const PolylineCurve& curve) {
  check_structure(curve);
  const std::size_t n = curve.size();
  long double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double turn = direction_angle(curve.edge_vector(i)) - direction_angle(curve.edge_vector(i + n - 1));
    const long double pi = std::numbers::pi_v<long double>;
    while (turn > pi) turn -= 2 * pi;
    while (turn <= -pi) turn += 2 * pi;
    total += turn;
  }
  const long double turns = total / (2 * std::numbers::pi_v<long double>);
  const long rounded = std::lround(static_cast<double>(turns));
  if (std::fabs(static_cast<double>(turns - rounded)) > 1e-6) {
    throw Error(ErrorCode::IdentityViolation, "angle sum is not a multiple of 2pi");
  }
  return rounded;
}

long turning_number_by_direction_count(const PolylineCurve& curve) {
  check_structure(curve);
  const std::size_t n = curve.size();
  long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = curve.edge_vector(i + n - 1);
    const Point b = curve.edge_vector(i);
    const int turn = sgn(cross(a, b));
    // A left turn that wraps past angle 0 is a "smile", a right turn that wraps
    // back below 0 is a "frown".
    if (turn > 0 && angle_less(b, a)) ++count;
    if (turn < 0 && angle_less(a, b)) --count;
  }
  return count;
}

long turning_number(const PolylineCurve& curve) {
  const long by_count = turning_number_by_direction_count(curve);
  const long by_angles = turning_number_by_angles(curve);
  if (by_count != by_angles) {
    throw Error(ErrorCode::IdentityViolation, "turning number methods disagree: " +
                                                  std::to_string(by_count) + " vs " +
                                                  std::to_string(by_angles));
  }
  return by_count;
}

bool point_on_curve(const PolylineCurve& curve, const Point& p) {
  for (std::size_t e = 0; e < curve.size(); ++e) {
    if (point_on_segment(p, curve.vertex(e), curve.vertex(e + 1))) return true;
  }
  return false;
}

long point_winding(const PolylineCurve& curve, const Point& p) {
  if (point_on_curve(curve, p)) throw Error(ErrorCode::PointOnCurve, "point lies on the curve");
  // Side of the line through p with slope eps -> 0+.
  auto above = [&](const Point& q) {
    const int s = sgn(q.y - p.y);
    if (s != 0) return s > 0;
    return q.x < p.x;
  };
  long winding = 0;
  for (std::size_t e = 0; e < curve.size(); ++e) {
    const Point& a = curve.vertex(e);
    const Point& b = curve.vertex(e + 1);
    const bool a_up = above(a);
    const bool b_up = above(b);
    if (a_up == b_up) continue;
    const int side = orientation(a, b, p);
    if (!a_up && b_up && side > 0) ++winding;
    if (a_up && !b_up && side < 0) --winding;
  }
  return winding;
}

}  // namespace jplus
