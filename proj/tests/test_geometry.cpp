#include <algorithm>
#include <random>

#include "doctest.h"
#include "jplus/geometry.hpp"
#include "oracle.hpp"

using namespace jplus;
using oracle::brute_force;
using oracle::random_curve;

namespace {

PolylineCurve poly(std::initializer_list<std::pair<long, long>> pts) {
  PolylineCurve c;
  for (auto [x, y] : pts) c.vertices.push_back({Rational(x), Rational(y)});
  return c;
}

}  // namespace

TEST_CASE("validate_curve on the basic shapes") {
  CHECK(validate_curve(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).double_points.empty());
  const auto bowtie = validate_curve(poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
  REQUIRE(bowtie.double_points.size() == 1);
  CHECK(bowtie.double_points[0].location == Point{Rational(1), Rational(1)});
}

TEST_CASE("degenerate inputs are rejected with their codes") {
  auto code_of = [](const PolylineCurve& c) {
    try {
      validate_curve(c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of(poly({{0, 0}, {1, 0}})) == ErrorCode::NotClosed);
  CHECK(code_of(poly({{0, 0}, {1, 0}, {1, 0}, {0, 1}})) == ErrorCode::NotClosed);
  CHECK(code_of(poly({{0, 0}, {2, 0}, {1, 0}, {1, 1}})) == ErrorCode::EdgeReversal);
  // Three strands through the origin.
  CHECK(code_of(poly({{-1, 0}, {1, 0}, {1, 1}, {-1, -1}, {0, -2}, {0, 2}, {-2, 2}})) ==
        ErrorCode::TripleOrHigherPoint);
  // A vertex lying on another edge.
  CHECK(code_of(poly({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}})) ==
        ErrorCode::TangentialIntersection);
  // Collinear overlap.
  CHECK(code_of(poly({{0, 0}, {4, 0}, {4, 2}, {1, 0}, {3, -2}, {-1, -2}})) ==
        ErrorCode::TangentialIntersection);
}

TEST_CASE("find_intersections matches the all-pairs oracle on random curves") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    const PolylineCurve c = random_curve(rng, 60, 1000000);
    const auto mine = find_intersections(c);
    const auto oracle = brute_force(c);
    REQUIRE(mine.size() == oracle.size());
    for (std::size_t k = 0; k < mine.size(); ++k) {
      CHECK(mine[k].location == oracle[k].at);
      CHECK(mine[k].first_visit == CurvePosition{oracle[k].e1, oracle[k].t1});
      CHECK(mine[k].second_visit == CurvePosition{oracle[k].e2, oracle[k].t2});
    }
  }
}

TEST_CASE("turning number both ways") {
  const auto square = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(turning_number(square) == 1);
  CHECK(turning_number(reversed(square)) == -1);
  CHECK(turning_number(poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}})) == 0);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    PolylineCurve c = random_curve(rng, 30, 1000);
    try {
      check_structure(c);
    } catch (const Error&) {
      continue;
    }
    const long r = turning_number_by_angles(c);
    CHECK(r == turning_number_by_direction_count(c));
    Similarity rot{{Rational(3), Rational(4)}, {Rational(-7), Rational(1, 3)}};
    CHECK(turning_number(transformed(c, rot)) == r);
    PolylineCurve mirror = c;
    for (auto& v : mirror.vertices) v.x = -v.x;
    CHECK(turning_number(mirror) == -r);
    CHECK(turning_number(reversed(c)) == -r);
  }
}

TEST_CASE("point_winding") {
  const auto square = poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(point_winding(square, {Rational(1), Rational(1)}) == 1);
  CHECK(point_winding(square, {Rational(100), Rational(1)}) == 0);
  // Ray through a vertex is handled by the symbolic tilt.
  CHECK(point_winding(square, {Rational(-1), Rational(2)}) == 0);
  CHECK(point_winding(square, {Rational(-1), Rational(0)}) == 0);
  CHECK(point_winding(reversed(square), {Rational(-1), Rational(2)}) == 0);
  CHECK_THROWS_AS(point_winding(square, {Rational(2), Rational(1)}), Error);
  const auto bowtie = poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  CHECK(point_winding(bowtie, {Rational(3, 2), Rational(1)}) +
            point_winding(bowtie, {Rational(1, 2), Rational(1)}) ==
        0);
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "-3", "7/2", "-1/3"}) CHECK(format_rational(parse_rational(s)) == s);
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5e2") == Rational(-150));
  CHECK(parse_rational("2.5E-1") == Rational(1, 4));
}
