#include <random>

#include "doctest.h"
#include "jplus/constructions.hpp"

using namespace jplus;

namespace {

std::vector<long> sorted_windings(const CurveDiagram& d) {
  std::vector<long> w;
  for (int f = 0; f < d.face_count(); ++f) w.push_back(d.winding(f));
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<long> sorted_indices(const CurveDiagram& d) {
  std::vector<long> w;
  for (int c = 0; c < d.crossing_count(); ++c) w.push_back(d.index(c));
  std::sort(w.begin(), w.end());
  return w;
}

int outer_arc(const CurveDiagram& d) {
  for (int a = 0; a < d.arc_count(); ++a) {
    if (d.left_face(a) == d.outer_face() || d.right_face(a) == d.outer_face()) return a;
  }
  return -1;
}

int face_with_winding(const CurveDiagram& d, long w) {
  for (int f = 0; f < d.face_count(); ++f) {
    if (d.winding(f) == w && f != d.outer_face()) return f;
  }
  return -1;
}

void check_prediction(const PredictedResult& r) {
  CHECK(jplus_viro(r.diagram) == r.predicted_jplus);
  if (r.predicted_rot) CHECK(rotation_from_windings(r.diagram) == *r.predicted_rot);
  if (r.curve) CHECK(Integer(turning_number(*r.curve)) == rotation_from_windings(r.diagram));
  CHECK(verify_sum_identity(identity_inputs(r), false).holds);
}

}  // namespace

TEST_CASE("standard curves") {
  for (int j = -10; j <= 10; ++j) {
    const InvariantReport r = report(standard_curve(j));
    CHECK(r.rot_combinatorial == j);
    CHECK(r.rot_geometric == j);
    CHECK(r.jplus == (j == 0 ? 0 : -2 * (std::abs(j) - 1)));
    CHECK(r.n == (j == 0 ? 1 : std::abs(j) - 1));
  }
}

TEST_CASE("single and double loop curve") {
  const CurveDiagram d = trace_diagram(validate_curve(single_and_double_loop_curve()));
  CHECK(d.crossing_count() == 3);
  CHECK(sorted_windings(d) == std::vector<long>{0, 1, 2, 2, 3});
  CHECK(sorted_indices(d) == std::vector<long>{1, 1, 2});
  CHECK(jplus_viro(d) == -8);
}

TEST_CASE("inner loop curves reach the lower bound") {
  for (int n = 0; n <= 20; ++n) {
    const InvariantReport r = report(inner_loop_curve(n + 1));
    CHECK(r.jplus == -n * n - n);
    CHECK(r.arnold_slack == 0);
    CHECK(r.rot_combinatorial == n + 1);
  }
  const PolylineCurve a4 = inner_loop_curve(4);
  const GeometricDiagram g = trace_geometric(validate_curve(a4));
  long deepest = 0;
  for (const auto& p : g.face_samples) deepest = std::max(deepest, point_winding(a4, p));
  CHECK(deepest == 4);  // three nested loops inside the circle
}

TEST_CASE("circle into circle gives K2") {
  SumSpec s{standard_curve(1), 0, 0, standard_curve(1), 0};
  const CurveDiagram k1 = trace_diagram(validate_curve(s.base));
  s.face = face_with_winding(k1, 1);
  const PredictedResult r = interior_sum(s);
  check_prediction(r);
  CHECK(r.predicted_jplus == -2);
  CHECK(r.diagram.canonical_form() == trace_diagram(validate_curve(standard_curve(2))).canonical_form());
}

TEST_CASE("connected sums") {
  const PolylineCurve k3 = standard_curve(3);
  const PolylineCurve k0 = standard_curve(0);
  const CurveDiagram d3 = trace_diagram(validate_curve(k3));
  const CurveDiagram d0 = trace_diagram(validate_curve(k0));
  for (auto mode : {OrientationMode::Flip, OrientationMode::Bridge}) {
    for (int a = 0; a < d0.arc_count(); ++a) {
      const PredictedResult r = connected_sum(k3, outer_arc(d3), k0, a, mode);
      check_prediction(r);
      CHECK(r.predicted_jplus == -4);
    }
  }
  const PolylineCurve circle = standard_curve(1);
  const PolylineCurve cw = standard_curve(-1);
  CHECK_THROWS_AS(connected_sum(circle, 0, cw, 0, OrientationMode::Strict), Error);
  const PredictedResult flipped = connected_sum(circle, 0, cw, 0, OrientationMode::Flip);
  check_prediction(flipped);
  CHECK(flipped.inserted_flipped);
  CHECK(*flipped.predicted_rot == 1);
  const PredictedResult bridged = connected_sum(circle, 0, cw, 0, OrientationMode::Bridge);
  check_prediction(bridged);
  CHECK(bridged.diagram.crossing_count() == 1);
  CHECK(*bridged.predicted_rot == 0);
}

TEST_CASE("interior and tunnel sums over every face and arc") {
  std::vector<PolylineCurve> pool{standard_curve(0), standard_curve(1), standard_curve(2),
                                  standard_curve(-3), inner_loop_curve(3)};
  for (const auto& base : pool) {
    const CurveDiagram d = trace_diagram(validate_curve(base));
    for (int f = 0; f < d.face_count(); ++f) {
      if (f == d.outer_face()) continue;
      for (int dart : d.face(f).boundary) {
        for (const auto& ins : {standard_curve(0), standard_curve(2)}) {
          const CurveDiagram di = trace_diagram(validate_curve(ins));
          SumSpec s{base, f, dart_arc(dart), ins, outer_arc(di)};
          check_prediction(interior_sum(s));
          check_prediction(tunnel_interior_sum(s));
          // Combinatorial version agrees with the geometric one.
          DiagramSumSpec ds{d, f, dart_arc(dart), di, outer_arc(di)};
          CHECK(interior_sum(ds).diagram.canonical_form() == interior_sum(s).diagram.canonical_form());
          CHECK(tunnel_interior_sum(ds).diagram.canonical_form() ==
                tunnel_interior_sum(s).diagram.canonical_form());
        }
      }
    }
  }
}

TEST_CASE("interior loops") {
  const PolylineCurve circle = standard_curve(1);
  const CurveDiagram d = trace_diagram(validate_curve(circle));
  const int inner = face_with_winding(d, 1);
  const PredictedResult one = add_interior_loop(circle, inner, 0, 1);
  check_prediction(one);
  CHECK(one.predicted_jplus == -2);
  const PredictedResult three = add_interior_loop(circle, inner, 0, 3);
  check_prediction(three);
  CHECK(three.predicted_jplus == -12);
  const PredictedResult outside = add_interior_loop(circle, d.outer_face(), 0, 2);
  check_prediction(outside);
  CHECK(outside.unbounded_face);
}

TEST_CASE("interior sum errors") {
  const PolylineCurve circle = standard_curve(1);
  const CurveDiagram d = trace_diagram(validate_curve(circle));
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([&] { interior_sum(SumSpec{circle, d.outer_face(), 0, circle, 0}); }) ==
        ErrorCode::FaceUnbounded);
  const PolylineCurve k2 = standard_curve(2);
  const CurveDiagram d2 = trace_diagram(validate_curve(k2));
  const int loop_face = face_with_winding(d2, 2);
  int far_arc = -1;
  for (int a = 0; a < d2.arc_count(); ++a) {
    if (d2.left_face(a) != loop_face && d2.right_face(a) != loop_face) far_arc = a;
  }
  CHECK(code_of([&] { interior_sum(SumSpec{k2, loop_face, far_arc, circle, 0}); }) ==
        ErrorCode::ArcNotOnFace);
  int inner_arc = -1;
  for (int a = 0; a < d2.arc_count(); ++a) {
    if (d2.left_face(a) != d2.outer_face() && d2.right_face(a) != d2.outer_face()) inner_arc = a;
  }
  CHECK(code_of([&] { interior_sum(SumSpec{circle, face_with_winding(d, 1), 0, k2, inner_arc}); }) ==
        ErrorCode::ArcNotOuter);
}
