#pragma once

#include <optional>
#include <string>

#include "jplus/diagram.hpp"
#include "jplus/invariants.hpp"

namespace jplus {

// Figure eight for j = 0; otherwise a circle with |j| - 1 single interior
// loops side by side, traversed so that the rotation number is j.
PolylineCurve standard_curve(int j);
// Circle with one (|j| - 1)-fold nested interior loop; equals standard_curve(j)
// for |j| <= 2.
PolylineCurve inner_loop_curve(int j);
// Circle carrying one single and one double interior loop.
PolylineCurve single_and_double_loop_curve();

// Inserts an interior loop nested `depth` times into the segment p -> q, on its
// left, occupying the middle quarter of the segment.
std::vector<Point> kink_points(const Point& p, const Point& q, int depth);

// Which arc of which face receives the inserted curve.
struct SumSpec {
  PolylineCurve base;
  int face = 0;           // face id of the traced base diagram
  int arc = 0;            // arc of the base diagram on that face
  PolylineCurve inserted;
  int inserted_arc = 0;   // arc of the inserted curve on its unbounded face
};

// The same, for curves that exist only as diagrams.
struct DiagramSumSpec {
  CurveDiagram base;
  int face = 0;
  int arc = 0;
  CurveDiagram inserted;
  int inserted_arc = 0;
};

struct PredictedResult {
  SumKind kind = SumKind::Interior;
  std::optional<PolylineCurve> curve;  // absent for diagram-only sums
  CurveDiagram diagram;                // labelled result
  Integer predicted_jplus;
  std::optional<Integer> predicted_rot;  // absent where no closed form exists
  std::string formula_tag;
  bool inserted_flipped = false;
  bool unbounded_face = false;           // loop added to the unbounded face
  long omega_c = 0;
  long omega_adj = 0;
  int loop_depth = 0;
  CurveDiagram base;
  std::optional<CurveDiagram> inserted;  // oriented the way the identity expects
};

enum class OrientationMode { Strict, Flip, Bridge };

PredictedResult connected_sum(const PolylineCurve& k1, int arc1, const PolylineCurve& k2, int arc2,
                              OrientationMode mode = OrientationMode::Strict);
PredictedResult interior_sum(const SumSpec& spec);
PredictedResult tunnel_interior_sum(const SumSpec& spec);
// `depth` counts the nested loops: 1 is a single interior loop.
PredictedResult add_interior_loop(const PolylineCurve& k, int face, int arc, int depth);

PredictedResult connected_sum(const CurveDiagram& k1, int arc1, const CurveDiagram& k2, int arc2,
                              OrientationMode mode = OrientationMode::Strict);
PredictedResult interior_sum(const DiagramSumSpec& spec);
PredictedResult tunnel_interior_sum(const DiagramSumSpec& spec);
PredictedResult add_interior_loop(const CurveDiagram& k, int face, int arc, int depth);

// Inputs for verify_sum_identity, rebuilt from a construction's metadata.
SumIdentityInputs identity_inputs(const PredictedResult& r);

}  // namespace jplus
