#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jplus/geometry.hpp"

namespace jplus {

// Darts are the two sides of an arc. Dart 2a runs along arc a in the curve
// direction and has the arc's left face on its left; dart 2a+1 runs against it
// and has the arc's right face on its left.
inline int make_dart(int arc, bool forward) { return 2 * arc + (forward ? 0 : 1); }
inline int dart_arc(int dart) { return dart >> 1; }
inline bool dart_forward(int dart) { return (dart & 1) == 0; }
inline int dart_twin(int dart) { return dart ^ 1; }

struct Face {
  std::vector<int> boundary;  // darts in face order, face on their left
  std::optional<long> winding;
  bool is_outer = false;
};

struct Crossing {
  int id = 0;
  std::array<int, 2> visits{};   // positions in the traversal sequence, first < second
  bool positive = true;          // second visit passes from right to left of the first
  std::array<int, 4> ends{};     // arc ends in counter-clockwise order (2*arc + is_head)
  std::array<int, 4> corner_faces{};  // corner k lies between ends[k] and ends[k+1]
  std::optional<long> index;
};

// Oriented 4-valent plane map of a single generic closed curve. The core data
// is the traversal sequence of crossing labels, one sign per crossing and the
// dart marking the unbounded face; faces and links are derived from it.
class CurveDiagram {
 public:
  // Labels may be arbitrary non-negative ints and are renumbered in order of
  // first appearance. Throws BadMultiplicity or UnrealizableCode.
  static CurveDiagram from_sequence(const std::vector<int>& sequence,
                                    const std::vector<bool>& positive_by_label,
                                    int outer_dart);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return crossings_.empty() ? 1 : 2 * crossing_count(); }
  int dart_count() const noexcept { return 2 * arc_count(); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  const std::vector<int>& sequence() const noexcept { return sequence_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }

  int outer_dart() const noexcept { return outer_dart_; }
  int outer_face() const { return face_of_dart(outer_dart_); }
  int face_of_dart(int dart) const { return dart_face_.at(static_cast<std::size_t>(dart)); }
  int left_face(int arc) const { return face_of_dart(make_dart(arc, true)); }
  int right_face(int arc) const { return face_of_dart(make_dart(arc, false)); }
  int next_in_face(int dart) const { return next_in_face_.at(static_cast<std::size_t>(dart)); }
  // Next arc end counter-clockwise around the crossing at which `end` sits.
  int next_at_crossing(int end) const;
  // Crossing at the tail / head of an arc (-1 for the crossing-free loop).
  int tail_crossing(int arc) const;
  int head_crossing(int arc) const;
  // True when the visit at `position` passes from right to left of the other strand.
  bool visit_is_lefty(int position) const;

  bool has_windings() const noexcept { return !faces_.empty() && faces_[0].winding.has_value(); }
  bool has_indices() const noexcept {
    return crossings_.empty() || crossings_[0].index.has_value();
  }
  long winding(int f) const;
  long index(int c) const;

  // Isomorphism class representative: invariant under moving the base point
  // and renaming crossings.
  std::string canonical_form() const;

  friend bool operator==(const CurveDiagram& a, const CurveDiagram& b) {
    return a.sequence_ == b.sequence_ && a.outer_dart_ == b.outer_dart_ &&
           a.signs() == b.signs();
  }
  std::vector<bool> signs() const;

 private:
  friend CurveDiagram label_windings(const CurveDiagram& d);
  friend CurveDiagram crossing_indices(const CurveDiagram& d);

  void trace_faces();

  std::vector<int> sequence_;
  std::vector<Crossing> crossings_;
  std::vector<int> end_slot_;  // end -> 4 * crossing + slot
  std::vector<int> next_in_face_;
  std::vector<int> dart_face_;
  std::vector<Face> faces_;
  int outer_dart_ = 1;
};

// Winding numbers by propagation from the outer face: left of every arc is one
// more than right. Throws InconsistentWinding.
CurveDiagram label_windings(const CurveDiagram& d);
// Index of each crossing as the mean of its corner windings; checks the
// {a, a+1, a+1, a+2} corner pattern. Throws CornerPatternViolation.
CurveDiagram crossing_indices(const CurveDiagram& d);
// Topology, windings and indices in one go.
CurveDiagram build_labeled(const std::vector<int>& sequence, const std::vector<bool>& positive,
                           int outer_dart);

CurveDiagram reverse_orientation(const CurveDiagram& d);

struct GaussToken {
  int label = 0;
  bool positive = true;
  friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

struct GaussCode {
  std::vector<GaussToken> tokens;
  int outer_arc = 0;
  bool outer_on_left = false;  // default marker: unbounded face on the right of the arc

  std::string to_string() const;
  static GaussCode parse(const std::string& text);
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

GaussCode to_gauss_code(const CurveDiagram& d);
CurveDiagram from_gauss_code(const GaussCode& code);

// A diagram traced from geometry, with the geometric realisation of each arc,
// crossing and face.
struct ArcPath {
  std::vector<Point> points;        // consecutive points along the curve
  std::vector<std::size_t> edges;   // polyline edge carrying points[i] -> points[i+1]
};

struct GeometricDiagram {
  ValidatedCurve source;
  CurveDiagram diagram;
  std::vector<ArcPath> arcs;
  std::vector<Point> crossing_locations;
  std::vector<Point> face_samples;  // one point strictly inside each face
};

GeometricDiagram trace_geometric(const ValidatedCurve& vc);
CurveDiagram trace_diagram(const ValidatedCurve& vc);

// A point strictly inside the face on the left of `dart`.
Point face_sample_point(const PolylineCurve& curve, const ArcPath& arc, bool left_side);

}  // namespace jplus
