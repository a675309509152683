#include "jplus/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace jplus {

namespace {

int tail_end(int arc) { return 2 * arc; }
int head_end(int arc) { return 2 * arc + 1; }
bool end_is_head(int end) { return (end & 1) == 1; }
int end_arc(int end) { return end >> 1; }

// Dart that arrives at the crossing through `end`.
int arriving_dart(int end) { return make_dart(end_arc(end), end_is_head(end)); }
// Dart that leaves the crossing through `end`.
int leaving_dart(int end) { return make_dart(end_arc(end), !end_is_head(end)); }

}  // namespace

CurveDiagram CurveDiagram::from_sequence(const std::vector<int>& sequence,
                                         const std::vector<bool>& positive_by_label,
                                         int outer_dart) {
  std::map<int, std::vector<int>> occurrences;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < 0) throw Error(ErrorCode::BadMultiplicity, "negative crossing label");
    occurrences[sequence[i]].push_back(static_cast<int>(i));
  }
  for (const auto& [label, where] : occurrences) {
    if (where.size() != 2) {
      throw Error(ErrorCode::BadMultiplicity, "crossing label " + std::to_string(label) +
                                                  " appears " + std::to_string(where.size()) +
                                                  " time(s), expected 2");
    }
    if (static_cast<std::size_t>(label) >= positive_by_label.size()) {
      throw Error(ErrorCode::BadMultiplicity, "no sign for crossing label " + std::to_string(label));
    }
  }

  CurveDiagram d;
  std::map<int, int> renumber;
  for (int label : sequence) {
    if (!renumber.contains(label)) {
      const int id = static_cast<int>(renumber.size());
      renumber[label] = id;
    }
  }
  d.sequence_.reserve(sequence.size());
  for (int label : sequence) d.sequence_.push_back(renumber[label]);

  const int n = static_cast<int>(renumber.size());
  const int arcs = n == 0 ? 1 : 2 * n;
  if (outer_dart < 0 || outer_dart >= 2 * arcs) {
    throw Error(ErrorCode::UnrealizableCode, "outer marker refers to a missing arc");
  }
  d.outer_dart_ = outer_dart;

  d.crossings_.resize(static_cast<std::size_t>(n));
  for (const auto& [label, where] : occurrences) {
    Crossing& c = d.crossings_[static_cast<std::size_t>(renumber[label])];
    c.id = renumber[label];
    c.visits = {where[0], where[1]};
    c.positive = positive_by_label[static_cast<std::size_t>(label)];
    const int out_first = tail_end(where[0]);
    const int in_first = head_end((where[0] + arcs - 1) % arcs);
    const int out_second = tail_end(where[1]);
    const int in_second = head_end((where[1] + arcs - 1) % arcs);
    if (c.positive) {
      c.ends = {out_first, out_second, in_first, in_second};
    } else {
      c.ends = {out_first, in_second, in_first, out_second};
    }
  }
  d.trace_faces();
  return d;
}

void CurveDiagram::trace_faces() {
  const int n = crossing_count();
  const int darts = dart_count();
  end_slot_.assign(static_cast<std::size_t>(darts), -1);
  for (const auto& c : crossings_) {
    for (int k = 0; k < 4; ++k) end_slot_[static_cast<std::size_t>(c.ends[k])] = 4 * c.id + k;
  }
  next_in_face_.assign(static_cast<std::size_t>(darts), -1);
  for (int dart = 0; dart < darts; ++dart) {
    if (n == 0) {
      next_in_face_[static_cast<std::size_t>(dart)] = dart;
      continue;
    }
    const int arc = dart_arc(dart);
    const int arrival = dart_forward(dart) ? head_end(arc) : tail_end(arc);
    const int slot = end_slot_[static_cast<std::size_t>(arrival)];
    const Crossing& c = crossings_[static_cast<std::size_t>(slot / 4)];
    const int turn = c.ends[static_cast<std::size_t>((slot % 4 + 3) % 4)];
    next_in_face_[static_cast<std::size_t>(dart)] = leaving_dart(turn);
  }

  faces_.clear();
  dart_face_.assign(static_cast<std::size_t>(darts), -1);
  for (int start = 0; start < darts; ++start) {
    if (dart_face_[static_cast<std::size_t>(start)] >= 0) continue;
    Face f;
    const int id = static_cast<int>(faces_.size());
    int dart = start;
    do {
      if (dart_face_[static_cast<std::size_t>(dart)] >= 0) {
        throw Error(ErrorCode::UnrealizableCode, "face tracing revisited a dart");
      }
      dart_face_[static_cast<std::size_t>(dart)] = id;
      f.boundary.push_back(dart);
      dart = next_in_face_[static_cast<std::size_t>(dart)];
    } while (dart != start);
    faces_.push_back(std::move(f));
  }
  const int expected = n + 2;
  if (face_count() != expected) {
    throw Error(ErrorCode::UnrealizableCode,
                "Euler check failed: " + std::to_string(n) + " crossings, " +
                    std::to_string(2 * n) + " arcs, " + std::to_string(face_count()) +
                    " faces (expected " + std::to_string(expected) + ")");
  }
  faces_[static_cast<std::size_t>(outer_face())].is_outer = true;

  for (auto& c : crossings_) {
    for (int k = 0; k < 4; ++k) {
      c.corner_faces[static_cast<std::size_t>(k)] =
          face_of_dart(arriving_dart(c.ends[static_cast<std::size_t>((k + 1) % 4)]));
    }
  }
}

int CurveDiagram::next_at_crossing(int end) const {
  const int slot = end_slot_.at(static_cast<std::size_t>(end));
  if (slot < 0) return end;
  return crossings_[static_cast<std::size_t>(slot / 4)].ends[static_cast<std::size_t>((slot % 4 + 1) % 4)];
}

int CurveDiagram::tail_crossing(int arc) const {
  if (crossings_.empty()) return -1;
  return sequence_.at(static_cast<std::size_t>(arc));
}

int CurveDiagram::head_crossing(int arc) const {
  if (crossings_.empty()) return -1;
  return sequence_.at(static_cast<std::size_t>((arc + 1) % arc_count()));
}

bool CurveDiagram::visit_is_lefty(int position) const {
  const Crossing& c = crossing(sequence_.at(static_cast<std::size_t>(position)));
  return (position == c.visits[1]) == c.positive;
}

long CurveDiagram::winding(int f) const {
  const auto& w = face(f).winding;
  if (!w) throw Error(ErrorCode::InconsistentWinding, "diagram has no winding labels");
  return *w;
}

long CurveDiagram::index(int c) const {
  const auto& i = crossing(c).index;
  if (!i) throw Error(ErrorCode::CornerPatternViolation, "diagram has no crossing indices");
  return *i;
}

std::vector<bool> CurveDiagram::signs() const {
  std::vector<bool> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_) out.push_back(c.positive);
  return out;
}

std::string CurveDiagram::canonical_form() const {
  const int n = crossing_count();
  if (n == 0) return "O|" + std::to_string(dart_forward(outer_dart_) ? 0 : 1);
  const int arcs = arc_count();
  const auto& outer_boundary = face(outer_face()).boundary;
  std::string best;
  for (int r = 0; r < arcs; ++r) {
    std::ostringstream key;
    std::map<int, int> relabel;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < arcs; ++p) {
      const int old_pos = (p + r) % arcs;
      const int c = sequence_[static_cast<std::size_t>(old_pos)];
      if (!relabel.contains(c)) relabel.emplace(c, static_cast<int>(relabel.size()));
      ++seen[static_cast<std::size_t>(c)];
      // Sign relative to the rotated base point: set on the second visit.
      if (seen[static_cast<std::size_t>(c)] == 2) {
        key << relabel[c] << (visit_is_lefty(old_pos) ? '+' : '-') << ' ';
      } else {
        key << relabel[c] << ' ';
      }
    }
    int min_dart = 2 * arcs;
    for (int dart : outer_boundary) {
      const int arc = (dart_arc(dart) - r + arcs) % arcs;
      min_dart = std::min(min_dart, make_dart(arc, dart_forward(dart)));
    }
    key << '|' << min_dart;
    std::string s = key.str();
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

CurveDiagram label_windings(const CurveDiagram& input) {
  CurveDiagram d = input;
  for (auto& f : d.faces_) f.winding.reset();
  const int outer = d.outer_face();
  d.faces_[static_cast<std::size_t>(outer)].winding = 0;
  std::deque<int> queue{outer};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const long w = *d.faces_[static_cast<std::size_t>(f)].winding;
    for (int dart : d.faces_[static_cast<std::size_t>(f)].boundary) {
      const int other = d.face_of_dart(dart_twin(dart));
      // f is left of the arc when the dart runs forward.
      const long expected = dart_forward(dart) ? w - 1 : w + 1;
      auto& slot = d.faces_[static_cast<std::size_t>(other)].winding;
      if (!slot) {
        slot = expected;
        queue.push_back(other);
      } else if (*slot != expected) {
        throw Error(ErrorCode::InconsistentWinding,
                    "faces " + std::to_string(f) + " and " + std::to_string(other) +
                        " disagree across arc " + std::to_string(dart_arc(dart)));
      }
    }
  }
  for (std::size_t f = 0; f < d.faces_.size(); ++f) {
    if (!d.faces_[f].winding) {
      throw Error(ErrorCode::InconsistentWinding, "face " + std::to_string(f) + " unreachable");
    }
  }
  return d;
}

CurveDiagram crossing_indices(const CurveDiagram& input) {
  if (!input.has_windings()) {
    throw Error(ErrorCode::CornerPatternViolation, "windings must be labeled first");
  }
  CurveDiagram d = input;
  for (auto& c : d.crossings_) {
    std::array<long, 4> w{};
    long sum = 0;
    for (int k = 0; k < 4; ++k) {
      w[static_cast<std::size_t>(k)] = d.winding(c.corner_faces[static_cast<std::size_t>(k)]);
      sum += w[static_cast<std::size_t>(k)];
    }
    std::array<long, 4> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    const long a = sorted[0];
    if (sorted[1] != a + 1 || sorted[2] != a + 1 || sorted[3] != a + 2) {
      throw Error(ErrorCode::CornerPatternViolation,
                  "crossing " + std::to_string(c.id) + " has corner windings " +
                      std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                      std::to_string(w[2]) + "," + std::to_string(w[3]));
    }
    // The extremes sit in opposite corners.
    const auto lo = std::find(w.begin(), w.end(), a) - w.begin();
    const auto hi = std::find(w.begin(), w.end(), a + 2) - w.begin();
    if ((lo + 2) % 4 != hi) {
      throw Error(ErrorCode::CornerPatternViolation,
                  "crossing " + std::to_string(c.id) + " corners are not opposite");
    }
    c.index = sum / 4;
    if (*c.index != a + 1) {
      throw Error(ErrorCode::IdentityViolation, "index differs from min corner + 1");
    }
  }
  return d;
}

CurveDiagram build_labeled(const std::vector<int>& sequence, const std::vector<bool>& positive,
                           int outer_dart) {
  return crossing_indices(label_windings(CurveDiagram::from_sequence(sequence, positive, outer_dart)));
}

CurveDiagram reverse_orientation(const CurveDiagram& d) {
  const int arcs = d.arc_count();
  std::vector<int> sequence(d.sequence().rbegin(), d.sequence().rend());
  std::vector<bool> positive;
  for (const auto& c : d.crossings()) positive.push_back(!c.positive);
  const int old_arc = dart_arc(d.outer_dart());
  const int new_arc = d.crossing_count() == 0 ? 0 : ((2 * arcs - 2 - old_arc) % arcs);
  const int outer = make_dart(new_arc, !dart_forward(d.outer_dart()));
  return build_labeled(sequence, positive, outer);
}

std::string GaussCode::to_string() const {
  std::ostringstream out;
  for (const auto& t : tokens) out << t.label << (t.positive ? '+' : '-') << ' ';
  out << '@' << outer_arc << (outer_on_left ? "L" : "");
  return out.str();
}

GaussCode GaussCode::parse(const std::string& text) {
  GaussCode code;
  std::istringstream in(text);
  std::string word;
  bool marker_seen = false;
  while (in >> word) {
    if (word[0] == '@') {
      if (marker_seen) throw Error(ErrorCode::ParseError, "more than one outer-face marker");
      marker_seen = true;
      std::string body = word.substr(1);
      if (!body.empty() && (body.back() == 'L' || body.back() == 'R')) {
        code.outer_on_left = body.back() == 'L';
        body.pop_back();
      }
      try {
        std::size_t used = 0;
        code.outer_arc = std::stoi(body, &used);
        if (used != body.size() || code.outer_arc < 0) throw std::invalid_argument(body);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad outer-face marker '" + word + "'");
      }
      continue;
    }
    GaussToken t;
    std::string digits = word;
    // Accept ASCII signs and the superscript forms U+207A / U+207B.
    if (digits.size() >= 3 && digits.compare(digits.size() - 3, 3, "⁺") == 0) {
      t.positive = true;
      digits.resize(digits.size() - 3);
    } else if (digits.size() >= 3 && digits.compare(digits.size() - 3, 3, "⁻") == 0) {
      t.positive = false;
      digits.resize(digits.size() - 3);
    } else if (!digits.empty() && (digits.back() == '+' || digits.back() == '-')) {
      t.positive = digits.back() == '+';
      digits.pop_back();
    } else {
      throw Error(ErrorCode::ParseError, "token '" + word + "' lacks a sign");
    }
    try {
      std::size_t used = 0;
      t.label = std::stoi(digits, &used);
      if (used != digits.size() || t.label <= 0) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad crossing label in '" + word + "'");
    }
    code.tokens.push_back(t);
  }
  if (!marker_seen) throw Error(ErrorCode::ParseError, "missing outer-face marker '@k'");
  return code;
}

GaussCode to_gauss_code(const CurveDiagram& d) {
  GaussCode code;
  for (int c : d.sequence()) code.tokens.push_back({c + 1, d.crossing(c).positive});
  code.outer_arc = dart_arc(d.outer_dart());
  code.outer_on_left = dart_forward(d.outer_dart());
  return code;
}

CurveDiagram from_gauss_code(const GaussCode& code) {
  std::map<int, int> dense;
  std::map<int, int> count;
  for (const auto& t : code.tokens) {
    dense.emplace(t.label, static_cast<int>(dense.size()));
    ++count[t.label];
  }
  for (const auto& [label, k] : count) {
    if (k != 2) {
      throw Error(ErrorCode::BadMultiplicity, "label " + std::to_string(label) + " appears " +
                                                  std::to_string(k) + " time(s)");
    }
  }
  std::vector<int> sequence;
  std::vector<int> sign_state(dense.size(), -1);
  for (const auto& t : code.tokens) {
    const int id = dense[t.label];
    sequence.push_back(id);
    int& s = sign_state[static_cast<std::size_t>(id)];
    if (s >= 0 && s != static_cast<int>(t.positive)) {
      throw Error(ErrorCode::UnrealizableCode,
                  "label " + std::to_string(t.label) + " carries conflicting signs");
    }
    s = static_cast<int>(t.positive);
  }
  std::vector<bool> positive;
  for (int s : sign_state) positive.push_back(s == 1);
  const int arcs = sequence.empty() ? 1 : static_cast<int>(sequence.size());
  if (code.outer_arc >= arcs) {
    throw Error(ErrorCode::UnrealizableCode, "outer marker @" + std::to_string(code.outer_arc) +
                                                 " exceeds the arc count");
  }
  return build_labeled(sequence, positive, make_dart(code.outer_arc, code.outer_on_left));
}

namespace {

Point point_at(const PolylineCurve& curve, const CurvePosition& pos) {
  return curve.vertex(pos.edge) + pos.t * curve.edge_vector(pos.edge);
}

ArcPath walk_arc(const PolylineCurve& curve, const CurvePosition& from, const CurvePosition& to) {
  ArcPath path;
  path.points.push_back(point_at(curve, from));
  std::size_t edge = from.edge;
  Rational t = from.t;
  const std::size_t n = curve.size();
  while (true) {
    if (edge == to.edge && to.t > t) {
      path.points.push_back(point_at(curve, to));
      path.edges.push_back(edge);
      return path;
    }
    path.points.push_back(curve.vertex(edge + 1));
    path.edges.push_back(edge);
    edge = (edge + 1) % n;
    t = 0;
    if (edge == to.edge && sgn(to.t) == 0) return path;
  }
}

}  // namespace

Point face_sample_point(const PolylineCurve& curve, const ArcPath& arc, bool left_side) {
  const Point& a = arc.points[0];
  const Point& b = arc.points[1];
  const Point m = Rational(1, 2) * (a + b);
  const Point normal = left_side ? perp(b - a) : Point{-perp(b - a).x, -perp(b - a).y};
  Rational delta(1, 4);
  for (int attempt = 0; attempt < 4096; ++attempt, delta /= 2) {
    const Point q = m + delta * normal;
    bool clear = true;
    for (std::size_t e = 0; e < curve.size() && clear; ++e) {
      const Point& u = curve.vertex(e);
      const Point& v = curve.vertex(e + 1);
      if (point_on_segment(m, u, v)) continue;
      if (segments_touch(m, q, u, v)) clear = false;
    }
    if (clear) return q;
  }
  throw Error(ErrorCode::IdentityViolation, "could not find an interior face point");
}

GeometricDiagram trace_geometric(const ValidatedCurve& vc) {
  const PolylineCurve& curve = vc.curve;
  const auto& dps = vc.double_points;
  const int n = static_cast<int>(dps.size());

  struct Visit {
    CurvePosition pos;
    int crossing;
  };
  std::vector<Visit> visits;
  for (int c = 0; c < n; ++c) {
    visits.push_back({dps[static_cast<std::size_t>(c)].first_visit, c});
    visits.push_back({dps[static_cast<std::size_t>(c)].second_visit, c});
  }
  std::sort(visits.begin(), visits.end(),
            [](const Visit& l, const Visit& r) { return l.pos < r.pos; });

  std::vector<int> sequence;
  for (const auto& v : visits) sequence.push_back(v.crossing);
  std::vector<bool> positive;
  for (const auto& dp : dps) {
    const Point d1 = curve.edge_vector(dp.first_visit.edge);
    const Point d2 = curve.edge_vector(dp.second_visit.edge);
    positive.push_back(sgn(cross(d1, d2)) > 0);
  }

  // The lexicographically smallest vertex lies on the unbounded face; at a
  // left turn that face is on the right of the curve.
  std::size_t lowest = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve.vertices[i] < curve.vertices[lowest]) lowest = i;
  }
  const int turn = sgn(cross(curve.edge_vector(lowest + curve.size() - 1), curve.edge_vector(lowest)));
  const CurvePosition vertex_pos{lowest, Rational(0)};
  int before = 0;
  for (const auto& v : visits) before += v.pos < vertex_pos ? 1 : 0;
  const int arcs = n == 0 ? 1 : 2 * n;
  const int outer_arc = n == 0 ? 0 : (before + arcs - 1) % arcs;
  const int outer_dart = make_dart(outer_arc, turn < 0);

  GeometricDiagram g;
  g.source = vc;
  g.diagram = build_labeled(sequence, positive, outer_dart);
  // Records are sorted by first visit, which is also the order of first
  // appearance, so crossing ids coincide with record indices.
  for (const auto& dp : dps) g.crossing_locations.push_back(dp.location);
  if (n == 0) {
    g.arcs.push_back(walk_arc(curve, {0, Rational(0)}, {0, Rational(0)}));
  } else {
    for (int a = 0; a < arcs; ++a) {
      g.arcs.push_back(walk_arc(curve, visits[static_cast<std::size_t>(a)].pos,
                                visits[static_cast<std::size_t>((a + 1) % arcs)].pos));
    }
  }
  g.face_samples.resize(static_cast<std::size_t>(g.diagram.face_count()));
  for (int f = 0; f < g.diagram.face_count(); ++f) {
    const int dart = g.diagram.face(f).boundary.front();
    g.face_samples[static_cast<std::size_t>(f)] =
        face_sample_point(curve, g.arcs[static_cast<std::size_t>(dart_arc(dart))], dart_forward(dart));
  }
  return g;
}

CurveDiagram trace_diagram(const ValidatedCurve& vc) { return trace_geometric(vc).diagram; }

}  // namespace jplus
