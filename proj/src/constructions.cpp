#include "jplus/constructions.hpp"

#include <algorithm>

namespace jplus {

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

Point cmul(const Point& a, const Point& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

Point cdiv(const Point& a, const Point& b) {
  const Rational d = dot(b, b);
  return {(a.x * b.x + a.y * b.y) / d, (a.y * b.x - a.x * b.y) / d};
}

Rational linf(const Point& p) { return std::max(abs(p.x), abs(p.y)); }

PolylineCurve square_with_kinks(long side, const std::vector<int>& depths) {
  PolylineCurve c;
  c.vertices.push_back(pt(0, 0));
  for (std::size_t k = 0; k < depths.size(); ++k) {
    const long x = 8 * static_cast<long>(k);
    for (auto& p : kink_points(pt(x, 0), pt(x + 8, 0), depths[k])) c.vertices.push_back(p);
  }
  c.vertices.push_back(pt(side, 0));
  c.vertices.push_back(pt(side, side));
  c.vertices.push_back(pt(0, side));
  return c;
}

// Arc of the reversed diagram that carries the same points as `arc`.
int reversed_arc(const CurveDiagram& d, int arc) {
  const int arcs = d.arc_count();
  if (d.crossing_count() == 0) return 0;
  return ((2 * arcs - 2 - arc) % arcs + arcs) % arcs;
}

struct Visit {
  int label;
  bool lefty;
};

struct DiagramSplice {
  CurveDiagram diagram;
  std::vector<int> inserted_positions;  // where the inserted curve's visits landed
};

// Cuts arc `arc` of `base` and threads the inserted curve through the gap,
// entering and leaving at arc `ins_arc`. A crossed junction adds one crossing
// whose entry strand is lefty exactly when the target face is on the left of
// the base arc.
DiagramSplice splice_diagrams(const CurveDiagram& base, int arc, bool face_on_left,
                              const CurveDiagram& ins, int ins_arc, bool crossed) {
  const int n = base.crossing_count();
  const int n2 = ins.crossing_count();
  const int cross_label = n + n2;

  std::vector<Visit> block;
  if (crossed) block.push_back({cross_label, face_on_left});
  for (int k = 0; k < 2 * n2; ++k) {
    const int p = (ins_arc + 1 + k) % (2 * n2);
    block.push_back({ins.sequence()[static_cast<std::size_t>(p)] + n, ins.visit_is_lefty(p)});
  }
  if (crossed) block.push_back({cross_label, !face_on_left});

  const int at = n == 0 ? 0 : arc + 1;
  std::vector<Visit> visits;
  for (int p = 0; p < at; ++p) visits.push_back({base.sequence()[static_cast<std::size_t>(p)], base.visit_is_lefty(p)});
  DiagramSplice out;
  for (std::size_t k = 0; k < block.size(); ++k) {
    const bool is_cross = crossed && (k == 0 || k + 1 == block.size());
    if (!is_cross) out.inserted_positions.push_back(static_cast<int>(visits.size()));
    visits.push_back(block[k]);
  }
  for (int p = at; p < 2 * n; ++p) visits.push_back({base.sequence()[static_cast<std::size_t>(p)], base.visit_is_lefty(p)});

  const int total_labels = n + n2 + (crossed ? 1 : 0);
  std::vector<bool> positive(static_cast<std::size_t>(total_labels), true);
  std::vector<int> seen(static_cast<std::size_t>(total_labels), 0);
  std::vector<int> sequence;
  for (const auto& v : visits) {
    sequence.push_back(v.label);
    if (++seen[static_cast<std::size_t>(v.label)] == 2) positive[static_cast<std::size_t>(v.label)] = v.lefty;
  }

  const int old_arc = dart_arc(base.outer_dart());
  int new_arc = old_arc;
  if (sequence.empty()) {
    new_arc = 0;
  } else if (n == 0) {
    new_arc = static_cast<int>(sequence.size()) - 1;
  } else if (old_arc > arc) {
    new_arc = old_arc + static_cast<int>(block.size());
  }
  out.diagram = build_labeled(sequence, positive, make_dart(new_arc, dart_forward(base.outer_dart())));
  return out;
}

struct Piece {
  Point p;
  Point q;
  std::size_t edge;
};

std::vector<Piece> pieces_by_length(const ArcPath& path) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    pieces.push_back({path.points[i], path.points[i + 1], path.edges[i]});
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    const Point da = a.q - a.p;
    const Point db = b.q - b.p;
    return dot(da, da) > dot(db, db);
  });
  return pieces;
}

struct CurveSplice {
  PolylineCurve curve;
  std::size_t insert_begin = 0;  // vertex range of the inserted curve's own vertices
  std::size_t insert_end = 0;
};

// Geometric counterpart of splice_diagrams. A box beside the longest piece of
// the base arc, on the target face's side and free of other edges, receives a
// scaled copy of the inserted curve; the inserted arc faces the base arc across
// a clear ray, and two short chords join them.
CurveSplice splice_curves(const GeometricDiagram& base, int arc, bool face_on_left,
                          const GeometricDiagram& ins, int ins_arc, bool flip, int expected_crossings) {
  const PolylineCurve& k = base.source.curve;
  const Piece bp = pieces_by_length(base.arcs.at(static_cast<std::size_t>(arc))).front();
  const Point mid = Rational(1, 2) * (bp.p + bp.q);
  const Point u = bp.q - bp.p;
  const Point es = face_on_left ? u : Point{-u.x, -u.y};
  const Rational sigma = face_on_left ? 1 : -1;
  auto to_frame = [&](const Point& z) { return cdiv(z - mid, es); };
  auto to_world = [&](const Point& f) { return mid + cmul(es, f); };

  Rational h(1, 4);
  for (int tries = 0;; ++tries) {
    if (tries > 200) throw Error(ErrorCode::PlacementFailure, "no clear box beside the base arc");
    const Point lo{-h, -h};
    const Point hi{h, h};
    bool clear = true;
    for (std::size_t e = 0; e < k.size() && clear; ++e) {
      if (e == bp.edge) continue;
      clear = !segment_touches_box(to_frame(k.vertex(e)), to_frame(k.vertex(e + 1)), lo, hi);
    }
    if (clear) break;
    h /= 2;
  }

  const PolylineCurve& kp = ins.source.curve;
  const CurveDiagram& dp = ins.diagram;
  const bool outer_left = dp.left_face(ins_arc) == dp.outer_face();
  std::optional<Piece> attach;
  Point dir;
  for (const Piece& piece : pieces_by_length(ins.arcs.at(static_cast<std::size_t>(ins_arc)))) {
    const Point w = Rational(1, 2) * (piece.p + piece.q);
    const Point tau = piece.q - piece.p;
    const Point nrm = outer_left ? perp(tau) : Point{-perp(tau).x, -perp(tau).y};
    for (const Rational& slant : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1),
                                  Rational(-1), Rational(2), Rational(-2)}) {
      const Point candidate = nrm + slant * tau;
      bool clear = true;
      for (std::size_t e = 0; e < kp.size() && clear; ++e) {
        if (e == piece.edge) continue;
        clear = !ray_touches_segment(w, candidate, kp.vertex(e), kp.vertex(e + 1));
      }
      if (clear) {
        attach = piece;
        dir = candidate;
        break;
      }
    }
    if (attach) break;
  }
  if (!attach) throw Error(ErrorCode::PlacementFailure, "inserted arc has no clear outward ray");

  // Rotate so the outward ray points down, then fit into the upper half of the box.
  const Point w = Rational(1, 2) * (attach->p + attach->q);
  const Point a{-dir.y, -dir.x};
  Rational xmin, xmax, ymin, ymax;
  for (std::size_t i = 0; i < kp.size(); ++i) {
    const Point z = cmul(a, kp.vertices[i] - w);
    if (i == 0 || z.x < xmin) xmin = z.x;
    if (i == 0 || z.x > xmax) xmax = z.x;
    if (i == 0 || z.y < ymin) ymin = z.y;
    if (i == 0 || z.y > ymax) ymax = z.y;
  }
  const Rational lam = std::min(Rational(h / (2 * (xmax - xmin))), Rational(h / (2 * (ymax - ymin))));
  const Point shift{Rational(0), h / 4 - lam * ymin};
  auto place = [&](const Point& z) { return lam * cmul(a, z - w) + shift; };

  const std::size_t m = kp.size();
  const std::size_t e = attach->edge;
  std::vector<Point> ring;
  for (std::size_t i = 0; i < m; ++i) {
    ring.push_back(to_world(place(flip ? kp.vertex(e + m - i) : kp.vertex(e + 1 + i))));
  }
  const Point tau = attach->q - attach->p;
  const Point wf = place(w);
  const Point tau_f = lam * cmul(a, flip ? Point{-tau.x, -tau.y} : tau);
  Rational mu = std::min(Rational(1, 4), Rational(h / (16 * linf(tau_f))));

  for (int retry = 0; retry <= 20; ++retry, mu /= 2) {
    const Point d = mu * tau_f;
    const Rational nu = d.x != 0 ? Rational(abs(d.x)) : h / 16;
    CurveSplice out;
    auto& v = out.curve.vertices;
    v.assign(k.vertices.begin(), k.vertices.begin() + static_cast<long>(bp.edge) + 1);
    v.push_back(to_world({-sigma * nu, Rational(0)}));
    v.push_back(to_world(wf + d));
    out.insert_begin = v.size();
    v.insert(v.end(), ring.begin(), ring.end());
    out.insert_end = v.size();
    v.push_back(to_world(wf - d));
    v.push_back(to_world({sigma * nu, Rational(0)}));
    v.insert(v.end(), k.vertices.begin() + static_cast<long>(bp.edge) + 1, k.vertices.end());
    try {
      const ValidatedCurve vc = validate_curve(out.curve);
      if (static_cast<int>(vc.double_points.size()) == expected_crossings) return out;
    } catch (const Error& err) {
      if (err.is_internal()) throw;
    }
  }
  throw Error(ErrorCode::PlacementFailure, "junction chords kept meeting other strands");
}

struct Operands {
  CurveDiagram base;
  int face = 0;
  int arc = 0;
  CurveDiagram ins;
  int ins_arc = 0;
  const GeometricDiagram* gbase = nullptr;
  const GeometricDiagram* gins = nullptr;
};

struct Performed {
  PredictedResult result;
  std::vector<int> inserted_positions;
  std::size_t insert_begin = 0;
  std::size_t insert_end = 0;
};

bool attaches_on_left(const CurveDiagram& d, int face, int arc) {
  if (arc < 0 || arc >= d.arc_count()) {
    throw Error(ErrorCode::ArcNotOnFace, "arc " + std::to_string(arc) + " does not exist");
  }
  if (d.left_face(arc) == face) return true;
  if (d.right_face(arc) == face) return false;
  throw Error(ErrorCode::ArcNotOnFace,
              "arc " + std::to_string(arc) + " does not bound face " + std::to_string(face));
}

Performed perform(const Operands& op, SumKind kind, bool crossed, bool may_flip) {
  const CurveDiagram& k = op.base;
  if (op.face < 0 || op.face >= k.face_count()) {
    throw Error(ErrorCode::ArcNotOnFace, "face " + std::to_string(op.face) + " does not exist");
  }
  const bool on_left = attaches_on_left(k, op.face, op.arc);
  const bool unbounded = op.face == k.outer_face();
  if (unbounded && (kind == SumKind::Interior || kind == SumKind::Tunnel)) {
    throw Error(ErrorCode::FaceUnbounded, "interior sums need a bounded face");
  }
  const CurveDiagram& ins = op.ins;
  if (op.ins_arc < 0 || op.ins_arc >= ins.arc_count()) {
    throw Error(ErrorCode::ArcNotOuter, "inserted arc " + std::to_string(op.ins_arc) + " does not exist");
  }
  bool outer_left = false;
  if (ins.left_face(op.ins_arc) == ins.outer_face()) {
    outer_left = true;
  } else if (ins.right_face(op.ins_arc) != ins.outer_face()) {
    throw Error(ErrorCode::ArcNotOuter,
                "arc " + std::to_string(op.ins_arc) + " does not bound the unbounded face");
  }
  const long omega_c = k.winding(op.face);
  const long omega_adj = on_left ? 1 : -1;
  const long omega_inner = ins.winding(outer_left ? ins.right_face(op.ins_arc) : ins.left_face(op.ins_arc));
  const long wanted = crossed ? omega_adj : -omega_adj;
  const bool flip = omega_inner != wanted;
  if (flip && !may_flip) {
    throw Error(ErrorCode::OrientationMismatch,
                "inner windings across the joined arcs differ; use flip or bridge mode");
  }
  const CurveDiagram oriented = flip ? reverse_orientation(ins) : ins;
  const int oriented_arc = flip ? reversed_arc(ins, op.ins_arc) : op.ins_arc;
  DiagramSplice comb = splice_diagrams(k, op.arc, on_left, oriented, oriented_arc, crossed);

  Performed out;
  PredictedResult& r = out.result;
  r.kind = kind;
  r.base = k;
  r.omega_c = omega_c;
  r.omega_adj = omega_adj;
  r.inserted_flipped = flip;
  r.unbounded_face = unbounded;
  out.inserted_positions = comb.inserted_positions;
  if (op.gbase != nullptr) {
    const int expected = k.crossing_count() + ins.crossing_count() + (crossed ? 1 : 0);
    CurveSplice cs = splice_curves(*op.gbase, op.arc, on_left, *op.gins, op.ins_arc, flip, expected);
    CurveDiagram traced = trace_diagram(validate_curve(cs.curve));
    if (traced.canonical_form() != comb.diagram.canonical_form()) {
      throw Error(ErrorCode::IdentityViolation,
                  "realized curve differs from the combinatorial sum: " +
                      to_gauss_code(traced).to_string() + " vs " +
                      to_gauss_code(comb.diagram).to_string());
    }
    r.curve = std::move(cs.curve);
    r.diagram = std::move(traced);
    out.insert_begin = cs.insert_begin;
    out.insert_end = cs.insert_end;
  } else {
    r.diagram = std::move(comb.diagram);
  }

  const Integer jk = jplus_viro(k);
  const Integer ji = jplus_viro(oriented);
  const Integer rot_k = rotation_from_windings(k);
  const Integer rot_i = rotation_from_windings(oriented);
  const std::string flip_note = flip ? "; inserted curve reversed" : "";
  switch (kind) {
    case SumKind::Connected:
      r.inserted = oriented;
      r.predicted_jplus = jk + ji;
      // The parallel junction turns back once relative to the two loops.
      r.predicted_rot = rot_k + rot_i + omega_adj;
      r.formula_tag = "J+(K # K') = J+(K) + J+(K')" + flip_note;
      break;
    case SumKind::Tunnel:
      // The identity is stated for the inserted curve oriented as in the crossed sum.
      r.inserted = reverse_orientation(oriented);
      r.predicted_jplus = jk + ji + 2 * omega_c * (-rot_i - omega_adj);
      r.formula_tag = "J+(K-) = J+(K) + J+(K') + 2 w_C (rot(K') - w_adj)" + flip_note;
      break;
    default:
      r.inserted = oriented;
      r.predicted_jplus = jk + ji - 2 * omega_c * rot_i;
      r.predicted_rot = rot_k + rot_i;
      r.formula_tag = "J+(Kx) = J+(K) + J+(K') - 2 w_C rot(K')" + flip_note;
      break;
  }
  return out;
}

int first_outer_arc(const CurveDiagram& d) {
  for (int a = 0; a < d.arc_count(); ++a) {
    if (d.left_face(a) == d.outer_face() || d.right_face(a) == d.outer_face()) return a;
  }
  throw Error(ErrorCode::IdentityViolation, "no arc bounds the unbounded face");
}

// Inner winding across an arc of the unbounded face, or 0 when the arc is not on it.
long inner_winding(const CurveDiagram& d, int arc) {
  if (d.left_face(arc) == d.outer_face()) return d.winding(d.right_face(arc));
  if (d.right_face(arc) == d.outer_face()) return d.winding(d.left_face(arc));
  return 0;
}

void check_outer(const CurveDiagram& d, int arc, const char* which) {
  if (arc < 0 || arc >= d.arc_count() || inner_winding(d, arc) == 0) {
    throw Error(ErrorCode::ArcNotOuter, std::string(which) + " arc " + std::to_string(arc) +
                                            " does not bound the unbounded face");
  }
}

// Joins K and K' through a figure eight whose lobes match each side.
PredictedResult bridged_sum(const CurveDiagram& k1, int arc1, const CurveDiagram& k2, int arc2,
                            const GeometricDiagram* g1, const GeometricDiagram* g2) {
  const PolylineCurve eight = standard_curve(0);
  const GeometricDiagram g0 = trace_geometric(validate_curve(eight));
  const CurveDiagram& k0 = g0.diagram;
  int lobe = -1;
  for (int a = 0; a < k0.arc_count(); ++a) {
    if (inner_winding(k0, a) == inner_winding(k1, arc1)) lobe = a;
  }
  Operands first{k1, k1.outer_face(), arc1, k0, lobe, g1, g1 != nullptr ? &g0 : nullptr};
  const Performed step1 = perform(first, SumKind::Connected, false, false);
  const CurveDiagram& mid = step1.result.diagram;

  std::optional<GeometricDiagram> gmid;
  int far_lobe = -1;
  if (g1 != nullptr) {
    gmid = trace_geometric(validate_curve(*step1.result.curve));
    for (int a = 0; a < mid.arc_count() && far_lobe < 0; ++a) {
      if (inner_winding(mid, a) != inner_winding(k2, arc2)) continue;
      const auto& edges = gmid->arcs[static_cast<std::size_t>(a)].edges;
      const bool inside = std::all_of(edges.begin(), edges.end(), [&](std::size_t e) {
        return e >= step1.insert_begin && e + 1 < step1.insert_end;
      });
      if (inside) far_lobe = a;
    }
  } else {
    far_lobe = step1.inserted_positions.front();
  }
  if (far_lobe < 0) throw Error(ErrorCode::IdentityViolation, "bridge lobe not found");
  Operands second{mid, mid.outer_face(), far_lobe, k2, arc2, gmid ? &*gmid : nullptr, g2};
  Performed step2 = perform(second, SumKind::Connected, false, false);
  PredictedResult r = std::move(step2.result);
  r.base = k1;
  r.predicted_jplus = jplus_viro(k1) + jplus_viro(k2);
  r.formula_tag = "J+(K # K0 # K') = J+(K) + 0 + J+(K'); figure-eight bridge";
  return r;
}

PredictedResult connected_impl(const CurveDiagram& k1, int arc1, const CurveDiagram& k2, int arc2,
                               OrientationMode mode, const GeometricDiagram* g1,
                               const GeometricDiagram* g2) {
  check_outer(k1, arc1, "first");
  check_outer(k2, arc2, "second");
  if (mode == OrientationMode::Bridge && inner_winding(k1, arc1) != inner_winding(k2, arc2)) {
    return bridged_sum(k1, arc1, k2, arc2, g1, g2);
  }
  Operands op{k1, k1.outer_face(), arc1, k2, arc2, g1, g2};
  return perform(op, SumKind::Connected, false, mode == OrientationMode::Flip).result;
}

PredictedResult loop_impl(const CurveDiagram& k, int face, int arc, int depth, const GeometricDiagram* g) {
  if (depth < 1) throw Error(ErrorCode::ParseError, "loop depth must be at least 1");
  const long omega_adj = attaches_on_left(k, face, arc) ? 1 : -1;
  const GeometricDiagram loop =
      trace_geometric(validate_curve(inner_loop_curve(static_cast<int>(omega_adj) * depth)));
  Operands op{k, face, arc, loop.diagram, first_outer_arc(loop.diagram), g, g != nullptr ? &loop : nullptr};
  PredictedResult r = perform(op, SumKind::InteriorLoop, true, true).result;
  const Integer d = depth;
  r.loop_depth = depth;
  r.predicted_jplus = jplus_viro(k) - d * (d - 1 + 2 * r.omega_c * r.omega_adj);
  r.predicted_rot = rotation_from_windings(k) + omega_adj * depth;
  r.formula_tag = "J+(K(m+1)) = J+(K) - (m+1)(m + 2 w_C w_adj)";
  if (r.unbounded_face) r.formula_tag += "; loop placed in the unbounded face";
  return r;
}

}  // namespace

std::vector<Point> kink_points(const Point& p, const Point& q, int depth) {
  const Point e1 = Rational(1, 8) * (q - p);
  const Point n1 = perp(e1);
  const Point origin = p + Rational(3, 8) * (q - p);
  auto local = [&](long a, long b) { return origin + Rational(a) * e1 + Rational(b) * n1; };
  std::vector<Point> pts{local(0, 0), local(2, 2)};
  if (depth > 1) {
    for (auto& inner : kink_points(local(2, 2), local(1, 3), depth - 1)) pts.push_back(inner);
  }
  pts.push_back(local(1, 3));
  pts.push_back(local(0, 2));
  pts.push_back(local(2, 0));
  return pts;
}

PolylineCurve standard_curve(int j) {
  if (j == 0) return PolylineCurve{{pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}};
  const int loops = std::abs(j) - 1;
  const PolylineCurve c =
      square_with_kinks(8L * std::max(loops, 1), std::vector<int>(static_cast<std::size_t>(loops), 1));
  return j > 0 ? c : reversed(c);
}

PolylineCurve inner_loop_curve(int j) {
  if (std::abs(j) <= 2) return standard_curve(j);
  const PolylineCurve c = square_with_kinks(8, {std::abs(j) - 1});
  return j > 0 ? c : reversed(c);
}

PolylineCurve single_and_double_loop_curve() { return square_with_kinks(16, {1, 2}); }

PredictedResult connected_sum(const PolylineCurve& k1, int arc1, const PolylineCurve& k2, int arc2,
                              OrientationMode mode) {
  const GeometricDiagram g1 = trace_geometric(validate_curve(k1));
  const GeometricDiagram g2 = trace_geometric(validate_curve(k2));
  return connected_impl(g1.diagram, arc1, g2.diagram, arc2, mode, &g1, &g2);
}

PredictedResult connected_sum(const CurveDiagram& k1, int arc1, const CurveDiagram& k2, int arc2,
                              OrientationMode mode) {
  return connected_impl(k1, arc1, k2, arc2, mode, nullptr, nullptr);
}

PredictedResult interior_sum(const SumSpec& spec) {
  const GeometricDiagram g1 = trace_geometric(validate_curve(spec.base));
  const GeometricDiagram g2 = trace_geometric(validate_curve(spec.inserted));
  Operands op{g1.diagram, spec.face, spec.arc, g2.diagram, spec.inserted_arc, &g1, &g2};
  return perform(op, SumKind::Interior, true, true).result;
}

PredictedResult tunnel_interior_sum(const SumSpec& spec) {
  const GeometricDiagram g1 = trace_geometric(validate_curve(spec.base));
  const GeometricDiagram g2 = trace_geometric(validate_curve(spec.inserted));
  Operands op{g1.diagram, spec.face, spec.arc, g2.diagram, spec.inserted_arc, &g1, &g2};
  return perform(op, SumKind::Tunnel, false, true).result;
}

PredictedResult interior_sum(const DiagramSumSpec& spec) {
  Operands op{spec.base, spec.face, spec.arc, spec.inserted, spec.inserted_arc, nullptr, nullptr};
  return perform(op, SumKind::Interior, true, true).result;
}

PredictedResult tunnel_interior_sum(const DiagramSumSpec& spec) {
  Operands op{spec.base, spec.face, spec.arc, spec.inserted, spec.inserted_arc, nullptr, nullptr};
  return perform(op, SumKind::Tunnel, false, true).result;
}

PredictedResult add_interior_loop(const PolylineCurve& k, int face, int arc, int depth) {
  const GeometricDiagram g = trace_geometric(validate_curve(k));
  return loop_impl(g.diagram, face, arc, depth, &g);
}

PredictedResult add_interior_loop(const CurveDiagram& k, int face, int arc, int depth) {
  return loop_impl(k, face, arc, depth, nullptr);
}

SumIdentityInputs identity_inputs(const PredictedResult& r) {
  SumIdentityInputs in;
  in.kind = r.kind;
  in.base = r.base;
  in.inserted = r.inserted;
  in.omega_c = r.omega_c;
  in.omega_adj = r.omega_adj;
  in.loop_depth = r.loop_depth;
  in.result = r.diagram;
  return in;
}

}  // namespace jplus
