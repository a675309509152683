#include "jplus/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "jplus/invariants.hpp"

namespace jplus {

namespace {

struct Visit {
  int label;
  bool lefty;
};

std::vector<Visit> visits_of(const CurveDiagram& d) {
  std::vector<Visit> v;
  for (int p = 0; p < static_cast<int>(d.sequence().size()); ++p) {
    v.push_back({d.sequence()[static_cast<std::size_t>(p)], d.visit_is_lefty(p)});
  }
  return v;
}

CurveDiagram rebuild(const std::vector<Visit>& visits, int outer_dart) {
  int top = -1;
  for (const auto& v : visits) top = std::max(top, v.label);
  std::vector<bool> positive(static_cast<std::size_t>(top + 1), true);
  std::vector<int> seen(static_cast<std::size_t>(top + 1), 0);
  std::vector<int> sequence;
  for (const auto& v : visits) {
    sequence.push_back(v.label);
    if (++seen[static_cast<std::size_t>(v.label)] == 2) positive[static_cast<std::size_t>(v.label)] = v.lefty;
  }
  return build_labeled(sequence, positive, outer_dart);
}

int sign_of(int dart) { return dart_forward(dart) ? 1 : -1; }

// Crossing the dart runs into.
int head_of(const CurveDiagram& d, int dart) {
  return dart_forward(dart) ? d.head_crossing(dart_arc(dart)) : d.tail_crossing(dart_arc(dart));
}

int tail_of(const CurveDiagram& d, int dart) {
  return dart_forward(dart) ? d.tail_crossing(dart_arc(dart)) : d.head_crossing(dart_arc(dart));
}

bool is_bigon(const CurveDiagram& d, int face) {
  const auto& b = d.face(face).boundary;
  return face != d.outer_face() && b.size() == 2 && head_of(d, b[0]) != head_of(d, b[1]);
}

bool is_triangle(const CurveDiagram& d, int face) {
  const auto& b = d.face(face).boundary;
  if (face == d.outer_face() || b.size() != 3) return false;
  const int x = head_of(d, b[0]);
  const int y = head_of(d, b[1]);
  const int z = head_of(d, b[2]);
  return x != y && y != z && x != z;
}

int triangle_case(const CurveDiagram& d, int face) {
  int forward = 0;
  for (int dart : d.face(face).boundary) forward += dart_forward(dart) ? 1 : 0;
  switch (forward) {
    case 1: return 1;
    case 2: return 2;
    case 0: return 3;
    default: return 4;
  }
}

std::vector<long> all_windings(const CurveDiagram& d) {
  std::vector<long> w;
  for (int f = 0; f < d.face_count(); ++f) w.push_back(d.winding(f));
  return w;
}

std::vector<long> all_indices(const CurveDiagram& d) {
  std::vector<long> w;
  for (int c = 0; c < d.crossing_count(); ++c) w.push_back(d.index(c));
  return w;
}

void remove_one(std::vector<long>& values, long value) {
  const auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) {
    throw Error(ErrorCode::IdentityViolation, "expected label " + std::to_string(value) + " is missing");
  }
  values.erase(it);
}

void check_labels(MoveOutcome& out) {
  std::sort(out.predicted_windings.begin(), out.predicted_windings.end());
  std::sort(out.predicted_indices.begin(), out.predicted_indices.end());
  std::vector<long> w = all_windings(out.diagram);
  std::vector<long> i = all_indices(out.diagram);
  std::sort(w.begin(), w.end());
  std::sort(i.begin(), i.end());
  if (w != out.predicted_windings || i != out.predicted_indices) {
    throw Error(ErrorCode::IdentityViolation, "labels after the move differ from the local prediction");
  }
}

// Old arc k becomes the arc that starts where the last surviving position at
// or before k landed; the side is kept.
int remap_outer(const CurveDiagram& d, const std::vector<int>& new_position, int new_arcs) {
  const int dart = d.outer_dart();
  const int k = dart_arc(dart);
  const int len = static_cast<int>(new_position.size());
  for (int step = 0; step < len; ++step) {
    const int p = ((k - step) % len + len) % len;
    if (new_position[static_cast<std::size_t>(p)] >= 0) {
      return make_dart(new_position[static_cast<std::size_t>(p)] % new_arcs, dart_forward(dart));
    }
  }
  return make_dart(0, dart_forward(dart));
}

// An outer-face dart on none of the arcs of `face_darts`; the arcs of the
// moving face change their neighbours, so the marker must sit elsewhere.
int outer_dart_avoiding(const CurveDiagram& d, const std::vector<int>& face_darts) {
  auto touches = [&](int dart) {
    return std::any_of(face_darts.begin(), face_darts.end(),
                       [&](int t) { return dart_arc(t) == dart_arc(dart); });
  };
  if (!touches(d.outer_dart())) return d.outer_dart();
  for (int dart : d.face(d.outer_face()).boundary) {
    if (!touches(dart)) return dart;
  }
  throw Error(ErrorCode::IdentityViolation, "outer face lies entirely on the moving face");
}

MoveOutcome positive_tangency(const CurveDiagram& d, const MoveSite& site) {
  const int d1 = site.darts[0];
  const int d2 = site.darts[1];
  const int s1 = sign_of(d1);
  const int s2 = sign_of(d2);
  const int n = d.crossing_count();
  const int x = n;
  const int y = n + 1;
  const bool p = s1 * s2 > 0;

  // Visits in dart order, then turned into curve order.
  std::vector<std::pair<int, std::vector<Visit>>> blocks;
  auto to_curve_order = [](std::vector<Visit> v, int dart) {
    if (!dart_forward(dart)) std::reverse(v.begin(), v.end());
    return v;
  };
  if (d1 == d2) {
    blocks.push_back({dart_arc(d1), to_curve_order({{x, !p}, {y, p}, {y, !p}, {x, p}}, d1)});
  } else {
    blocks.push_back({dart_arc(d1), to_curve_order({{x, !p}, {y, p}}, d1)});
    blocks.push_back({dart_arc(d2), to_curve_order({{y, !p}, {x, p}}, d2)});
  }

  const std::vector<Visit> old = visits_of(d);
  std::vector<Visit> visits;
  std::vector<int> new_position(old.size(), -1);
  if (n == 0) {
    for (const auto& [arc, block] : blocks) visits.insert(visits.end(), block.begin(), block.end());
  } else {
    for (int pos = 0; pos < static_cast<int>(old.size()); ++pos) {
      new_position[static_cast<std::size_t>(pos)] = static_cast<int>(visits.size());
      visits.push_back(old[static_cast<std::size_t>(pos)]);
      for (const auto& [arc, block] : blocks) {
        if (arc == pos) visits.insert(visits.end(), block.begin(), block.end());
      }
    }
  }
  const int new_arcs = static_cast<int>(visits.size());
  const int outer = n == 0 ? make_dart(new_arcs - 1, dart_forward(d.outer_dart()))
                           : remap_outer(d, new_position, new_arcs);

  MoveOutcome out;
  out.diagram = rebuild(visits, outer);
  out.delta_jplus = site.kind == MoveKind::DirectTangencyPositive ? 2 : 0;
  const long wf = d.winding(site.face);
  out.predicted_windings = all_windings(d);
  out.predicted_windings.push_back(wf);
  out.predicted_windings.push_back(wf - s1 - s2);
  out.predicted_indices = all_indices(d);
  out.predicted_indices.push_back(wf - (s1 + s2) / 2);
  out.predicted_indices.push_back(wf - (s1 + s2) / 2);

  int cx = -1;
  int cy = -1;
  for (std::size_t pos = 0; pos < visits.size(); ++pos) {
    if (visits[pos].label == x) cx = out.diagram.sequence()[pos];
    if (visits[pos].label == y) cy = out.diagram.sequence()[pos];
  }
  const CurveDiagram& nd = out.diagram;
  for (int f = 0; f < nd.face_count(); ++f) {
    const auto& b = nd.face(f).boundary;
    if (b.size() != 2) continue;
    auto joins = [&](int dart) {
      const int t = tail_of(nd, dart);
      const int h = head_of(nd, dart);
      return (t == cx && h == cy) || (t == cy && h == cx);
    };
    if (joins(b[0]) && joins(b[1])) out.created_bigon = f;
  }
  return out;
}

MoveOutcome negative_tangency(const CurveDiagram& d, const MoveSite& site) {
  const auto& b = d.face(site.face).boundary;
  const std::vector<Visit> old = visits_of(d);
  const int len = static_cast<int>(old.size());
  std::vector<bool> drop(old.size(), false);
  for (int dart : b) {
    const int a = dart_arc(dart);
    drop[static_cast<std::size_t>(a)] = true;
    drop[static_cast<std::size_t>((a + 1) % len)] = true;
  }
  std::vector<Visit> visits;
  std::vector<int> new_position(old.size(), -1);
  for (int pos = 0; pos < len; ++pos) {
    if (drop[static_cast<std::size_t>(pos)]) continue;
    new_position[static_cast<std::size_t>(pos)] = static_cast<int>(visits.size());
    visits.push_back(old[static_cast<std::size_t>(pos)]);
  }
  const int new_arcs = visits.empty() ? 1 : static_cast<int>(visits.size());
  CurveDiagram marked = d;
  const int outer = outer_dart_avoiding(d, b);
  if (outer != d.outer_dart()) {
    marked = CurveDiagram::from_sequence(d.sequence(), d.signs(), outer);
  }
  MoveOutcome out;
  out.diagram = rebuild(visits, remap_outer(marked, new_position, new_arcs));
  out.delta_jplus = site.kind == MoveKind::DirectTangencyNegative ? -2 : 0;
  const int s0 = sign_of(b[0]);
  const int s1 = sign_of(b[1]);
  const long wb = d.winding(site.face);
  out.predicted_windings = all_windings(d);
  remove_one(out.predicted_windings, wb);
  remove_one(out.predicted_windings, wb - s0 - s1);
  out.predicted_indices = all_indices(d);
  remove_one(out.predicted_indices, wb - (s0 + s1) / 2);
  remove_one(out.predicted_indices, wb - (s0 + s1) / 2);
  return out;
}

MoveOutcome triple_point(const CurveDiagram& d, const MoveSite& site) {
  const auto& b = d.face(site.face).boundary;
  const int outer = outer_dart_avoiding(d, b);
  std::vector<Visit> visits = visits_of(d);
  const int len = static_cast<int>(visits.size());
  for (int dart : b) {
    const int a = dart_arc(dart);
    std::swap(visits[static_cast<std::size_t>(a)], visits[static_cast<std::size_t>((a + 1) % len)]);
  }
  MoveOutcome out;
  out.diagram = rebuild(visits, outer);
  out.delta_jplus = 0;
  const long wt = d.winding(site.face);
  long total = 0;
  for (int dart : b) total += sign_of(dart);
  out.predicted_windings = all_windings(d);
  remove_one(out.predicted_windings, wt);
  out.predicted_windings.push_back(wt - total);
  out.predicted_indices = all_indices(d);
  for (int i = 0; i < 3; ++i) {
    const int c = head_of(d, b[static_cast<std::size_t>(i)]);
    const long before = d.index(c);
    remove_one(out.predicted_indices, before);
    out.predicted_indices.push_back(before - sign_of(b[static_cast<std::size_t>((i + 2) % 3)]));
  }
  return out;
}

bool dart_on_face(const CurveDiagram& d, int face, int dart) {
  return dart >= 0 && dart < d.dart_count() && d.face_of_dart(dart) == face;
}

void check_site(const CurveDiagram& d, const MoveSite& site) {
  auto illegal = [&](const std::string& why) { throw Error(ErrorCode::IllegalSite, why); };
  if (site.face < 0 || site.face >= d.face_count()) illegal("face " + std::to_string(site.face) + " does not exist");
  switch (site.kind) {
    case MoveKind::DirectTangencyPositive:
    case MoveKind::InverseTangencyPositive: {
      if (!dart_on_face(d, site.face, site.darts[0]) || !dart_on_face(d, site.face, site.darts[1])) {
        illegal("tangency darts must lie on the face boundary");
      }
      const bool direct = sign_of(site.darts[0]) != sign_of(site.darts[1]);
      if (direct != (site.kind == MoveKind::DirectTangencyPositive)) illegal("tangency kind does not match the darts");
      break;
    }
    case MoveKind::DirectTangencyNegative:
    case MoveKind::InverseTangencyNegative: {
      if (!is_bigon(d, site.face)) illegal("face " + std::to_string(site.face) + " is not a bounded bigon");
      const auto& b = d.face(site.face).boundary;
      const bool direct = sign_of(b[0]) != sign_of(b[1]);
      if (direct != (site.kind == MoveKind::DirectTangencyNegative)) illegal("tangency kind does not match the bigon");
      break;
    }
    case MoveKind::TriplePoint:
      if (!is_triangle(d, site.face)) illegal("face " + std::to_string(site.face) + " is not a bounded triangle");
      break;
  }
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::DirectTangencyPositive: return "direct+";
    case MoveKind::DirectTangencyNegative: return "direct-";
    case MoveKind::InverseTangencyPositive: return "inverse+";
    case MoveKind::InverseTangencyNegative: return "inverse-";
    case MoveKind::TriplePoint: return "triple";
  }
  return "unknown";
}

std::vector<MoveSite> enumerate_moves(const CurveDiagram& d) {
  std::vector<MoveSite> sites;
  for (int f = 0; f < d.face_count(); ++f) {
    const auto& b = d.face(f).boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i; j < b.size(); ++j) {
        MoveSite s;
        s.kind = sign_of(b[i]) != sign_of(b[j]) ? MoveKind::DirectTangencyPositive
                                                 : MoveKind::InverseTangencyPositive;
        s.face = f;
        s.darts = {b[i], b[j]};
        sites.push_back(s);
      }
    }
    if (is_bigon(d, f)) {
      MoveSite s;
      s.kind = sign_of(b[0]) != sign_of(b[1]) ? MoveKind::DirectTangencyNegative
                                               : MoveKind::InverseTangencyNegative;
      s.face = f;
      s.darts = {b[0], b[1]};
      sites.push_back(s);
    }
    if (is_triangle(d, f)) {
      MoveSite s;
      s.kind = MoveKind::TriplePoint;
      s.face = f;
      s.triple_case = triangle_case(d, f);
      sites.push_back(s);
    }
  }
  return sites;
}

MoveOutcome apply_move(const CurveDiagram& d, const MoveSite& site) {
  check_site(d, site);
  MoveOutcome out;
  switch (site.kind) {
    case MoveKind::DirectTangencyPositive:
    case MoveKind::InverseTangencyPositive:
      out = positive_tangency(d, site);
      break;
    case MoveKind::DirectTangencyNegative:
    case MoveKind::InverseTangencyNegative:
      out = negative_tangency(d, site);
      break;
    case MoveKind::TriplePoint:
      out = triple_point(d, site);
      break;
  }
  check_labels(out);
  return out;
}

int default_max_crossings() {
  if (const char* env = std::getenv("JPLUS_MAX_CROSSINGS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return 64;
}

WalkOptions default_walk_options() {
  WalkOptions o;
  o.max_crossings = default_max_crossings();
  return o;
}

HomotopyTrace random_homotopy(const CurveDiagram& d, std::size_t steps, std::uint64_t seed,
                              const WalkOptions& options) {
  HomotopyTrace trace;
  trace.initial = d;
  trace.seed = seed;
  std::mt19937_64 rng(seed);
  CurveDiagram current = d;
  Integer running = jplus_viro(d);
  const Integer rot = rotation_from_windings(d);
  for (std::size_t step = 0; step < steps; ++step) {
    std::array<std::vector<MoveSite>, 3> families;
    const bool room = current.crossing_count() + 2 <= options.max_crossings;
    for (const MoveSite& s : enumerate_moves(current)) {
      switch (s.kind) {
        case MoveKind::DirectTangencyPositive:
          if (options.allow_direct && room) families[0].push_back(s);
          break;
        case MoveKind::InverseTangencyPositive:
          if (options.allow_inverse && room) families[0].push_back(s);
          break;
        case MoveKind::DirectTangencyNegative:
          if (options.allow_direct) families[1].push_back(s);
          break;
        case MoveKind::InverseTangencyNegative:
          if (options.allow_inverse) families[1].push_back(s);
          break;
        case MoveKind::TriplePoint:
          if (options.allow_triple) families[2].push_back(s);
          break;
      }
    }
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < families.size(); ++k) {
      if (!families[k].empty()) open.push_back(k);
    }
    if (open.empty()) break;
    const auto& family = families[open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)]];
    const MoveSite site = family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
    MoveOutcome out = apply_move(current, site);
    running += out.delta_jplus;
    const Integer recomputed = jplus_viro(out.diagram);
    if (recomputed != running) {
      throw Error(ErrorCode::IdentityViolation, "step " + std::to_string(step) + ": running J+ " +
                                                    running.get_str() + " but Viro gives " +
                                                    recomputed.get_str());
    }
    if (rotation_from_windings(out.diagram) != rot) {
      throw Error(ErrorCode::IdentityViolation, "step " + std::to_string(step) + " changed the rotation number");
    }
    if (site.kind == MoveKind::DirectTangencyPositive) ++trace.direct_positive;
    if (site.kind == MoveKind::DirectTangencyNegative) ++trace.direct_negative;
    current = std::move(out.diagram);
    trace.steps.push_back({site, out.delta_jplus, running, current.crossing_count()});
  }
  trace.final_diagram = current;
  return trace;
}

}  // namespace jplus
