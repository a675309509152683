#include "jplus/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace jplus {

namespace {

CurveDiagram traced(const PolylineCurve& c) { return trace_diagram(validate_curve(c)); }
CurveDiagram standard(int j) { return traced(standard_curve(j)); }

long inner_winding_of(const CurveDiagram& d, int arc) {
  if (d.left_face(arc) == d.outer_face()) return d.winding(d.right_face(arc));
  if (d.right_face(arc) == d.outer_face()) return d.winding(d.left_face(arc));
  return 0;
}

int outer_arc_with(const CurveDiagram& d, long inner) {
  for (int a = 0; a < d.arc_count(); ++a) {
    if (inner_winding_of(d, a) == inner) return a;
  }
  return -1;
}

Integer flag(bool b) { return b ? 1 : 0; }

}  // namespace

CurveDiagram with_direct_tangencies(const CurveDiagram& d, int count) {
  CurveDiagram cur = d;
  auto first_of = [](const std::vector<MoveSite>& sites, MoveKind kind) {
    return std::find_if(sites.begin(), sites.end(), [kind](const MoveSite& s) { return s.kind == kind; });
  };
  for (int i = 0; i < count; ++i) {
    auto sites = enumerate_moves(cur);
    auto it = first_of(sites, MoveKind::DirectTangencyPositive);
    if (it == sites.end()) {
      // A bare circle has no co-oriented arcs facing each other; an inverse
      // tangency (J+ unchanged) makes one.
      const auto inv = first_of(sites, MoveKind::InverseTangencyPositive);
      if (inv == sites.end()) throw Error(ErrorCode::IllegalSite, "no positive tangency site");
      cur = apply_move(cur, *inv).diagram;
      sites = enumerate_moves(cur);
      it = first_of(sites, MoveKind::DirectTangencyPositive);
      if (it == sites.end()) throw Error(ErrorCode::IllegalSite, "no positive direct tangency site");
    }
    cur = apply_move(cur, *it).diagram;
  }
  return cur;
}

NestedSumPair nested_sum_pair() {
  NestedSumPair p;
  p.base = with_direct_tangencies(standard(3), 3);
  p.face = -1;
  for (int a = 0; a < p.base.arc_count() && p.face < 0; ++a) {
    const int f = p.base.left_face(a);
    if (f != p.base.outer_face() && p.base.winding(f) == 2) {
      p.face = f;
      p.arc = a;
    }
  }
  p.inserted = with_direct_tangencies(standard(3), 1);
  p.inserted_arc = outer_arc_with(p.inserted, 1);
  if (p.face < 0 || p.inserted_arc < 0) {
    throw Error(ErrorCode::IdentityViolation, "nested sum pair has no suitable face or arc");
  }
  return p;
}

std::vector<GoldenCheck> golden_checks() {
  std::vector<GoldenCheck> c;
  auto add = [&](std::string name, Integer expected, std::function<Integer()> fn) {
    c.push_back({std::move(name), std::move(expected), std::move(fn)});
  };

  for (int j = -10; j <= 10; ++j) {
    const std::string k = "standard-table/K" + std::to_string(j);
    add(k + "/jplus", j == 0 ? 0 : -2 * (std::abs(j) - 1), [j] { return jplus_viro(standard(j)); });
    add(k + "/rot-windings", j, [j] { return rotation_from_windings(standard(j)); });
    add(k + "/rot-turning", j, [j] { return Integer(turning_number(standard_curve(j))); });
    add(k + "/crossings", j == 0 ? 1 : std::abs(j) - 1, [j] { return Integer(standard(j).crossing_count()); });
  }

  const auto worked = [] { return traced(single_and_double_loop_curve()); };
  add("worked-example/crossings", 3, [worked] { return Integer(worked().crossing_count()); });
  add("worked-example/sum-winding-squares", 18, [worked] {
    const CurveDiagram d = worked();
    Integer s = 0;
    for (int f = 0; f < d.face_count(); ++f) s += d.winding(f) * d.winding(f);
    return s;
  });
  add("worked-example/sum-index-squares", 6, [worked] {
    const CurveDiagram d = worked();
    Integer s = 0;
    for (int x = 0; x < d.crossing_count(); ++x) s += d.index(x) * d.index(x);
    return s;
  });
  add("worked-example/jplus", -8, [worked] { return jplus_viro(worked()); });
  add("labels/worked-example-windings", 1, [worked] {
    std::vector<long> w = report(worked()).windings;
    std::sort(w.begin(), w.end());
    return flag(w == std::vector<long>{0, 1, 2, 2, 3});
  });
  add("labels/worked-example-indices", 1, [worked] {
    std::vector<long> i = report(worked()).indices;
    std::sort(i.begin(), i.end());
    return flag(i == std::vector<long>{1, 1, 2});
  });
  add("labels/figure-eight-windings", 1, [] {
    std::vector<long> w = report(standard(0)).windings;
    std::sort(w.begin(), w.end());
    return flag(w == std::vector<long>{-1, 0, 1});
  });
  add("labels/figure-eight-index", 0, [] { return Integer(standard(0).index(0)); });
  add("labels/figure-eight-faces", 3, [] { return Integer(standard(0).face_count()); });
  add("labels/worked-example-innermost", 3, [] {
    const GeometricDiagram g = trace_geometric(validate_curve(single_and_double_loop_curve()));
    long best = 0;
    for (const auto& p : g.face_samples) best = std::max(best, point_winding(single_and_double_loop_curve(), p));
    return Integer(best);
  });
  add("labels/far-point", 0, [] {
    return Integer(point_winding(standard_curve(4), {Rational(1000), Rational(1000)}));
  });
  add("rotation/figure-eight", 0, [] { return Integer(turning_number(standard_curve(0))); });
  add("rotation/K3-reversed", -3, [] { return rotation_from_windings(reverse_orientation(standard(3))); });

  for (int n = 1; n <= 20; ++n) {
    add("inner-loop/A" + std::to_string(n + 1) + "/jplus", -n * n - n,
        [n] { return jplus_viro(traced(inner_loop_curve(n + 1))); });
    add("inner-loop/A" + std::to_string(n + 1) + "/arnold-slack", 0,
        [n] { return report(traced(inner_loop_curve(n + 1))).arnold_slack; });
  }
  add("inner-loop/A4/rot", 4, [] { return rotation_from_windings(traced(inner_loop_curve(4))); });
  add("inner-loop/A2-is-K2", 1, [] {
    return flag(traced(inner_loop_curve(2)).canonical_form() == standard(2).canonical_form());
  });

  const auto circle_face = [] {
    const CurveDiagram d = standard(1);
    return d.left_face(0) == d.outer_face() ? d.right_face(0) : d.left_face(0);
  };
  add("loop-sum/circle-single-loop", -2, [circle_face] {
    return jplus_viro(add_interior_loop(standard_curve(1), circle_face(), 0, 1).diagram);
  });
  add("loop-sum/circle-triple-loop", -12, [circle_face] {
    return jplus_viro(add_interior_loop(standard_curve(1), circle_face(), 0, 3).diagram);
  });

  add("interior-sum/nested-pair", -12, [] {
    const NestedSumPair p = nested_sum_pair();
    return jplus_viro(interior_sum(DiagramSumSpec{p.base, p.face, p.arc, p.inserted, p.inserted_arc}).diagram);
  });
  add("interior-sum/nested-pair-rot", 6, [] {
    const NestedSumPair p = nested_sum_pair();
    return rotation_from_windings(
        interior_sum(DiagramSumSpec{p.base, p.face, p.arc, p.inserted, p.inserted_arc}).diagram);
  });
  add("interior-sum/circle-into-K3", -6, [] {
    // A circle inserted into the unit face: J+(K) - 2 w_C w_adj.
    const PolylineCurve k3 = standard_curve(3);
    const CurveDiagram d = traced(k3);
    const CurveDiagram circle = standard(1);
    for (int a = 0; a < d.arc_count(); ++a) {
      const int f = d.left_face(a);
      if (f != d.outer_face() && d.winding(f) == 1) {
        return jplus_viro(interior_sum(SumSpec{k3, f, a, standard_curve(1), 0}).diagram);
      }
    }
    throw Error(ErrorCode::IdentityViolation, "no unit face");
  });

  add("tunnel-sum/nested-pair", 8, [] {
    const NestedSumPair p = nested_sum_pair();
    return jplus_viro(
        tunnel_interior_sum(DiagramSumSpec{p.base, p.face, p.arc, p.inserted, p.inserted_arc}).diagram);
  });
  add("tunnel-sum/nested-pair-rot", 1, [] {
    const NestedSumPair p = nested_sum_pair();
    return rotation_from_windings(
        tunnel_interior_sum(DiagramSumSpec{p.base, p.face, p.arc, p.inserted, p.inserted_arc}).diagram);
  });

  add("connected-sum/K3-with-figure-eight", -4, [] {
    const CurveDiagram k3 = standard(3);
    const CurveDiagram k0 = standard(0);
    return jplus_viro(connected_sum(standard_curve(3), outer_arc_with(k3, 1), standard_curve(0),
                                    outer_arc_with(k0, 1))
                          .diagram);
  });
  add("connected-sum/loops-1-2-with-touched-eight", -6, [] {
    const CurveDiagram a = traced(single_and_double_loop_curve());
    const CurveDiagram b = with_direct_tangencies(standard(0), 1);
    return jplus_viro(connected_sum(a, outer_arc_with(a, 1), b, outer_arc_with(b, 1),
                                    OrientationMode::Flip)
                          .diagram);
  });
  add("connected-sum/circle-and-eight-figure-eights", 0, [] {
    const PolylineCurve eight = standard_curve(0);
    const int eight_arc = outer_arc_with(traced(eight), 1);
    PolylineCurve chain = standard_curve(1);
    for (int i = 0; i < 8; ++i) {
      chain = *connected_sum(chain, 0, eight, eight_arc, OrientationMode::Flip).curve;
    }
    return jplus_viro(traced(chain));
  });

  // Standard curves plus positive direct touches, two units of J+ each.
  add("tangency-ledger/K3-three-touches", 2, [] { return jplus_viro(with_direct_tangencies(standard(3), 3)); });
  add("tangency-ledger/K-2-one-touch", 0, [] { return jplus_viro(with_direct_tangencies(standard(-2), 1)); });
  add("tangency-ledger/K3-one-touch", -2, [] { return jplus_viro(with_direct_tangencies(standard(3), 1)); });
  add("tangency-ledger/K-4-one-touch-undone", -8, []() -> Integer { return jplus_viro(standard(-4)) - 2 * (1 - 0); });
  add("tangency-ledger/eight-one-touch", 2, [] { return jplus_viro(with_direct_tangencies(standard(0), 1)); });
  add("tangency-ledger/A3-from-K3", -6, [] { return jplus_viro(traced(inner_loop_curve(3))); });
  add("tangency-ledger/K4-two-touches", -2, [] { return jplus_viro(with_direct_tangencies(standard(4), 2)); });
  add("tangency-ledger/circle-twelve-touches", 24,
      [] { return jplus_viro(with_direct_tangencies(standard(1), 12)); });
  add("tangency-ledger/K2-five-touches", 8, [] { return jplus_viro(with_direct_tangencies(standard(2), 5)); });

  add("moves/K2-direct-site", 1, [] {
    const auto sites = enumerate_moves(standard(2));
    return flag(std::any_of(sites.begin(), sites.end(), [](const MoveSite& s) {
      return s.kind == MoveKind::DirectTangencyPositive;
    }));
  });
  add("moves/circle-inverse-tangency", 0, [] {
    const CurveDiagram circle = standard(1);
    for (const auto& s : enumerate_moves(circle)) {
      if (s.kind == MoveKind::InverseTangencyPositive) return jplus_viro(apply_move(circle, s).diagram);
    }
    throw Error(ErrorCode::IdentityViolation, "no inverse site on the circle");
  });
  add("moves/triple-point-cases-seen", 4, [] {
    bool seen[5] = {};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      for (const auto& st : random_homotopy(standard(-3), 200, seed).steps) {
        if (st.site.kind == MoveKind::TriplePoint) seen[st.site.triple_case] = true;
      }
    }
    return Integer(std::count(seen + 1, seen + 5, true));
  });
  add("moves/walk-ledger", 1, [] {
    const HomotopyTrace t = random_homotopy(standard(3), 1000, 7);
    return flag(jplus_viro(t.final_diagram) ==
                jplus_viro(t.initial) + 2 * (t.direct_positive - t.direct_negative));
  });
  add("moves/inverse-and-triple-only", -4, [] {
    WalkOptions o = default_walk_options();
    o.allow_direct = false;
    return jplus_viro(random_homotopy(standard(3), 500, 3, o).final_diagram);
  });
  return c;
}

std::size_t CorpusReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return !o.passed; }));
}

CorpusReport verify_corpus(const CorpusOptions& options) {
  std::vector<GoldenCheck> checks;
  for (auto& g : golden_checks()) {
    if (options.filter.empty() || g.name.find(options.filter) != std::string::npos) {
      if (g.name == options.corrupt) g.expected += 1;
      checks.push_back(std::move(g));
    }
  }
  CorpusReport rep;
  rep.outcomes.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      CheckOutcome& o = rep.outcomes[i];
      o.name = checks[i].name;
      o.expected = checks[i].expected;
      try {
        o.actual = checks[i].compute();
        o.passed = o.actual == o.expected;
      } catch (const std::exception& e) {
        o.error = e.what();
      }
    }
  };
  unsigned n = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

}  // namespace jplus
