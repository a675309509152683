#include "jplus/invariants.hpp"

namespace jplus {

namespace {

Integer viro_raw(const CurveDiagram& d) {
  Integer total = 1 + d.crossing_count();
  for (int f = 0; f < d.face_count(); ++f) {
    const Integer w = d.winding(f);
    total -= w * w;
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Integer i = d.index(c);
    total += i * i;
  }
  return total;
}

}  // namespace

Integer jplus_viro(const CurveDiagram& d) {
  const Integer value = viro_raw(d);
  if (mpz_odd_p(value.get_mpz_t())) {
    throw Error(ErrorCode::IdentityViolation, "J+ is odd: " + value.get_str());
  }
  const Integer reversed_value = viro_raw(reverse_orientation(d));
  if (reversed_value != value) {
    throw Error(ErrorCode::IdentityViolation, "J+ depends on orientation: " + value.get_str() +
                                                  " vs " + reversed_value.get_str());
  }
  return value;
}

Integer jplus_viro_alternate(const CurveDiagram& d) {
  Integer total = 1;
  for (int f = 0; f < d.face_count(); ++f) {
    const Integer w = d.winding(f);
    total -= w * w;
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Integer i = d.index(c);
    total += 1 + i * i;
  }
  return total;
}

Integer rotation_from_windings(const CurveDiagram& d) {
  Integer total = 0;
  for (int f = 0; f < d.face_count(); ++f) total += d.winding(f);
  for (int c = 0; c < d.crossing_count(); ++c) total -= d.index(c);
  return total;
}

Integer arnold_bound(int n) {
  const Integer m = n;
  return -m * m - m;
}

InvariantReport report(const CurveDiagram& d) {
  InvariantReport r;
  r.n = d.crossing_count();
  r.rot_combinatorial = rotation_from_windings(d);
  r.jplus = jplus_viro(d);
  for (int f = 0; f < d.face_count(); ++f) r.windings.push_back(d.winding(f));
  for (int c = 0; c < d.crossing_count(); ++c) r.indices.push_back(d.index(c));
  r.outer_face = d.outer_face();
  r.arnold_slack = r.jplus - arnold_bound(r.n);
  r.gauss_code = to_gauss_code(d).to_string();
  if (sgn(r.arnold_slack) < 0) {
    throw Error(ErrorCode::IdentityViolation, "Arnold bound violated: J+ = " + r.jplus.get_str());
  }
  return r;
}

InvariantReport report(const PolylineCurve& curve) {
  const GeometricDiagram g = trace_geometric(validate_curve(curve));
  InvariantReport r = report(g.diagram);
  r.rot_geometric = turning_number(curve);
  if (Integer(*r.rot_geometric) != r.rot_combinatorial) {
    throw Error(ErrorCode::IdentityViolation,
                "rotation from windings " + r.rot_combinatorial.get_str() +
                    " differs from turning number " + std::to_string(*r.rot_geometric));
  }
  for (int f = 0; f < g.diagram.face_count(); ++f) {
    const long ray = point_winding(curve, g.face_samples[static_cast<std::size_t>(f)]);
    if (ray != g.diagram.winding(f)) {
      throw Error(ErrorCode::IdentityViolation,
                  "face " + std::to_string(f) + " winding " + std::to_string(g.diagram.winding(f)) +
                      " differs from ray cast " + std::to_string(ray));
    }
  }
  return r;
}

std::string to_string(SumKind kind) {
  switch (kind) {
    case SumKind::Connected: return "connected";
    case SumKind::Interior: return "interior";
    case SumKind::Tunnel: return "tunnel";
    case SumKind::InteriorLoop: return "loop";
    case SumKind::Replacement: return "replacement";
  }
  return "unknown";
}

IdentityCheck verify_sum_identity(const SumIdentityInputs& in, bool throw_on_failure) {
  IdentityCheck check;
  check.lhs = jplus_viro(in.result);
  const Integer jk = jplus_viro(in.base);
  const Integer omega_c = in.omega_c;
  auto need = [&](const std::optional<CurveDiagram>& d, const char* what) -> const CurveDiagram& {
    if (!d) throw Error(ErrorCode::ParseError, std::string("sum identity needs ") + what);
    return *d;
  };
  switch (in.kind) {
    case SumKind::Connected: {
      check.rhs = jk + jplus_viro(need(in.inserted, "the inserted curve"));
      check.description = "J+(K # K') = J+(K) + J+(K')";
      break;
    }
    case SumKind::Interior: {
      const CurveDiagram& k2 = need(in.inserted, "the inserted curve");
      check.rhs = jk + jplus_viro(k2) - 2 * omega_c * rotation_from_windings(k2);
      check.description = "J+(Kx) = J+(K) + J+(K') - 2 w_C rot(K')";
      break;
    }
    case SumKind::Tunnel: {
      const CurveDiagram& k2 = need(in.inserted, "the inserted curve");
      check.rhs = jk + jplus_viro(k2) + 2 * omega_c * (rotation_from_windings(k2) - in.omega_adj);
      check.description = "J+(K-) = J+(K) + J+(K') + 2 w_C (rot(K') - w_adj)";
      break;
    }
    case SumKind::InteriorLoop: {
      const Integer depth = in.loop_depth;
      check.rhs = jk - depth * (depth - 1 + 2 * omega_c * in.omega_adj);
      check.description = "J+(K(m+1)) = J+(K) - (m+1)(m + 2 w_C w_adj)";
      break;
    }
    case SumKind::Replacement: {
      const CurveDiagram& k2 = need(in.inserted, "the inserted curve");
      const CurveDiagram& tr = need(in.replacement, "the replacement curve");
      const CurveDiagram& tr_sum = need(in.base_sum_with_replacement, "the replacement sum");
      if (rotation_from_windings(k2) != rotation_from_windings(tr)) {
        throw Error(ErrorCode::ParseError, "replacement must keep the rotation number");
      }
      check.rhs = jplus_viro(tr_sum) + (jplus_viro(k2) - jplus_viro(tr));
      check.description = "J+(Kx) = J+(Kx_tr) + (J+(K') - J+(K'_tr))";
      break;
    }
  }
  check.holds = check.lhs == check.rhs;
  if (!check.holds && throw_on_failure) {
    throw Error(ErrorCode::IdentityViolation, to_string(in.kind) + " sum identity fails: " +
                                                  check.lhs.get_str() + " != " + check.rhs.get_str());
  }
  return check;
}

}  // namespace jplus
