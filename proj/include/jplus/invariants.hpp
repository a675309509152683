#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jplus/diagram.hpp"

namespace jplus {

struct InvariantReport {
  int n = 0;
  Integer rot_combinatorial;
  std::optional<long> rot_geometric;
  Integer jplus;
  std::vector<long> windings;  // per face id
  std::vector<long> indices;   // per crossing id
  int outer_face = 0;
  Integer arnold_slack;        // jplus - (-n^2 - n)
  std::string gauss_code;
};

// 1 + n - sum over faces of w^2 + sum over crossings of ind^2.
Integer jplus_viro(const CurveDiagram& d);
// The same value in the form 1 - sum w^2 + sum (1 + ind^2).
Integer jplus_viro_alternate(const CurveDiagram& d);
// Sum of face windings minus sum of crossing indices.
Integer rotation_from_windings(const CurveDiagram& d);
// Lower bound -n^2 - n on J+ for n crossings.
Integer arnold_bound(int n);

InvariantReport report(const CurveDiagram& d);
// Geometric input: additionally checks the turning number against the
// winding data and every face winding against ray casting.
InvariantReport report(const PolylineCurve& curve);

enum class SumKind { Connected, Interior, Tunnel, InteriorLoop, Replacement };

// Inputs of one sum identity; every J+ and rotation on the right-hand side is
// recomputed from the diagrams rather than trusted.
struct SumIdentityInputs {
  SumKind kind = SumKind::Interior;
  CurveDiagram base;              // K
  std::optional<CurveDiagram> inserted;  // K' (already oriented for the sum)
  std::optional<CurveDiagram> replacement;  // K'_tr for the replacement identity
  std::optional<CurveDiagram> base_sum_with_replacement;  // interior sum of K and K'_tr
  long omega_c = 0;               // winding of the target face in K
  long omega_adj = 0;             // +1 or -1
  int loop_depth = 0;             // nested loop count for InteriorLoop
  CurveDiagram result;
};

struct IdentityCheck {
  bool holds = false;
  Integer lhs;
  Integer rhs;
  std::string description;
};

// Throws IdentityViolation with both sides when `throw_on_failure` is set.
IdentityCheck verify_sum_identity(const SumIdentityInputs& in, bool throw_on_failure = true);

std::string to_string(SumKind kind);

}  // namespace jplus
