#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jplus/diagram.hpp"

namespace jplus {

enum class MoveKind {
  DirectTangencyPositive,
  DirectTangencyNegative,
  InverseTangencyPositive,
  InverseTangencyNegative,
  TriplePoint,
};

std::string to_string(MoveKind kind);

// Positive tangencies name a face and two darts on its boundary (the same
// dart twice means two spots on one dart, in dart order). Negative tangencies
// name a bigon face and triple points a triangle face.
struct MoveSite {
  MoveKind kind = MoveKind::DirectTangencyPositive;
  int face = -1;
  std::array<int, 2> darts{-1, -1};
  int triple_case = 0;  // 1..4 by how many triangle sides run with the curve

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

struct MoveOutcome {
  CurveDiagram diagram;
  Integer delta_jplus;
  // Label multisets expected after the move, derived from the site alone.
  std::vector<long> predicted_windings;
  std::vector<long> predicted_indices;
  // Positive tangencies: the bigon between the two new crossings.
  int created_bigon = -1;
};

std::vector<MoveSite> enumerate_moves(const CurveDiagram& d);

// Throws IllegalSite for a site that does not fit the diagram, and
// IdentityViolation when the rebuilt labels disagree with the prediction.
MoveOutcome apply_move(const CurveDiagram& d, const MoveSite& site);

struct TraceStep {
  MoveSite site;
  Integer delta_jplus;
  Integer running_jplus;
  int crossings = 0;
};

struct HomotopyTrace {
  CurveDiagram initial;
  CurveDiagram final_diagram;
  std::vector<TraceStep> steps;
  std::uint64_t seed = 0;
  long direct_positive = 0;  // d+ : direct tangencies that add crossings
  long direct_negative = 0;  // d- : direct tangencies that remove them
};

struct WalkOptions {
  int max_crossings = 64;
  bool allow_direct = true;
  bool allow_inverse = true;
  bool allow_triple = true;
};

// The walk cap: JPLUS_MAX_CROSSINGS when set to a positive integer, else 64.
int default_max_crossings();
WalkOptions default_walk_options();

// Seeded walk: each step picks a move family uniformly among those with legal
// sites, then a site uniformly. Positive tangencies are dropped at the cap.
// Every step is checked against Viro's formula and the rotation number.
HomotopyTrace random_homotopy(const CurveDiagram& d, std::size_t steps, std::uint64_t seed,
                              const WalkOptions& options = default_walk_options());

}  // namespace jplus
