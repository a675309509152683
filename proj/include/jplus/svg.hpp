#pragma once

#include <optional>
#include <string>

#include "jplus/geometry.hpp"

namespace jplus {

struct LabelLayers {
  bool winding = false;
  bool index = false;
  bool rotation = false;
  bool orientation = false;  // arrow heads along the curve
};

// Parses a comma list such as "winding,index"; "all" and "none" are accepted.
// Unknown names throw ParseError.
LabelLayers parse_layers(const std::string& text);

struct RenderSpec {
  std::optional<PolylineCurve> curve;  // empty for diagram-only input
  LabelLayers layers;
  int size = 480;         // width and height in px
  double stroke = 2.0;    // curve stroke width in px
};

// Standalone SVG; identical input gives identical bytes. Throws NoGeometry
// without a curve.
std::string render_svg(const RenderSpec& spec);

}  // namespace jplus
