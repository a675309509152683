#include "jplus/svg.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "jplus/diagram.hpp"

namespace jplus {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// Typographic minus for negative labels.
std::string label(long v) {
  return v < 0 ? "−" + std::to_string(-v) : std::to_string(v);
}

struct Frame {
  double min_x = 0, min_y = 0, scale = 1, margin = 0, size = 0;

  double x(const Rational& v) const { return margin + (v.get_d() - min_x) * scale; }
  // SVG y grows downward.
  double y(const Rational& v) const { return size - margin - (v.get_d() - min_y) * scale; }
};

Frame frame_for(const PolylineCurve& c, int size) {
  double lo_x = c.vertices[0].x.get_d(), hi_x = lo_x;
  double lo_y = c.vertices[0].y.get_d(), hi_y = lo_y;
  for (const auto& p : c.vertices) {
    lo_x = std::min(lo_x, p.x.get_d());
    hi_x = std::max(hi_x, p.x.get_d());
    lo_y = std::min(lo_y, p.y.get_d());
    hi_y = std::max(hi_y, p.y.get_d());
  }
  Frame f;
  f.size = size;
  f.margin = size * 0.12;
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  f.scale = span > 0 ? (size - 2 * f.margin) / span : 1.0;
  // centre the shorter side
  f.min_x = lo_x - ((span - (hi_x - lo_x)) / 2);
  f.min_y = lo_y - ((span - (hi_y - lo_y)) / 2);
  return f;
}

}  // namespace

LabelLayers parse_layers(const std::string& text) {
  LabelLayers l;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item == "none") continue;
    if (item == "all") {
      l = {true, true, true, true};
    } else if (item == "winding") {
      l.winding = true;
    } else if (item == "index") {
      l.index = true;
    } else if (item == "rotation") {
      l.rotation = true;
    } else if (item == "orientation" || item == "orientation-arrows") {
      l.orientation = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown label layer '" + item + "'");
    }
  }
  return l;
}

std::string render_svg(const RenderSpec& spec) {
  if (!spec.curve) throw Error(ErrorCode::NoGeometry, "rendering needs a polyline curve");
  const PolylineCurve& c = *spec.curve;
  const GeometricDiagram g = trace_geometric(validate_curve(c));
  const Frame f = frame_for(c, spec.size);
  const int font = std::max(10, spec.size / 32);

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size << "\" height=\""
    << spec.size << "\" viewBox=\"0 0 " << spec.size << ' ' << spec.size << "\">\n";
  if (spec.layers.orientation) {
    o << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#222\"/></marker></defs>\n";
  }
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  o << "<path id=\"curve\" d=\"";
  for (std::size_t i = 0; i < c.size(); ++i) {
    o << (i == 0 ? "M" : " L") << num(f.x(c.vertices[i].x)) << ',' << num(f.y(c.vertices[i].y));
  }
  o << " Z\" fill=\"none\" stroke=\"#222\" stroke-width=\"" << num(spec.stroke)
    << "\" stroke-linejoin=\"round\"/>\n";

  if (spec.layers.orientation) {
    // One arrow at the midpoint of every edge.
    o << "<g id=\"orientation\">\n";
    for (std::size_t e = 0; e < c.size(); ++e) {
      const Point& a = c.vertex(e);
      const Point& b = c.vertex(e + 1);
      const Point mid = Rational(1, 2) * (a + b);
      o << "<path d=\"M" << num(f.x(a.x)) << ',' << num(f.y(a.y)) << " L" << num(f.x(mid.x)) << ','
        << num(f.y(mid.y)) << "\" fill=\"none\" stroke=\"none\" marker-end=\"url(#arrow)\"/>\n";
    }
    o << "</g>\n";
  }

  const CurveDiagram& d = g.diagram;
  if (spec.layers.winding) {
    o << "<g id=\"winding\" font-family=\"sans-serif\" font-size=\"" << font
      << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#1f4e9c\">\n";
    for (int face = 0; face < d.face_count(); ++face) {
      const Point& p = g.face_samples[static_cast<std::size_t>(face)];
      o << "<text id=\"face-" << face << "\" x=\"" << num(f.x(p.x)) << "\" y=\"" << num(f.y(p.y))
        << "\">" << label(d.winding(face)) << "</text>\n";
    }
    o << "</g>\n";
  }
  if (spec.layers.index) {
    o << "<g id=\"index\" font-family=\"serif\" font-size=\"" << font
      << "\" font-weight=\"bold\" font-style=\"italic\" fill=\"#9c1f1f\">\n";
    for (int x = 0; x < d.crossing_count(); ++x) {
      const Point& p = g.crossing_locations[static_cast<std::size_t>(x)];
      o << "<circle cx=\"" << num(f.x(p.x)) << "\" cy=\"" << num(f.y(p.y))
        << "\" r=\"3\"/><text id=\"crossing-" << x << "\" x=\"" << num(f.x(p.x) + 5) << "\" y=\""
        << num(f.y(p.y) - 5) << "\">" << label(d.index(x)) << "</text>\n";
    }
    o << "</g>\n";
  }
  if (spec.layers.rotation) {
    o << "<text id=\"rotation\" x=\"8\" y=\"" << font + 4 << "\" font-family=\"sans-serif\" font-size=\""
      << font << "\">rot = " << label(turning_number(c)) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace jplus
