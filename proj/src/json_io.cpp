#include "jplus/json_io.hpp"

#include <cmath>

namespace jplus {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) bad("non-finite coordinate");
    return Rational(d);  // exact binary value
  }
  bad("coordinate must be a number or a rational string");
}

Json long_list(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

std::vector<long> long_list_from(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(x.get<long>());
  return out;
}

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::DirectTangencyPositive: return "direct_tangency_positive";
    case MoveKind::DirectTangencyNegative: return "direct_tangency_negative";
    case MoveKind::InverseTangencyPositive: return "inverse_tangency_positive";
    case MoveKind::InverseTangencyNegative: return "inverse_tangency_negative";
    case MoveKind::TriplePoint: return "triple_point";
  }
  return "";
}

MoveKind kind_from(const std::string& s) {
  for (auto k : {MoveKind::DirectTangencyPositive, MoveKind::DirectTangencyNegative,
                 MoveKind::InverseTangencyPositive, MoveKind::InverseTangencyNegative,
                 MoveKind::TriplePoint}) {
    if (s == kind_name(k)) return k;
  }
  bad("unknown move kind '" + s + "'");
}

}  // namespace

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad("bad integer '" + j.get<std::string>() + "'");
    }
  }
  bad("expected an integer");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const PolylineCurve& curve) {
  Json vs = Json::array();
  for (const auto& p : curve.vertices) vs.push_back({format_rational(p.x), format_rational(p.y)});
  return Json{{"vertices", vs}};
}

PolylineCurve curve_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("'vertices' must be an array");
  PolylineCurve c;
  for (const auto& v : vs) {
    if (!v.is_array() || v.size() != 2) bad("each vertex must be a pair [x, y]");
    c.vertices.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
  }
  return c;
}

Json to_json(const CurveDiagram& d) {
  Json j;
  j["gauss"] = to_gauss_code(d).to_string();
  j["sequence"] = d.sequence();
  Json signs = Json::array();
  for (bool s : d.signs()) signs.push_back(s ? "+" : "-");
  j["signs"] = signs;
  j["outer_dart"] = d.outer_dart();
  j["outer_face"] = d.outer_face();
  Json half_edges = Json::array();
  for (int dart = 0; dart < d.dart_count(); ++dart) {
    half_edges.push_back({{"dart", dart},
                          {"arc", dart_arc(dart)},
                          {"forward", dart_forward(dart)},
                          {"twin", dart_twin(dart)},
                          {"next_in_face", d.next_in_face(dart)},
                          {"face", d.face_of_dart(dart)}});
  }
  j["half_edges"] = half_edges;
  Json faces = Json::array();
  for (int f = 0; f < d.face_count(); ++f) {
    faces.push_back({{"id", f},
                     {"boundary", d.face(f).boundary},
                     {"winding", d.winding(f)},
                     {"outer", d.face(f).is_outer}});
  }
  j["faces"] = faces;
  Json crossings = Json::array();
  for (const auto& c : d.crossings()) {
    crossings.push_back({{"id", c.id},
                         {"visits", c.visits},
                         {"positive", c.positive},
                         {"ends", c.ends},
                         {"corner_faces", c.corner_faces},
                         {"index", d.index(c.id)}});
  }
  j["crossings"] = crossings;
  return j;
}

CurveDiagram diagram_from_json(const Json& j) {
  CurveDiagram d;
  if (j.contains("sequence")) {
    std::vector<int> sequence;
    for (const auto& v : field(j, "sequence")) sequence.push_back(v.get<int>());
    std::vector<bool> positive;
    for (const auto& s : field(j, "signs")) {
      if (s == "+") {
        positive.push_back(true);
      } else if (s == "-") {
        positive.push_back(false);
      } else {
        bad("signs must be \"+\" or \"-\"");
      }
    }
    d = build_labeled(sequence, positive, int_field(j, "outer_dart"));
  } else if (j.contains("gauss")) {
    d = from_gauss_code(GaussCode::parse(field(j, "gauss").get<std::string>()));
  } else {
    bad("a diagram needs 'sequence' or 'gauss'");
  }
  // Derived tables, when supplied, must agree with the rebuilt ones.
  const Json rebuilt = to_json(d);
  for (const char* key : {"gauss", "outer_face", "half_edges", "faces", "crossings"}) {
    if (j.contains(key) && j.at(key) != rebuilt.at(key)) {
      bad(std::string("field '") + key + "' does not match the diagram");
    }
  }
  return d;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.n;
  j["rot_combinatorial"] = integer_json(r.rot_combinatorial);
  j["rot_geometric"] = r.rot_geometric ? Json(*r.rot_geometric) : Json(nullptr);
  j["jplus"] = integer_json(r.jplus);
  j["windings"] = long_list(r.windings);
  j["indices"] = long_list(r.indices);
  std::vector<long> w = r.windings;
  std::vector<long> i = r.indices;
  std::sort(w.begin(), w.end());
  std::sort(i.begin(), i.end());
  j["winding_multiset"] = long_list(w);
  j["index_multiset"] = long_list(i);
  j["outer_face"] = r.outer_face;
  j["arnold_slack"] = integer_json(r.arnold_slack);
  j["gauss"] = r.gauss_code;
  return j;
}

InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  r.n = int_field(j, "n");
  r.rot_combinatorial = integer_from_json(field(j, "rot_combinatorial"));
  const Json& rg = field(j, "rot_geometric");
  if (!rg.is_null()) r.rot_geometric = rg.get<long>();
  r.jplus = integer_from_json(field(j, "jplus"));
  r.windings = long_list_from(field(j, "windings"));
  r.indices = long_list_from(field(j, "indices"));
  r.outer_face = int_field(j, "outer_face");
  r.arnold_slack = integer_from_json(field(j, "arnold_slack"));
  r.gauss_code = field(j, "gauss").get<std::string>();
  return r;
}

Json to_json(const MoveSite& s) {
  return Json{{"kind", kind_name(s.kind)},
              {"face", s.face},
              {"darts", s.darts},
              {"triple_case", s.triple_case}};
}

MoveSite site_from_json(const Json& j) {
  MoveSite s;
  s.kind = kind_from(field(j, "kind").get<std::string>());
  s.face = int_field(j, "face");
  if (j.contains("darts")) s.darts = j.at("darts").get<std::array<int, 2>>();
  if (j.contains("triple_case")) s.triple_case = int_field(j, "triple_case");
  return s;
}

Json to_json(const HomotopyTrace& t) {
  Json j;
  j["seed"] = t.seed;
  j["initial"] = to_json(t.initial);
  j["initial_jplus"] = integer_json(jplus_viro(t.initial));
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"site", to_json(s.site)},
                     {"delta_jplus", integer_json(s.delta_jplus)},
                     {"running_jplus", integer_json(s.running_jplus)},
                     {"crossings", s.crossings}});
  }
  j["steps"] = steps;
  j["d_plus"] = t.direct_positive;
  j["d_minus"] = t.direct_negative;
  j["final"] = to_json(t.final_diagram);
  return j;
}

HomotopyTrace trace_from_json(const Json& j) {
  HomotopyTrace t;
  t.seed = field(j, "seed").get<std::uint64_t>();
  t.initial = diagram_from_json(field(j, "initial"));
  for (const auto& s : field(j, "steps")) {
    t.steps.push_back({site_from_json(field(s, "site")), integer_from_json(field(s, "delta_jplus")),
                       integer_from_json(field(s, "running_jplus")), int_field(s, "crossings")});
  }
  t.direct_positive = field(j, "d_plus").get<long>();
  t.direct_negative = field(j, "d_minus").get<long>();
  t.final_diagram = diagram_from_json(field(j, "final"));
  return t;
}

Json to_json(const SumSpec& s) {
  return Json{{"base", to_json(s.base)},
              {"face", s.face},
              {"arc", s.arc},
              {"inserted", to_json(s.inserted)},
              {"inserted_arc", s.inserted_arc}};
}

SumSpec sum_spec_from_json(const Json& j) {
  SumSpec s;
  s.base = curve_from_json(field(j, "base"));
  s.face = int_field(j, "face");
  s.arc = int_field(j, "arc");
  s.inserted = curve_from_json(field(j, "inserted"));
  s.inserted_arc = int_field(j, "inserted_arc");
  return s;
}

Json to_json(const PredictedResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["curve"] = r.curve ? to_json(*r.curve) : Json(nullptr);
  j["diagram"] = to_json(r.diagram);
  j["predicted_jplus"] = integer_json(r.predicted_jplus);
  j["predicted_rot"] = r.predicted_rot ? integer_json(*r.predicted_rot) : Json(nullptr);
  j["jplus"] = integer_json(jplus_viro(r.diagram));
  j["rot"] = integer_json(rotation_from_windings(r.diagram));
  j["formula_tag"] = r.formula_tag;
  j["inserted_flipped"] = r.inserted_flipped;
  j["unbounded_face"] = r.unbounded_face;
  j["omega_c"] = r.omega_c;
  j["omega_adj"] = r.omega_adj;
  if (r.kind == SumKind::InteriorLoop) j["loop_depth"] = r.loop_depth;
  return j;
}

CurveDiagram any_diagram_from_json(const Json& j, std::optional<PolylineCurve>* geometry) {
  if (j.is_object() && j.contains("vertices")) {
    PolylineCurve c = curve_from_json(j);
    CurveDiagram d = trace_diagram(validate_curve(c));
    if (geometry != nullptr) *geometry = std::move(c);
    return d;
  }
  if (geometry != nullptr) geometry->reset();
  return diagram_from_json(j);
}

}  // namespace jplus
