#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "jplus/corpus.hpp"
#include "jplus/json_io.hpp"
#include "jplus/svg.hpp"

using namespace jplus;

namespace {

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;
  std::string labels;
  std::string filter;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

// A curve document, a diagram document, or a bare Gauss code.
struct Input {
  CurveDiagram diagram;
  std::optional<PolylineCurve> curve;
};

Input load(const std::string& path) {
  const std::string text = read_all(path);
  Input in;
  if (looks_like_json(text)) {
    in.diagram = any_diagram_from_json(parse_json(text), &in.curve);
  } else {
    in.diagram = from_gauss_code(GaussCode::parse(text));
  }
  return in;
}

void emit(const Globals& g, const std::string& body) {
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream o(g.out, std::ios::binary);
  if (!o) throw Error(ErrorCode::ParseError, "cannot write '" + g.out + "'");
  o << body;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream o;
  o << "crossings: " << r.n << '\n'
    << "J+: " << r.jplus << '\n'
    << "rot (windings): " << r.rot_combinatorial << '\n';
  if (r.rot_geometric) o << "rot (turning): " << *r.rot_geometric << '\n';
  o << "face windings: " << join(r.windings) << '\n'
    << "crossing indices: " << join(r.indices) << '\n'
    << "unbounded face: " << r.outer_face << '\n'
    << "arnold slack: " << r.arnold_slack << '\n'
    << "gauss: " << r.gauss_code << '\n';
  return o.str();
}

InvariantReport report_of(const Input& in) {
  return in.curve ? report(*in.curve) : report(in.diagram);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string site_text(const MoveSite& s) {
  std::ostringstream o;
  o << to_string(s.kind) << " face " << s.face;
  if (s.kind == MoveKind::DirectTangencyPositive || s.kind == MoveKind::InverseTangencyPositive) {
    o << " darts " << s.darts[0] << ',' << s.darts[1];
  }
  if (s.kind == MoveKind::TriplePoint) o << " case " << s.triple_case;
  return o.str();
}

// Checks the identity and renders the construction result.
std::string sum_output(const Globals& g, const PredictedResult& r) {
  const IdentityCheck check = verify_sum_identity(identity_inputs(r));
  if (r.predicted_rot && rotation_from_windings(r.diagram) != *r.predicted_rot) {
    throw Error(ErrorCode::IdentityViolation, "rotation number differs from the prediction");
  }
  if (g.format == "json") {
    Json j = to_json(r);
    j["identity"] = {{"description", check.description},
                     {"lhs", integer_json(check.lhs)},
                     {"rhs", integer_json(check.rhs)},
                     {"holds", check.holds}};
    return dump(j);
  }
  std::ostringstream o;
  o << to_string(r.kind) << " sum\n"
    << "formula: " << r.formula_tag << '\n'
    << "predicted J+: " << r.predicted_jplus << '\n'
    << "J+: " << jplus_viro(r.diagram) << '\n'
    << "rot: " << rotation_from_windings(r.diagram) << '\n'
    << "identity: " << check.description << " (" << check.lhs << " = " << check.rhs << ")\n"
    << "gauss: " << to_gauss_code(r.diagram).to_string() << '\n';
  if (r.unbounded_face && r.kind == SumKind::InteriorLoop) o << "note: loop added to the unbounded face\n";
  if (r.inserted_flipped) o << "note: inserted curve reversed\n";
  return o.str();
}

OrientationMode mode_from(const std::string& s) {
  if (s == "strict") return OrientationMode::Strict;
  if (s == "flip") return OrientationMode::Flip;
  if (s == "bridge") return OrientationMode::Bridge;
  throw Error(ErrorCode::ParseError, "unknown orientation mode '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"J+ invariant of generic plane curves"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random walks")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--labels", g.labels, "Label layers for render: winding,index,rotation,orientation");
  app.add_option("--filter", g.filter, "Run only verify checks whose name contains this");

  std::function<std::string()> action;

  // ingest
  std::string file;
  auto* ingest = app.add_subcommand("ingest", "Validate a curve and print its labelled diagram");
  ingest->add_option("input", file, "Curve/diagram JSON or Gauss code ('-' for stdin)")->required();
  ingest->callback([&] {
    action = [&] {
      const Input in = load(file);
      if (in.curve) report(*in.curve);  // cross-checks geometry against the labels
      if (g.format == "json") {
        Json j = to_json(in.diagram);
        if (in.curve) j["curve"] = to_json(*in.curve);
        return dump(j);
      }
      return report_text(report_of(in));
    };
  });

  auto* inv = app.add_subcommand("invariants", "Compute J+, rotation number and labels");
  inv->add_option("input", file)->required();
  inv->callback([&] {
    action = [&] {
      const InvariantReport r = report_of(load(file));
      return g.format == "json" ? dump(to_json(r)) : report_text(r);
    };
  });

  // construct
  int j_value = 0;
  auto* construct = app.add_subcommand("construct", "Generate a template curve");
  construct->require_subcommand(1);
  for (const char* which : {"standard", "innerloop"}) {
    auto* sub = construct->add_subcommand(which, which == std::string("standard")
                                                     ? "Circle with |J|-1 loops, or a figure eight"
                                                     : "Circle with one (|J|-1)-fold nested loop");
    sub->add_option("J", j_value)->required()->allow_extra_args(false);
    const bool standard = which == std::string("standard");
    sub->callback([&, standard] {
      action = [&, standard] {
        const PolylineCurve c = standard ? standard_curve(j_value) : inner_loop_curve(j_value);
        if (g.format == "json") return dump(to_json(c));
        return report_text(report(c));
      };
    });
  }

  // sum
  std::string base_file, inserted_file, mode = "strict";
  int face = -1, arc = 0, inserted_arc = 0, depth = 1;
  auto* sum = app.add_subcommand("sum", "Connected, interior, tunnel and loop sums");
  sum->require_subcommand(1);
  auto* conn = sum->add_subcommand("connected", "Connected sum along arcs of the unbounded faces");
  conn->add_option("first", base_file)->required();
  conn->add_option("second", inserted_file)->required();
  conn->add_option("--arc", arc, "Arc of the first curve")->capture_default_str();
  conn->add_option("--inserted-arc", inserted_arc, "Arc of the second curve")->capture_default_str();
  conn->add_option("--mode", mode, "strict, flip or bridge")->capture_default_str();
  conn->callback([&] {
    action = [&] {
      const Input a = load(base_file), b = load(inserted_file);
      const OrientationMode m = mode_from(mode);
      const PredictedResult r = a.curve && b.curve
                                    ? connected_sum(*a.curve, arc, *b.curve, inserted_arc, m)
                                    : connected_sum(a.diagram, arc, b.diagram, inserted_arc, m);
      return sum_output(g, r);
    };
  });
  for (const char* which : {"interior", "tunnel"}) {
    const bool tunnel = which == std::string("tunnel");
    auto* sub = sum->add_subcommand(which, tunnel ? "Tunnel-connected interior sum"
                                                  : "Cross-connected interior sum");
    sub->add_option("base", base_file)->required();
    sub->add_option("inserted", inserted_file)->required();
    sub->add_option("--face", face, "Bounded face of the base")->required();
    sub->add_option("--arc", arc, "Arc of that face")->required();
    sub->add_option("--inserted-arc", inserted_arc, "Arc of the inserted curve on its unbounded face")
        ->capture_default_str();
    sub->callback([&, tunnel] {
      action = [&, tunnel] {
        const Input a = load(base_file), b = load(inserted_file);
        if (a.curve && b.curve) {
          const SumSpec s{*a.curve, face, arc, *b.curve, inserted_arc};
          return sum_output(g, tunnel ? tunnel_interior_sum(s) : interior_sum(s));
        }
        const DiagramSumSpec s{a.diagram, face, arc, b.diagram, inserted_arc};
        return sum_output(g, tunnel ? tunnel_interior_sum(s) : interior_sum(s));
      };
    });
  }
  auto* loop = sum->add_subcommand("loop", "Add a nested interior loop");
  loop->add_option("base", base_file)->required();
  loop->add_option("--face", face)->required();
  loop->add_option("--arc", arc)->required();
  loop->add_option("--depth", depth, "Number of nested loops")->capture_default_str();
  loop->callback([&] {
    action = [&] {
      const Input a = load(base_file);
      return sum_output(g, a.curve ? add_interior_loop(*a.curve, face, arc, depth)
                                   : add_interior_loop(a.diagram, face, arc, depth));
    };
  });

  // move
  std::size_t steps = 100;
  long site_index = -1;
  std::string site_file;
  bool no_direct = false, no_inverse = false, no_triple = false;
  auto* move = app.add_subcommand("move", "Tangency and triple-point moves");
  move->require_subcommand(1);
  auto* list = move->add_subcommand("list", "Enumerate legal move sites");
  list->add_option("input", file)->required();
  list->callback([&] {
    action = [&] {
      const auto sites = enumerate_moves(load(file).diagram);
      if (g.format == "json") {
        Json arr = Json::array();
        for (const auto& s : sites) arr.push_back(to_json(s));
        return dump(arr);
      }
      std::string out;
      for (std::size_t i = 0; i < sites.size(); ++i) out += std::to_string(i) + ": " + site_text(sites[i]) + "\n";
      return out;
    };
  });
  auto* apply = move->add_subcommand("apply", "Apply one move");
  apply->add_option("input", file)->required();
  auto* by_index = apply->add_option("--site-index", site_index, "Index into 'move list'");
  auto* by_file = apply->add_option("--site", site_file, "Site JSON document");
  by_index->excludes(by_file);
  apply->callback([&] {
    action = [&] {
      const CurveDiagram d = load(file).diagram;
      MoveSite site;
      if (!site_file.empty()) {
        site = site_from_json(parse_json(read_all(site_file)));
      } else {
        const auto sites = enumerate_moves(d);
        if (site_index < 0 || site_index >= static_cast<long>(sites.size())) {
          throw Error(ErrorCode::IllegalSite, "site index out of range");
        }
        site = sites[static_cast<std::size_t>(site_index)];
      }
      const MoveOutcome out = apply_move(d, site);
      if (g.format == "json") {
        Json j;
        j["site"] = to_json(site);
        j["delta_jplus"] = integer_json(out.delta_jplus);
        j["jplus"] = integer_json(jplus_viro(out.diagram));
        j["diagram"] = to_json(out.diagram);
        return dump(j);
      }
      return site_text(site) + "\nJ+ change: " + out.delta_jplus.get_str() + "\n" +
             report_text(report(out.diagram));
    };
  });
  auto* walk = move->add_subcommand("walk", "Seeded random regular homotopy");
  walk->add_option("input", file)->required();
  walk->add_option("--steps", steps)->capture_default_str();
  walk->add_flag("--no-direct", no_direct, "Skip direct tangencies");
  walk->add_flag("--no-inverse", no_inverse, "Skip inverse tangencies");
  walk->add_flag("--no-triple", no_triple, "Skip triple points");
  walk->callback([&] {
    action = [&] {
      WalkOptions o = default_walk_options();
      o.allow_direct = !no_direct;
      o.allow_inverse = !no_inverse;
      o.allow_triple = !no_triple;
      const HomotopyTrace t = random_homotopy(load(file).diagram, steps, g.seed, o);
      if (g.format == "json") return dump(to_json(t));
      std::ostringstream s;
      s << "seed: " << t.seed << '\n';
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& st = t.steps[i];
        s << i << ": " << site_text(st.site) << "  dJ+ " << st.delta_jplus << "  J+ " << st.running_jplus
          << "  n " << st.crossings << '\n';
      }
      s << "d+: " << t.direct_positive << "  d-: " << t.direct_negative << '\n'
        << "J+ start " << jplus_viro(t.initial) << ", end " << jplus_viro(t.final_diagram) << '\n';
      return s.str();
    };
  });

  // render
  int size = 480;
  double stroke = 2.0;
  auto* render = app.add_subcommand("render", "SVG drawing with label layers");
  render->add_option("input", file)->required();
  render->add_option("--size", size)->capture_default_str();
  render->add_option("--stroke", stroke)->capture_default_str();
  render->callback([&] {
    action = [&] {
      const Input in = load(file);
      return render_svg(RenderSpec{in.curve, parse_layers(g.labels), size, stroke});
    };
  });

  // verify
  std::string corrupt;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the golden-value corpus");
  verify->add_option("--corrupt", corrupt, "Shift the golden value of this check (fault injection)");
  verify->add_option("--threads", threads)->capture_default_str();
  int verify_failures = 0;
  verify->callback([&] {
    action = [&] {
      const CorpusReport r = verify_corpus({g.filter, corrupt, threads});
      verify_failures = static_cast<int>(r.failed());
      if (g.format == "json") {
        Json j;
        j["total"] = r.outcomes.size();
        j["failed"] = r.failed();
        Json checks = Json::array();
        for (const auto& o : r.outcomes) {
          Json c{{"name", o.name},
                 {"expected", integer_json(o.expected)},
                 {"actual", integer_json(o.actual)},
                 {"passed", o.passed}};
          if (!o.error.empty()) c["error"] = o.error;
          checks.push_back(c);
        }
        j["checks"] = checks;
        return dump(j);
      }
      std::ostringstream s;
      for (const auto& o : r.outcomes) {
        s << (o.passed ? "PASS " : "FAIL ") << o.name;
        if (!o.passed) s << "  expected " << o.expected << ", got " << (o.error.empty() ? o.actual.get_str() : o.error);
        s << '\n';
      }
      s << r.outcomes.size() - r.failed() << '/' << r.outcomes.size() << " checks passed\n";
      return s.str();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    emit(g, action());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_internal() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return verify_failures == 0 ? 0 : 1;
}
