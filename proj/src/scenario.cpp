#include "lagdesk/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lagdesk {
namespace {

using nlohmann::json;

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorCode::BadScenario, "not valid JSON");
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::BadInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void check_version(const json& j) {
  require(j.is_object() && j.contains("format_version"), ErrorCode::BadScenario,
          "missing format_version");
  require(j.at("format_version").is_number_integer() && j.at("format_version").get<long>() == 1,
          ErrorCode::BadScenario, "unsupported format_version");
}

Rat jrat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  require(j.is_string(), ErrorCode::BadScenario, "rational must be an integer or a p/q string");
  return parse_rat(j.get<std::string>());
}

RatX jratx(const json& j) {
  if (j.is_number_integer()) return RatX(Rat(j.get<long>()));
  require(j.is_string(), ErrorCode::BadScenario, "endpoint must be an integer or a string");
  return parse_ratx(j.get<std::string>());
}

std::vector<Rat> jratvec(const json& j) {
  require(j.is_array(), ErrorCode::BadScenario, "expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(jrat(e));
  return out;
}

Mat jmat(const json& j) {
  require(j.is_array() && !j.empty(), ErrorCode::BadScenario, "expected a matrix");
  size_t cols = 0;
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : j) {
    rows.push_back(jratvec(r));
    if (cols == 0) cols = rows.back().size();
    require(cols == rows.back().size() && cols > 0, ErrorCode::BadScenario, "ragged matrix");
  }
  Mat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < cols; ++k) m.at(i, k) = rows[i][k];
  return m;
}

Mat jcolvec(const json& j) {
  std::vector<Rat> v = jratvec(j);
  Mat m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

struct BuiltinInfo {
  std::string kind;  // "point", "circle", "torus", "sphere2", "literal"
  std::vector<size_t> args;
};

CellComplex complex_from_json(const json& j, BuiltinInfo& info) {
  require(j.is_object(), ErrorCode::BadScenario, "manifold must be an object");
  if (j.contains("builtin")) {
    info.kind = j.at("builtin").get<std::string>();
    if (j.contains("args"))
      for (const auto& a : j.at("args")) info.args.push_back(a.get<size_t>());
    if (info.kind == "point") {
      require(info.args.empty(), ErrorCode::BadScenario, "point takes no args");
      return CellComplex::from_cells({0}, {{}});
    }
    if (info.kind == "circle") {
      require(info.args.size() == 1, ErrorCode::BadScenario, "circle takes one arg");
      return circle(info.args[0]);
    }
    if (info.kind == "torus") {
      require(info.args.size() == 2, ErrorCode::BadScenario, "torus takes two args");
      return torus(info.args[0], info.args[1]);
    }
    if (info.kind == "sphere2") {
      require(info.args.size() == 1, ErrorCode::BadScenario, "sphere2 takes one arg");
      return sphere2(info.args[0]);
    }
    fail(ErrorCode::BadScenario, "unknown builtin " + info.kind);
  }
  require(j.contains("dims") && j.contains("boundary"), ErrorCode::BadScenario,
          "manifold needs builtin or dims/boundary");
  info.kind = "literal";
  std::vector<size_t> dims = j.at("dims").get<std::vector<size_t>>();
  std::vector<std::vector<size_t>> bnd = j.at("boundary").get<std::vector<std::vector<size_t>>>();
  return CellComplex::from_cells(std::move(dims), std::move(bnd));
}

// Tent profile with peak 1 at vertex 0 and valley -1 at vertex n/2 (the PL
// stand-in for cos(2 pi i / n)): 1 - 4 min(i, n-i)/n.
Rat profile_value(size_t i, size_t n) {
  long w = static_cast<long>(std::min(i, n - i));
  return Rat(1) - Rat(4 * w, static_cast<long>(n));
}

PLFunction phi_from_json(const json& j, const CellComplex& manifold, const BuiltinInfo& info) {
  require(j.is_object() && j.contains("kind"), ErrorCode::BadScenario,
          "function spec needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  size_t nv = manifold.num_vertices();
  if (kind == "constant") {
    return pl_from_vertex_values(manifold, std::vector<Rat>(nv, jrat(j.at("value"))));
  }
  if (kind == "vertex_values") {
    return pl_from_vertex_values(manifold, jratvec(j.at("values")));
  }
  if (kind == "cosine") {
    require(info.kind == "circle", ErrorCode::BadScenario, "cosine needs a circle manifold");
    Rat amp = j.contains("amplitude") ? jrat(j.at("amplitude")) : Rat(1);
    std::vector<Rat> v(nv);
    for (size_t i = 0; i < nv; ++i) v[i] = amp * profile_value(i, nv);
    return pl_from_vertex_values(manifold, v);
  }
  if (kind == "height_sum") {
    require(info.kind == "torus", ErrorCode::BadScenario, "height_sum needs a torus manifold");
    std::vector<Rat> amps = jratvec(j.at("amplitudes"));
    require(amps.size() == 2, ErrorCode::BadScenario, "height_sum takes two amplitudes");
    size_t n1 = info.args[0], n2 = info.args[1];
    std::vector<Rat> v(n1 * n2);
    for (size_t i = 0; i < n1; ++i)
      for (size_t k = 0; k < n2; ++k)
        v[i * n2 + k] = amps[0] * profile_value(i, n1) + amps[1] * profile_value(k, n2);
    return pl_from_vertex_values(manifold, v);
  }
  fail(ErrorCode::BadScenario, "unknown function kind " + kind);
}

LagrangianGerm germ_from_json(const json& j) {
  require(j.is_object() && j.contains("m"), ErrorCode::BadScenario, "germ needs m");
  size_t m = j.at("m").get<size_t>();
  SymplecticSpace sp(m);
  Mat x = jcolvec(j.at("x"));
  Mat xi = jcolvec(j.at("xi"));
  LagrangianFrame tangent = j.contains("graph")
                                ? graph_of_symmetric(sp, jmat(j.at("graph")))
                                : lagrangian_from_frame(sp, jmat(j.at("frame")));
  LagrangianGerm g{m, x, xi, tangent, jrat(j.at("f")), std::nullopt, std::nullopt};
  if (j.contains("shift")) g.shift = jrat(j.at("shift"));
  validate_germ(g);
  return g;
}

CleanComponentRecord record_from_json(const json& j) {
  require(j.is_object(), ErrorCode::BadScenario, "component must be an object");
  LagrangianGerm g1 = germ_from_json(j.at("germ1"));
  LagrangianGerm g2 = germ_from_json(j.at("germ2"));
  Rat f21 = j.contains("f21") ? jrat(j.at("f21"))
                              : Rat(g2.primitive_value - g1.primitive_value);
  CleanComponentRecord rec{j.at("dim_c").get<size_t>(), j.at("betti").get<std::vector<long>>(),
                           g1, g2, f21, j.at("s").get<long>()};
  validate_component(rec);
  return rec;
}

Scenario scenario_from_json(const json& j) {
  check_version(j);
  Scenario sc;
  if (j.contains("name")) sc.name = j.at("name").get<std::string>();
  require(j.contains("manifold"), ErrorCode::BadScenario, "missing manifold");
  BuiltinInfo info;
  sc.manifold = complex_from_json(j.at("manifold"), info);
  sc.manifold_desc = info.kind;
  for (size_t a : info.args) sc.manifold_desc += " " + std::to_string(a);

  bool graph = j.contains("phi1") || j.contains("phi2");
  bool comps = j.contains("components");
  require(graph != comps, ErrorCode::BadScenario,
          "exactly one of {phi1/phi2, components} must be present");
  sc.graph_mode = graph;
  if (graph) {
    require(j.contains("phi1") && j.contains("phi2"), ErrorCode::BadScenario,
            "graph mode needs both phi1 and phi2");
    sc.phi1 = phi_from_json(j.at("phi1"), sc.manifold, info);
    sc.phi2 = phi_from_json(j.at("phi2"), sc.manifold, info);
    if (j.contains("component_hints")) {
      for (const auto& h : j.at("component_hints"))
        sc.hints.push_back({jrat(h.at("level")), jmat(h.at("hessian_normal"))});
    }
  } else {
    require(j.at("components").is_array() && !j.at("components").empty(),
            ErrorCode::BadScenario, "components must be a nonempty array");
    for (const auto& c : j.at("components")) sc.records.push_back(record_from_json(c));
  }

  require(j.contains("windows") && j.at("windows").is_array(), ErrorCode::BadScenario,
          "missing windows");
  for (const auto& w : j.at("windows")) {
    require(w.is_array() && w.size() == 2, ErrorCode::BadScenario,
            "window must be a [a, b] pair");
    Window win{jratx(w.at(0)), jratx(w.at(1))};
    require(win.a < win.b, ErrorCode::BadWindow, "window needs a < b");
    sc.windows.push_back(win);
  }
  require(!sc.windows.empty(), ErrorCode::BadScenario, "at least one window required");

  if (j.contains("tasks")) {
    for (const auto& t : j.at("tasks")) {
      std::string name = t.get<std::string>();
      require(name == "clean" || name == "cohlagr", ErrorCode::BadScenario,
              "unknown task " + name);
      sc.tasks.push_back(name);
    }
  }
  if (sc.tasks.empty()) sc.tasks.push_back("clean");
  if (j.contains("seed")) sc.seed = j.at("seed").get<uint64_t>();
  return sc;
}

// nlohmann type errors carry json-internal wording; rewrap so callers see the
// stable scenario error code with the original detail attached.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::BadScenario, e.what());
  }
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  return guarded([&] { return scenario_from_json(parse_json_text(json_text)); });
}

Scenario load_scenario(const std::string& path) {
  return guarded([&] { return scenario_from_json(load_json(path)); });
}

FrameTriple load_frames(const std::string& path) {
  return guarded([&]() -> FrameTriple {
    json j = load_json(path);
    check_version(j);
    require(j.contains("half_dim"), ErrorCode::BadScenario, "missing half_dim");
    SymplecticSpace sp(j.at("half_dim").get<size_t>());
    FrameTriple out{sp, {}};
    require(j.contains("frames") && j.at("frames").is_array() && j.at("frames").size() == 3,
            ErrorCode::BadScenario, "frames must list exactly three matrices");
    for (const auto& f : j.at("frames"))
      out.frames.push_back(lagrangian_from_frame(sp, jmat(f)));
    return out;
  });
}

PathPair load_paths(const std::string& path) {
  return guarded([&]() -> PathPair {
    json j = load_json(path);
    check_version(j);
    require(j.contains("half_dim"), ErrorCode::BadScenario, "missing half_dim");
    SymplecticSpace sp(j.at("half_dim").get<size_t>());
    PathPair out{sp, {}};
    require(j.contains("lifts") && j.at("lifts").is_array() && !j.at("lifts").empty() &&
                j.at("lifts").size() <= 2,
            ErrorCode::BadScenario, "lifts must list one or two paths");
    for (const auto& l : j.at("lifts")) {
      std::vector<ChartSegment> segs;
      for (const auto& s : l.at("segments")) {
        segs.emplace_back(lagrangian_from_frame(sp, jmat(s.at("theta"))),
                          lagrangian_from_frame(sp, jmat(s.at("start"))),
                          lagrangian_from_frame(sp, jmat(s.at("end"))));
      }
      out.lifts.push_back(PathLift(sp, std::move(segs)));
    }
    return out;
  });
}

CellComplex load_complex(const std::string& path) {
  return guarded([&] {
    json j = load_json(path);
    check_version(j);
    BuiltinInfo info;
    return complex_from_json(j, info);
  });
}

PLFunction load_plfunction(const std::string& path, const CellComplex& complex) {
  return guarded([&] {
    json j = load_json(path);
    check_version(j);
    // Standalone function files describe the complex only through its vertex
    // count, so the circle-shaped profile is allowed against any cycle-ordered
    // vertex numbering.
    BuiltinInfo info{"circle", {complex.num_vertices()}};
    return phi_from_json(j, complex, info);
  });
}

}  // namespace lagdesk
