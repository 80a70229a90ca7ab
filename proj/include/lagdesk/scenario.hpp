#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "lagdesk/degrees.hpp"
#include "lagdesk/flathomology.hpp"

namespace lagdesk {

// Analytic normal data for a positive-dimensional critical component in graph
// mode: the level it sits at and the normal Hessian at a representative point
// (size = dim M - dim C, nondegenerate). Levels with several components take
// one hint per component, listed in order of smallest vertex id.
struct ComponentHint {
  Rat level;
  Mat hessian_normal;
};

// Half-open verification window [a, b); a may be -inf and b may be +inf.
struct Window {
  RatX a, b;
};

// One verification job. Exactly one mode is populated: graph mode carries two
// PL functions on the manifold (the difference drives everything); component
// mode carries explicit intersection-component records and only supports the
// full-window right-hand side.
struct Scenario {
  std::string name = "scenario";
  CellComplex manifold = CellComplex::from_cells({0}, {{}});
  // Builtin metadata kept from parsing so reports can name the manifold.
  std::string manifold_desc;
  bool graph_mode = true;
  PLFunction phi1, phi2;                      // graph mode
  std::vector<ComponentHint> hints;           // graph mode
  std::vector<CleanComponentRecord> records;  // component mode
  std::vector<Window> windows;
  std::vector<std::string> tasks;  // subset of {"clean", "cohlagr"}
  uint64_t seed = 0;
};

// Parses the versioned JSON scenario format. Rationals are "p/q" strings (or
// plain integers); window endpoints also accept "-inf"/"inf". Errors:
// BadScenario for structural problems, BadWindow for a >= b windows, plus
// whatever the referenced constructors raise.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

// Small CLI file formats sharing the same literal conventions.

// Three Lagrangian frames in one symplectic space (inertia-index input).
struct FrameTriple {
  SymplecticSpace space;
  std::vector<LagrangianFrame> frames;  // exactly 3
};
FrameTriple load_frames(const std::string& path);

// One or two path-lifts based at the fiber; a missing second lift means the
// constant lift. Segments are (theta, start, end) frame triples.
struct PathPair {
  SymplecticSpace space;
  std::vector<PathLift> lifts;  // one or two
};
PathPair load_paths(const std::string& path);

// Cell complex from a builtin spec or an explicit dims/boundary literal.
CellComplex load_complex(const std::string& path);

// PL function file (vertex values or a named profile) against a complex.
PLFunction load_plfunction(const std::string& path, const CellComplex& complex);

}  // namespace lagdesk
