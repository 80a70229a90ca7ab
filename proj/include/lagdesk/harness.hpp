#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lagdesk/scenario.hpp"

namespace lagdesk {

// One intersection component after resolution: its action level, dimension,
// index, and F2 Betti numbers. Graph mode extracts these from the difference
// function; component mode takes them from the records after cross-checking
// the claimed index against the recomputed one.
struct ResolvedComponent {
  Rat f21;
  size_t dim_c = 0;
  long s = 0;
  std::vector<long> betti;
};

std::vector<ResolvedComponent> resolve_components(const Scenario& sc);

// Sum over components with a <= f21 < b of betti[k - s].
long lhs_count(const std::vector<ResolvedComponent>& comps, const RatX& a, const RatX& b,
               long k);

// Graph mode: relative strict-sublevel dimension of the difference function
// over [a, b). Component mode: Betti of the manifold for the doubly infinite
// window, nullopt otherwise (the unsupported-window marker).
std::optional<long> rhs_count(const Scenario& sc, const RatX& a, const RatX& b, long k);

// Report pieces. All text renderings are pure functions of the data, so a
// fixed scenario produces byte-identical machine output.
struct WindowCell {
  long k = 0;
  long lhs = 0;
  std::optional<long> rhs;  // nullopt = unavailable
  bool pass = true;         // lhs >= rhs; vacuously true when unavailable
};

struct WindowReport {
  RatX a, b;          // as requested
  RatX eff_a, eff_b;  // after regularization
  bool perturbed_a = false, perturbed_b = false;
  std::vector<WindowCell> cells;
};

// Crossing equality at one critical value: both sides over (c - eps, c + eps).
struct LevelCell {
  Rat c;
  long k = 0;
  long lhs = 0;
  long rhs = 0;
  bool pass = true;  // equality here, not inequality
};

struct CorollaryLine {
  long components_total = 0;
  long manifold_total = 0;
  bool pass = true;
};

struct StabilizationReport {
  std::vector<long> betti;  // stabilized window dimensions per degree
  Rat threshold;            // smallest swept half-width from which they hold
};

struct AppendixReport {
  long transverse = 0;
  long contribution = 0;
  long rhs_total = 0;
  long bound = 0;  // implied lower bound on transverse points
  std::vector<long> contribution_by_degree;
};

struct Report {
  std::string kind;  // "verify_clean" | "verify_cohlagr" | "appendix_a"
  std::string scenario;
  std::string mode;  // "graph" | "components"
  std::vector<ResolvedComponent> components;
  std::vector<WindowReport> windows;
  std::vector<LevelCell> levels;
  std::optional<CorollaryLine> corollary;
  std::optional<StabilizationReport> stabilization;
  std::optional<AppendixReport> appendix;
  std::vector<std::string> notes;
  bool pass = true;

  std::string render_machine() const;  // stable JSON schema, documented in README
  std::string render_table() const;    // human-readable
};

// Window and per-degree inequality lhs >= rhs, the per-level crossing
// equalities (graph mode), and the summed corollary. Runs the stabilization
// sweep too when the scenario lists the "cohlagr" task.
Report verify_clean(const Scenario& sc);

// Stabilization only: sweeps windows (-c, c) with doubling c until the
// dimensions match the manifold Betti numbers in every degree and reports the
// first such c; NoStabilization past the cap signals an engine bug.
Report verify_cohlagr(const Scenario& sc);

enum class AppendixExample { one, two };

// The two flat-component model computations on the circle: a degenerate
// interval component contributes its compactly supported or ordinary
// cohomology according to which side the graph leaves from, and the global
// bound then forces 1 resp. 2 transverse points elsewhere.
Report verify_appendix_a(AppendixExample ex);

}  // namespace lagdesk
