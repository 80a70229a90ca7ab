#pragma once
#include <vector>

#include "lagdesk/symplinalg.hpp"

namespace lagdesk {

// One chart-linear piece of a path in the Lagrangian Grassmannian: both
// endpoints transverse to theta; the implied segment is the linear
// interpolation in the canonical affine chart U_theta, which stays transverse
// to theta for every parameter, so index formulas are exact at endpoints.
class ChartSegment {
public:
  ChartSegment(LagrangianFrame theta, LagrangianFrame start, LagrangianFrame end);

  const LagrangianFrame& theta() const { return theta_; }
  const LagrangianFrame& start() const { return start_; }
  const LagrangianFrame& end() const { return end_; }

  // Frame at parameter s in [0,1] of the implied interpolation; exact.
  LagrangianFrame at(const Rat& s) const;
  ChartSegment reversed() const { return ChartSegment(theta_, end_, start_); }

private:
  LagrangianFrame theta_, start_, end_;
};

// Path-lift: a chain of chart segments starting at the fiber frame. The
//(discrete) lift to the universal cover is the chain itself; refining the
// chain does not change any index.
class PathLift {
public:
  // Empty segment list = the constant lift at the fiber.
  PathLift(SymplecticSpace space, std::vector<ChartSegment> segments);

  const SymplecticSpace& space() const { return space_; }
  const std::vector<ChartSegment>& segments() const { return segments_; }
  const LagrangianFrame& endpoint() const;  // final frame (fiber when constant)

  static PathLift constant(const SymplecticSpace& space);

private:
  SymplecticSpace space_;
  std::vector<ChartSegment> segments_;
  LagrangianFrame end_;
};

// (1/2) [tau(nu, start, theta) - tau(nu, end, theta)].
Rat segment_index(const ChartSegment& seg, const LagrangianFrame& nu);

// Sum of segment indices; refinement- and sample-homotopy-invariant.
Rat path_index(const PathLift& path, const LagrangianFrame& nu);

// Generator loop of pi_1 of the Lagrangian Grassmannian: a fixed three-segment
// rational loop at the fiber in a 2-dimensional summand, direct-summed with
// constant fiber directions. Oriented so that prepending it to the first
// argument of maslov_index adds +1.
PathLift generator_loop(const SymplecticSpace& space);

// Prepends count generator loops (reversed loops for negative count).
PathLift prepend_generator_loops(const PathLift& lift, long count);

// Maslov index of two lifts based at the fiber: the path index of the product
// path inside (E + E^-, sigma + (-sigma)) relative to the diagonal; the second
// factor is carried to standard coordinates by negating its xi block.
Rat maslov_index(const PathLift& lift1, const PathLift& lift2);

// Standard lift of a graph Lagrangian: a fixed preliminary detour
// fiber -> zero section (in the chart of graph(+I)), then zero section ->
// graph(A) inside the fiber chart. Valid for every symmetric A, including
// degenerate ones; the reference index against the constant fiber lift does
// not depend on A.
PathLift canonical_graph_lift(const SymplecticSpace& space, const Mat& A);

}  // namespace lagdesk
