#include "lagdesk/maslov.hpp"

namespace lagdesk {

namespace {

// Negates the xi block: carries (E, -sigma) to standard coordinates.
LagrangianFrame bar(const LagrangianFrame& l) {
  Mat F = l.columns;
  size_t n = l.space.n;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) F.at(n + i, j) = -F.at(n + i, j);
  return lagrangian_from_frame(l.space, F);
}

// Diagonal {(v, bar v)} of E + E^- in standard coordinates of the sum.
LagrangianFrame diagonal_frame(const SymplecticSpace& small) {
  size_t n = small.n, N = 2 * n;
  Mat D(2 * N, N);
  for (size_t j = 0; j < n; ++j) {
    D.at(j, j) = 1;          // x_j of first factor
    D.at(n + j, j) = 1;      // x_j of second factor
    D.at(N + j, n + j) = 1;  // xi_j of first factor
    D.at(N + n + j, n + j) = -1;
  }
  return lagrangian_from_frame(SymplecticSpace(N), D);
}

}  // namespace

ChartSegment::ChartSegment(LagrangianFrame theta, LagrangianFrame start, LagrangianFrame end)
    : theta_(std::move(theta)), start_(std::move(start)), end_(std::move(end)) {
  require(theta_.space == start_.space && theta_.space == end_.space, ErrorCode::SpaceMismatch,
          "segment frames live in different spaces");
  require(is_transverse(start_, theta_), ErrorCode::ChartViolation,
          "segment start not transverse to chart reference");
  require(is_transverse(end_, theta_), ErrorCode::ChartViolation,
          "segment end not transverse to chart reference");
}

LagrangianFrame ChartSegment::at(const Rat& s) const {
  if (s == 0) return start_;
  // Not short-circuited at s = 1: the formula value spans end() but keeps the
  // frame representative continuous in s, which determinant-based samplers rely on.
  // Columns of end decomposed in the basis [start | theta]: end = start U + theta V.
  // Interpolation frame: start + s theta V U^{-1} (U invertible by transversality).
  size_t n = theta_.space.n;
  Mat B = Mat::hcat(start_.columns, theta_.columns);
  Mat W = B.solve(end_.columns);  // 2n x n: top U, bottom V
  Mat U(n, n), V(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      U.at(i, j) = W.at(i, j);
      V.at(i, j) = W.at(n + i, j);
    }
  Mat G = theta_.columns * (V * U.inverse());
  return lagrangian_from_frame(start_.space, start_.columns + G.scaled(s));
}

PathLift::PathLift(SymplecticSpace space, std::vector<ChartSegment> segments)
    : space_(space), segments_(std::move(segments)), end_(fiber(space)) {
  const LagrangianFrame base = fiber(space_);
  const LagrangianFrame* prev = &base;
  for (size_t k = 0; k < segments_.size(); ++k) {
    const ChartSegment& seg = segments_[k];
    require(seg.start().space == space_, ErrorCode::SpaceMismatch,
            "segment in a different space");
    if (k == 0)
      require(spans_equal(seg.start(), base), ErrorCode::BaseMismatch,
              "lift must start at the fiber");
    else
      require(spans_equal(seg.start(), *prev), ErrorCode::BadInput,
              "discontinuous lift: segment start differs from previous end");
    prev = &seg.end();
  }
  if (!segments_.empty()) end_ = segments_.back().end();
}

const LagrangianFrame& PathLift::endpoint() const { return end_; }

PathLift PathLift::constant(const SymplecticSpace& space) { return PathLift(space, {}); }

Rat segment_index(const ChartSegment& seg, const LagrangianFrame& nu) {
  require(nu.space == seg.theta().space, ErrorCode::SpaceMismatch, "nu in a different space");
  // Sign calibrated once against the coboundary identity
  // mu12 + mu23 + mu31 = (1/2) tau(l1,l2,l3); with the opposite sign the
  // whole suite comes out negated.
  long d = inertia_index(nu, seg.start(), seg.theta()) - inertia_index(nu, seg.end(), seg.theta());
  return Rat(d) / 2;
}

Rat path_index(const PathLift& path, const LagrangianFrame& nu) {
  Rat acc(0);
  for (const auto& seg : path.segments()) acc += segment_index(seg, nu);
  return acc;
}

PathLift generator_loop(const SymplecticSpace& space) {
  // In the plane summand (lines through 0, fiber at angle pi/2): a monotone
  // half-turn fiber -> graph(-1) -> zero -> fiber through increasing angles
  // pi/2 -> 3pi/4 -> pi -> 3pi/2, written as three chart segments. This is
  // the orientation that makes the deck shift on the first maslov_index
  // argument equal +1.
  SymplecticSpace plane(1);
  Mat mone(1, 1);
  mone.at(0, 0) = -1;
  LagrangianFrame F = fiber(plane), Z = zero_section(plane);
  LagrangianFrame Gm = graph_of_symmetric(plane, mone);  // span(1, -1)
  std::vector<ChartSegment> segs{
      ChartSegment(Z, F, Gm),   // pi/2 -> 3pi/4, avoiding the zero section
      ChartSegment(F, Gm, Z),   // 3pi/4 -> pi, avoiding the fiber
      ChartSegment(Gm, Z, F),   // pi -> 3pi/2 through pi/4, avoiding span(1,-1)
  };
  if (space.n == 1) return PathLift(space, std::move(segs));
  SymplecticSpace rest(space.n - 1);
  LagrangianFrame frest = fiber(rest), zrest = zero_section(rest);
  std::vector<ChartSegment> big;
  for (const auto& s : segs)
    big.emplace_back(direct_sum_frame(s.theta(), zrest), direct_sum_frame(s.start(), frest),
                     direct_sum_frame(s.end(), frest));
  return PathLift(space, std::move(big));
}

PathLift prepend_generator_loops(const PathLift& lift, long count) {
  if (count == 0) return lift;
  PathLift loop = generator_loop(lift.space());
  std::vector<ChartSegment> segs;
  for (long k = 0; k < (count > 0 ? count : -count); ++k) {
    if (count > 0) {
      for (const auto& s : loop.segments()) segs.push_back(s);
    } else {
      for (auto it = loop.segments().rbegin(); it != loop.segments().rend(); ++it)
        segs.push_back(it->reversed());
    }
  }
  for (const auto& s : lift.segments()) segs.push_back(s);
  return PathLift(lift.space(), std::move(segs));
}

Rat maslov_index(const PathLift& lift1, const PathLift& lift2) {
  require(lift1.space() == lift2.space(), ErrorCode::SpaceMismatch,
          "maslov_index across spaces");
  const SymplecticSpace& s = lift1.space();
  size_t k1 = lift1.segments().size(), k2 = lift2.segments().size();
  LagrangianFrame delta = diagonal_frame(s);
  if (k1 == 0 && k2 == 0) return Rat(0);

  // Merge the uniform breakpoint grids of the two lifts and build product
  // segments; each factor is chart-linear on every merged interval, so the
  // product is a genuine chart segment for theta1 + bar(theta2).
  std::vector<Rat> cuts{Rat(0)};
  auto add_cuts = [&](size_t k) {
    for (size_t j = 1; j < k; ++j) cuts.push_back(Rat(static_cast<long>(j)) / Rat(static_cast<long>(k)));
  };
  add_cuts(k1);
  add_cuts(k2);
  cuts.push_back(Rat(1));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto frame_at = [&](const PathLift& lift, size_t k, const Rat& t) -> LagrangianFrame {
    if (k == 0) return fiber(s);
    Rat scaled = t * Rat(static_cast<long>(k));
    long idx = static_cast<long>(floor_rat(scaled));
    if (idx >= static_cast<long>(k)) idx = static_cast<long>(k) - 1;
    Rat local = scaled - Rat(idx);
    return lift.segments()[static_cast<size_t>(idx)].at(local);
  };
  auto theta_at = [&](const PathLift& lift, size_t k, const Rat& tmid) -> LagrangianFrame {
    if (k == 0) return zero_section(s);  // constant fiber factor: any transverse chart
    Rat scaled = tmid * Rat(static_cast<long>(k));
    long idx = static_cast<long>(floor_rat(scaled));
    if (idx >= static_cast<long>(k)) idx = static_cast<long>(k) - 1;
    return lift.segments()[static_cast<size_t>(idx)].theta();
  };

  std::vector<ChartSegment> prod;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat &a = cuts[i], &b = cuts[i + 1];
    Rat mid = (a + b) / 2;
    LagrangianFrame th = direct_sum_frame(theta_at(lift1, k1, mid), bar(theta_at(lift2, k2, mid)));
    LagrangianFrame st = direct_sum_frame(frame_at(lift1, k1, a), bar(frame_at(lift2, k2, a)));
    LagrangianFrame en = direct_sum_frame(frame_at(lift1, k1, b), bar(frame_at(lift2, k2, b)));
    prod.emplace_back(std::move(th), std::move(st), std::move(en));
  }
  PathLift product(SymplecticSpace(2 * s.n), std::move(prod));
  return path_index(product, delta);
}

PathLift canonical_graph_lift(const SymplecticSpace& space, const Mat& A) {
  LagrangianFrame Z = zero_section(space), F = fiber(space);
  LagrangianFrame target = graph_of_symmetric(space, A);  // validates symmetry
  LagrangianFrame detour_chart = graph_of_symmetric(space, Mat::identity(space.n));
  std::vector<ChartSegment> segs{ChartSegment(detour_chart, F, Z), ChartSegment(F, Z, target)};
  return PathLift(space, std::move(segs));
}

}  // namespace lagdesk
