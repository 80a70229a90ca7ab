#include "lagdesk/degrees.hpp"

namespace lagdesk {
namespace {

// Integer extraction for values required to be whole by the theory.
long as_integer(const Rat& r, const char* what) {
  require(is_integer(r), ErrorCode::NonIntegralDegree, what);
  return static_cast<long>(numerator(r).convert_to<long long>());
}

bool is_point_column(const Mat& v, size_t m) { return v.rows() == m && v.cols() == 1; }

}  // namespace

void validate_germ(const LagrangianGerm& g) {
  require(g.m >= 1, ErrorCode::BadInput, "germ needs a positive base dimension");
  require(is_point_column(g.x, g.m) && is_point_column(g.xi, g.m), ErrorCode::SpaceMismatch,
          "germ point columns must be m x 1");
  require(g.tangent.space.n == g.m, ErrorCode::SpaceMismatch,
          "germ tangent must live in the 2m-space");
  if (g.shift) {
    require(is_half_integer(*g.shift), ErrorCode::BadInput,
            "quantization shift must be a half-integer");
  }
  if (g.grading) {
    size_t gn = g.grading->space().n;
    require(gn == g.m || gn == g.m + 1, ErrorCode::BaseMismatch,
            "grading must live in the base 2m-space or its conification");
    LagrangianFrame expected = gn == g.m
                                   ? g.tangent
                                   : conify_tangent({g.m, g.xi, g.tangent}, FSide::first);
    require(spans_equal(g.grading->endpoint(), expected), ErrorCode::BaseMismatch,
            "grading endpoint differs from the germ tangent");
  }
  require(grading_consistent(g), ErrorCode::InconsistentComponentData,
          "stored shift contradicts the grading");
}

void validate_component(const CleanComponentRecord& comp) {
  validate_germ(comp.germ1);
  validate_germ(comp.germ2);
  require(comp.germ1.m == comp.germ2.m, ErrorCode::SpaceMismatch,
          "germs of one component live over different base dimensions");
  require(comp.germ1.x == comp.germ2.x && comp.germ1.xi == comp.germ2.xi,
          ErrorCode::InconsistentComponentData, "germs are attached to different points");
  require(comp.f21 == comp.germ2.primitive_value - comp.germ1.primitive_value,
          ErrorCode::InconsistentComponentData, "f21 differs from f2 - f1");
  require(comp.dim_c <= comp.germ1.m, ErrorCode::CleanViolation,
          "component dimension exceeds the base dimension");
  require(intersection_dim(comp.germ1.tangent, comp.germ2.tangent) == comp.dim_c,
          ErrorCode::CleanViolation, "tangent intersection dimension differs from dim C");
}

Rat shift_from_grading(const PathLift& grading, size_t m) {
  require(grading.space().n == m || grading.space().n == m + 1, ErrorCode::BaseMismatch,
          "grading must live in the base 2m-space or its conification");
  // mu against the constant fiber lift transfers verbatim between the base
  // space and the conified space (the conification adds one direction common
  // to the moving plane and the fiber, which shifts no index), so one grading
  // equation serves both presentations.
  Rat mu = maslov_index(PathLift::constant(grading.space()), grading);
  return mu + Rat(static_cast<long>(m) + 1) / 2;
}

bool grading_consistent(const LagrangianGerm& g) {
  if (!g.shift || !g.grading) return true;
  return *g.shift == shift_from_grading(*g.grading, g.m);
}

Rat effective_shift(const LagrangianGerm& g) {
  if (g.shift) return *g.shift;
  require(g.grading.has_value(), ErrorCode::MissingGrading,
          "germ carries neither a shift nor a grading");
  return shift_from_grading(*g.grading, g.m);
}

namespace {

long degree_from_tau(const CleanComponentRecord& comp, long tau) {
  Rat value = effective_shift(comp.germ2) - effective_shift(comp.germ1) +
              Rat(static_cast<long>(comp.germ1.m) - static_cast<long>(comp.dim_c)) / 2 -
              Rat(tau) / 2;
  return as_integer(value, "degree formula must produce an integer");
}

}  // namespace

long degree_s(const CleanComponentRecord& comp) {
  validate_component(comp);
  long tau = inertia_index(comp.germ2.tangent, comp.germ1.tangent,
                           fiber(comp.germ1.tangent.space));
  return degree_from_tau(comp, tau);
}

long degree_s_conified(const CleanComponentRecord& comp) {
  validate_component(comp);
  LagrangianFrame c2 =
      conify_tangent({comp.germ2.m, comp.germ2.xi, comp.germ2.tangent}, FSide::second);
  LagrangianFrame c1 =
      conify_tangent({comp.germ1.m, comp.germ1.xi, comp.germ1.tangent}, FSide::first);
  long tau = inertia_index(c2, c1, fiber(c1.space));
  return degree_from_tau(comp, tau);
}

long degree_s_morse_bott(size_t m, size_t dim_c, const Mat& hessian_normal) {
  require(dim_c <= m, ErrorCode::CleanViolation, "component dimension exceeds base dimension");
  size_t normal = m - dim_c;
  require(hessian_normal.rows() == normal && hessian_normal.cols() == normal,
          ErrorCode::SpaceMismatch, "normal Hessian must be (m - dim C) square");
  if (normal == 0) return 0;
  Signature sig = signature_of_symmetric(hessian_normal);
  require(sig.zero == 0, ErrorCode::DegenerateNormalHessian,
          "normal Hessian must be nondegenerate");
  return static_cast<long>(sig.neg);
}

long floer_grading(const CleanComponentRecord& comp) {
  validate_component(comp);
  require(comp.germ1.grading.has_value() && comp.germ2.grading.has_value(),
          ErrorCode::MissingGrading, "floer grading needs gradings on both germs");
  require(comp.germ1.grading->space() == comp.germ2.grading->space(), ErrorCode::SpaceMismatch,
          "gradings live in different spaces");
  Rat value = Rat(static_cast<long>(comp.germ1.m) - static_cast<long>(comp.dim_c)) / 2 -
              maslov_index(*comp.germ2.grading, *comp.germ1.grading);
  return as_integer(value, "floer grading must be an integer");
}

Rat action_value(const CleanComponentRecord& comp) {
  validate_component(comp);
  return comp.f21;
}

}  // namespace lagdesk
