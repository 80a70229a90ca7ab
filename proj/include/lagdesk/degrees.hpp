#pragma once
#include <optional>
#include <vector>

#include "lagdesk/maslov.hpp"

namespace lagdesk {

// Linear-algebra germ of an exact Lagrangian with primitive at a point of the
// cotangent bundle: the tangent plane, the primitive value f(p), and the
// quantization shift d(p) — stored directly and/or derived from a grading
// lift. Half-integer shifts are rationals with denominator dividing 2.
struct LagrangianGerm {
  size_t m = 0;  // dim of the base manifold
  Mat x;         // m x 1
  Mat xi;        // m x 1
  LagrangianFrame tangent;  // in the 2m-space
  Rat primitive_value;
  std::optional<Rat> shift;
  std::optional<PathLift> grading;
};

// Validates sizes, tangent space, half-integrality of the stored shift, and
// (when both shift and grading are present) the grading equation.
void validate_germ(const LagrangianGerm& g);

// A clean-intersection component described by data at a representative point.
struct CleanComponentRecord {
  size_t dim_c = 0;
  std::vector<long> betti;  // F2 Betti numbers of the component
  LagrangianGerm germ1, germ2;
  Rat f21;
  long s = 0;
};

// Validates the record: common base point, f21 = f2 - f1, clean condition
// dim(T1 cap T2) = dim_c. (The stored s is a claim; cross-checking it against
// degree_s is the caller's business.)
void validate_component(const CleanComponentRecord& comp);

// d(p) from a grading lift: d = mu(fiber-lift, grading) + (m+1)/2. Accepts a
// grading in the base 2m-space; a lift already living in the conified
// (m+1)-space is taken as-is.
Rat shift_from_grading(const PathLift& grading, size_t m);

// True when the stored shift and the grading (if both present) satisfy the
// grading equation; vacuously true when either is absent.
bool grading_consistent(const LagrangianGerm& g);

// The stored shift, or the one derived from the grading; MissingGrading if
// neither is available.
Rat effective_shift(const LagrangianGerm& g);

// s(C) = d2 - d1 + (m - dim C)/2 - tau(T_pL2, T_pL1, fiber)/2, an integer.
long degree_s(const CleanComponentRecord& comp);

// Same value with the tau term evaluated through the conification in the
// (m+1)-space; the equality with degree_s is a library-level theorem kept
// under test.
long degree_s_conified(const CleanComponentRecord& comp);

// Number of negative eigenvalues of the nondegenerate normal Hessian.
long degree_s_morse_bott(size_t m, size_t dim_c, const Mat& hessian_normal);

// gr(L2, L1; C) = (m - dim C)/2 - mu(grading2, grading1); needs both gradings.
long floer_grading(const CleanComponentRecord& comp);

// f21(C) = f2(p) - f1(p).
Rat action_value(const CleanComponentRecord& comp);

}  // namespace lagdesk
