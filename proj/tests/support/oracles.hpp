#pragma once
// Independent oracles used by the unit and acceptance suites. Everything here
// recomputes results by a route different from the library implementation:
// signatures via root counting on the characteristic polynomial, relative
// homology via direct rank computation on pair complexes, sheaf cohomology via
// open-cover combinatorics, convolution via fiberwise compactly-supported
// cohomology of slices.
#include <cstdint>
#include <vector>

#include "lagdesk/flathomology.hpp"
#include "lagdesk/intervalsheaves.hpp"
#include "lagdesk/maslov.hpp"
#include "lagdesk/randgen.hpp"

namespace lagdesk::oracles {

using rnd::Rng;
using rnd::random_lagrangian;
using rnd::random_path_lift;
using rnd::random_symmetric;
using rnd::random_symplectic;

// --- polynomials over Q, ascending coefficients --------------------------
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
Poly poly_derivative(const Poly& p);
// Division with remainder; q empty allowed only if divisor nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_gcd(Poly a, Poly b);  // primitive, positive leading coefficient
int poly_sign_at_zero(const Poly& p);
int poly_sign_at_pos_inf(const Poly& p);
int poly_sign_at_neg_inf(const Poly& p);

// det(lambda I - A) by Faddeev-LeVerrier; exact.
Poly charpoly(const Mat& A);

// Multiplicity-aware eigenvalue sign counts of a symmetric rational matrix:
// strip zero roots, Yun squarefree decomposition, Sturm chains per factor.
Signature signature_by_sturm(const Mat& A);
// Descartes' rule, exact for real-rooted polynomials (symmetric matrices).
Signature signature_by_descartes(const Mat& A);

// Signed count of interior crossings of a path with nu: sign changes of
// det[frame(s) | nu] sampled inside each segment (grid points per segment),
// each counted as (sign before - sign after)/2. Frames vary continuously
// within a segment, so the determinant sign is meaningful there.
Rat signed_crossings(const PathLift& path, const LagrangianFrame& nu, size_t grid = 64);

// --- relative homology by direct rank computation -------------------------

// dim_F2 H_k({phi < b}, {phi < a}) from the relative chain complex: cells with
// a <= value < b, boundary restricted to them, ranks by row echelon. No
// barcodes anywhere in this route.
long pair_dim_direct(const CellComplex& complex, const PLFunction& phi, const RatX& a,
                     const RatX& b, size_t k);

// Values where sublevel homology changes, by scanning windows isolating each
// distinct vertex value and testing the pair homology for nonvanishing.
std::vector<Rat> critical_scan_direct(const CellComplex& complex, const PLFunction& phi);

// --- sheaves on the line by open-cover combinatorics -----------------------

// Windowed section dimensions recomputed from scratch: good Cech covers of
// (-oo, b) and (-oo, a) with at most one interval endpoint per cover set, the
// honest restriction chain map between them, and the fiber complex of that
// map, all ranks over Q. Shares no case analysis with the library.
GradedDim windowed_dims_cech(const IntervalSheaf& f, const RatX& a, const RatX& b);
GradedDim global_dims_cech(const IntervalSheaf& f);

// Stalk of a stored sheaf at t: count summands containing t, per degree.
GradedDim sheaf_stalk(const IntervalSheaf& f, const Rat& t);

// Stalk at t of the convolution, computed fiberwise: for each summand pair
// the slice {x : x in I, t - x in J} is an interval, and its compactly
// supported cohomology contributes by how many finite endpoints are closed
// (two -> degree 0, one -> nothing, none -> degree 1).
GradedDim convolve_stalk(const IntervalSheaf& f, const IntervalSheaf& g, const Rat& t);

// dim Hom(f, g[k]) in the derived category of the line, by the four-case
// normal-form table; summed over summand pairs with their degree shifts.
long hom_dim_pair(const Summand& f, const Summand& g, long k);
long sheaf_hom_dim(const IntervalSheaf& f, const IntervalSheaf& g, long k);

}  // namespace lagdesk::oracles
