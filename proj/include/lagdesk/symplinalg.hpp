#pragma once
#include <vector>

#include "lagdesk/matrix.hpp"

namespace lagdesk {

// Standard symplectic R^{2n} with coordinates (x_1..x_n, xi_1..xi_n) and
// sigma(u,v) = <u_xi, v_x> - <v_xi, u_x>, i.e. sigma(u,v) = u^T J v with
// J = [[0,-I],[I,0]]. The convention is pinned by the anchor
// tau({x=0},{xi=0},{xi=a x}) = -sgn(a).
struct SymplecticSpace {
  size_t n;  // half-dimension
  explicit SymplecticSpace(size_t half_dim) : n(half_dim) {
    require(half_dim >= 1, ErrorCode::BadInput, "half-dimension must be positive");
  }
  size_t dim() const { return 2 * n; }
  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) {
    return a.n == b.n;
  }
};

// sigma form matrix J of the space (2n x 2n).
Mat symplectic_form_matrix(const SymplecticSpace& s);

// Evaluates sigma(u, v) for 2n-column-vectors.
Rat sigma(const SymplecticSpace& s, const Mat& u, const Mat& v);

// A Lagrangian plane given by a 2n x n rational frame of full rank with
// isotropic span. Equality is subspace equality, never matrix equality.
struct LagrangianFrame {
  SymplecticSpace space;
  Mat columns;  // 2n x n
};

LagrangianFrame lagrangian_from_frame(const SymplecticSpace& s, const Mat& columns);

LagrangianFrame fiber(const SymplecticSpace& s);         // {x = 0}
LagrangianFrame zero_section(const SymplecticSpace& s);  // {xi = 0}
// {xi = A x}; A symmetric n x n.
LagrangianFrame graph_of_symmetric(const SymplecticSpace& s, const Mat& A);
// {x = C xi}; C symmetric n x n.
LagrangianFrame cograph_of_symmetric(const SymplecticSpace& s, const Mat& C);

bool spans_equal(const LagrangianFrame& a, const LagrangianFrame& b);
size_t intersection_dim(const LagrangianFrame& a, const LagrangianFrame& b);
inline bool is_transverse(const LagrangianFrame& a, const LagrangianFrame& b) {
  return intersection_dim(a, b) == 0;
}

struct Signature {
  size_t pos = 0, neg = 0, zero = 0;
  long sig() const { return static_cast<long>(pos) - static_cast<long>(neg); }
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
  }
};

// Exact inertia (pos, neg, zero) of a symmetric rational matrix via congruence
// diagonalization; zero diagonal with nonzero off-diagonal uses the hyperbolic
// 2x2 rule contributing (+1,-1).
Signature signature_of_symmetric(const Mat& A);

// Kashiwara inertia index tau(l1,l2,l3): signature of
// q(v1,v2,v3) = sigma(v1,v2) + sigma(v2,v3) + sigma(v3,v1) on l1 + l2 + l3.
long inertia_index(const LagrangianFrame& l1, const LagrangianFrame& l2,
                   const LagrangianFrame& l3);

// Image frame under a symplectic matrix T (T^T J T = J).
LagrangianFrame apply_symplectic(const Mat& T, const LagrangianFrame& l);

// Product space E + E' with the product form; frames stack block-diagonally.
SymplecticSpace direct_sum(const SymplecticSpace& a, const SymplecticSpace& b);
// Block-diagonal frame for lambda + lambda' inside direct_sum(a.space, b.space).
// Coordinates of the sum are (x, x', xi, xi').
LagrangianFrame direct_sum_frame(const LagrangianFrame& a, const LagrangianFrame& b);

// Linear data of the conification at a point p = (x, xi) of an exact Lagrangian:
// tangent T_pL conified to the (m+1)-space with coordinates (x, t; xi', tau).
struct ConifiedPointData {
  size_t m;           // dim of the base of the small space
  Mat xi;             // m x 1 covector at the point
  LagrangianFrame tangent;  // in the 2m-space
};

enum class FSide { first, second };

// Spanned by (0,0; xi,1) and {(v_x, -<xi,v_x>; v_xi, 0)} over tangent columns.
// The construction only uses xi, so it is identical for both sides; the side
// tag is kept for interface symmetry with the two-Lagrangian setting.
LagrangianFrame conify_tangent(const ConifiedPointData& data, FSide f_side);

}  // namespace lagdesk
