#include "lagdesk/symplinalg.hpp"

namespace lagdesk {

Mat symplectic_form_matrix(const SymplecticSpace& s) {
  Mat J(2 * s.n, 2 * s.n);
  for (size_t i = 0; i < s.n; ++i) {
    J.at(i, s.n + i) = -1;
    J.at(s.n + i, i) = 1;
  }
  return J;
}

Rat sigma(const SymplecticSpace& s, const Mat& u, const Mat& v) {
  require(u.rows() == 2 * s.n && v.rows() == 2 * s.n && u.cols() == 1 && v.cols() == 1,
          ErrorCode::SpaceMismatch, "sigma operand shape");
  Rat acc(0);
  for (size_t i = 0; i < s.n; ++i)
    acc += u.at(s.n + i, 0) * v.at(i, 0) - v.at(s.n + i, 0) * u.at(i, 0);
  return acc;
}

LagrangianFrame lagrangian_from_frame(const SymplecticSpace& s, const Mat& columns) {
  require(columns.rows() == 2 * s.n && columns.cols() == s.n, ErrorCode::SpaceMismatch,
          "frame must be 2n x n");
  require(columns.rank() == s.n, ErrorCode::RankDeficient, "frame columns dependent");
  Mat J = symplectic_form_matrix(s);
  Mat G = columns.transpose() * J * columns;
  require(G.is_zero(), ErrorCode::NotIsotropic, "sigma does not vanish on span");
  return LagrangianFrame{s, columns};
}

LagrangianFrame fiber(const SymplecticSpace& s) {
  Mat F(2 * s.n, s.n);
  for (size_t i = 0; i < s.n; ++i) F.at(s.n + i, i) = 1;
  return LagrangianFrame{s, F};
}

LagrangianFrame zero_section(const SymplecticSpace& s) {
  Mat F(2 * s.n, s.n);
  for (size_t i = 0; i < s.n; ++i) F.at(i, i) = 1;
  return LagrangianFrame{s, F};
}

LagrangianFrame graph_of_symmetric(const SymplecticSpace& s, const Mat& A) {
  require(A.rows() == s.n && A.cols() == s.n, ErrorCode::SpaceMismatch, "graph matrix shape");
  require(A.is_symmetric(), ErrorCode::NotSymmetric, "graph matrix not symmetric");
  Mat F(2 * s.n, s.n);
  for (size_t i = 0; i < s.n; ++i) F.at(i, i) = 1;
  for (size_t i = 0; i < s.n; ++i)
    for (size_t j = 0; j < s.n; ++j) F.at(s.n + i, j) = A.at(i, j);
  return LagrangianFrame{s, F};
}

LagrangianFrame cograph_of_symmetric(const SymplecticSpace& s, const Mat& C) {
  require(C.rows() == s.n && C.cols() == s.n, ErrorCode::SpaceMismatch, "cograph matrix shape");
  require(C.is_symmetric(), ErrorCode::NotSymmetric, "cograph matrix not symmetric");
  Mat F(2 * s.n, s.n);
  for (size_t i = 0; i < s.n; ++i)
    for (size_t j = 0; j < s.n; ++j) F.at(i, j) = C.at(i, j);
  for (size_t i = 0; i < s.n; ++i) F.at(s.n + i, i) = 1;
  return LagrangianFrame{s, F};
}

size_t intersection_dim(const LagrangianFrame& a, const LagrangianFrame& b) {
  require(a.space == b.space, ErrorCode::SpaceMismatch, "intersection_dim across spaces");
  return 2 * a.space.n - Mat::hcat(a.columns, b.columns).rank();
}

bool spans_equal(const LagrangianFrame& a, const LagrangianFrame& b) {
  if (!(a.space == b.space)) return false;
  return intersection_dim(a, b) == a.space.n;
}

Signature signature_of_symmetric(const Mat& A) {
  require(A.rows() == A.cols(), ErrorCode::NotSymmetric, "signature of non-square matrix");
  require(A.is_symmetric(), ErrorCode::NotSymmetric, "signature of non-symmetric matrix");
  Mat w = A;
  std::vector<size_t> act(w.rows());
  for (size_t i = 0; i < act.size(); ++i) act[i] = i;
  Signature s;
  while (!act.empty()) {
    // Diagonal pivot first.
    size_t kpos = act.size();
    for (size_t k = 0; k < act.size(); ++k)
      if (w.at(act[k], act[k]) != 0) {
        kpos = k;
        break;
      }
    if (kpos < act.size()) {
      size_t p = act[kpos];
      Rat d = w.at(p, p);
      (d > 0 ? s.pos : s.neg) += 1;
      act.erase(act.begin() + kpos);
      for (size_t i : act)
        for (size_t j : act) w.at(i, j) -= w.at(i, p) * w.at(p, j) / d;
      continue;
    }
    // All-zero diagonal: look for a hyperbolic pair.
    size_t pk = 0, pl = 0;
    bool found = false;
    for (size_t a1 = 0; a1 < act.size() && !found; ++a1)
      for (size_t b1 = a1 + 1; b1 < act.size() && !found; ++b1)
        if (w.at(act[a1], act[b1]) != 0) {
          pk = act[a1];
          pl = act[b1];
          found = true;
        }
    if (!found) {
      s.zero += act.size();
      break;
    }
    // Split off the block [[0,h],[h,0]]: contributes (+1,-1); Schur complement
    // A'_ij = A_ij - (A_ik A_lj + A_il A_kj)/h on the rest.
    s.pos += 1;
    s.neg += 1;
    Rat h = w.at(pk, pl);
    std::vector<size_t> rest;
    for (size_t i : act)
      if (i != pk && i != pl) rest.push_back(i);
    for (size_t i : rest)
      for (size_t j : rest)
        w.at(i, j) -= (w.at(i, pk) * w.at(pl, j) + w.at(i, pl) * w.at(pk, j)) / h;
    act = rest;
  }
  return s;
}

long inertia_index(const LagrangianFrame& l1, const LagrangianFrame& l2,
                   const LagrangianFrame& l3) {
  require(l1.space == l2.space && l2.space == l3.space, ErrorCode::SpaceMismatch,
          "inertia_index across spaces");
  size_t n = l1.space.n;
  Mat J = symplectic_form_matrix(l1.space);
  Mat B12 = l1.columns.transpose() * J * l2.columns;
  Mat B23 = l2.columns.transpose() * J * l3.columns;
  Mat B31 = l3.columns.transpose() * J * l1.columns;
  // 2q as a symmetric 3n x 3n matrix (positive scaling keeps the signature).
  Mat Q(3 * n, 3 * n);
  auto put = [&](size_t bi, size_t bj, const Mat& M) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Q.at(bi * n + i, bj * n + j) += M.at(i, j);
        Q.at(bj * n + j, bi * n + i) += M.at(i, j);
      }
  };
  put(0, 1, B12);
  put(1, 2, B23);
  put(2, 0, B31);
  return signature_of_symmetric(Q).sig();
}

LagrangianFrame apply_symplectic(const Mat& T, const LagrangianFrame& l) {
  const SymplecticSpace& s = l.space;
  require(T.rows() == 2 * s.n && T.cols() == 2 * s.n, ErrorCode::SpaceMismatch,
          "symplectic matrix shape");
  Mat J = symplectic_form_matrix(s);
  require(T.transpose() * J * T == J, ErrorCode::NotSymplectic, "T^T J T != J");
  return lagrangian_from_frame(s, T * l.columns);
}

SymplecticSpace direct_sum(const SymplecticSpace& a, const SymplecticSpace& b) {
  return SymplecticSpace(a.n + b.n);
}

LagrangianFrame direct_sum_frame(const LagrangianFrame& a, const LagrangianFrame& b) {
  size_t na = a.space.n, nb = b.space.n, n = na + nb;
  Mat F(2 * n, n);
  for (size_t j = 0; j < na; ++j) {
    for (size_t i = 0; i < na; ++i) F.at(i, j) = a.columns.at(i, j);
    for (size_t i = 0; i < na; ++i) F.at(n + i, j) = a.columns.at(na + i, j);
  }
  for (size_t j = 0; j < nb; ++j) {
    for (size_t i = 0; i < nb; ++i) F.at(na + i, na + j) = b.columns.at(i, j);
    for (size_t i = 0; i < nb; ++i) F.at(n + na + i, na + j) = b.columns.at(nb + i, j);
  }
  return lagrangian_from_frame(SymplecticSpace(n), F);
}

LagrangianFrame conify_tangent(const ConifiedPointData& data, FSide f_side) {
  (void)f_side;  // only xi enters the spanning formula; both sides coincide
  size_t m = data.m;
  require(data.xi.rows() == m && data.xi.cols() == 1, ErrorCode::SpaceMismatch,
          "xi must be an m-vector");
  require(data.tangent.space.n == m, ErrorCode::SpaceMismatch, "tangent lives in the 2m-space");
  size_t n = m + 1;  // big space half-dimension; coordinates (x, t; xi', tau)
  Mat F(2 * n, n);
  // First column: (0, 0; xi, 1).
  for (size_t i = 0; i < m; ++i) F.at(n + i, 0) = data.xi.at(i, 0);
  F.at(2 * n - 1, 0) = 1;
  // Remaining columns: (v_x, -<xi, v_x>; v_xi, 0) over tangent frame columns.
  for (size_t j = 0; j < m; ++j) {
    Rat pairing(0);
    for (size_t i = 0; i < m; ++i) {
      const Rat& vx = data.tangent.columns.at(i, j);
      F.at(i, j + 1) = vx;
      pairing += data.xi.at(i, 0) * vx;
    }
    F.at(m, j + 1) = -pairing;
    for (size_t i = 0; i < m; ++i) F.at(n + i, j + 1) = data.tangent.columns.at(m + i, j);
  }
  return lagrangian_from_frame(SymplecticSpace(n), F);
}

}  // namespace lagdesk
