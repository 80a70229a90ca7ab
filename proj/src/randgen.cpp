#include "lagdesk/randgen.hpp"

namespace lagdesk::rnd {

long Rng::upto(long n) {
  require(n > 0, ErrorCode::BadInput, "Rng::upto needs positive bound");
  return static_cast<long>(u64() % static_cast<uint64_t>(n));
}

long Rng::range(long lo, long hi) { return lo + upto(hi - lo + 1); }

Rat Rng::rat(long max_num, long max_den) {
  long num = range(-max_num, max_num);
  long den = range(1, max_den);
  return Rat(num) / Rat(den);
}

Mat random_symmetric(Rng& rng, size_t n) {
  Mat A(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) A.at(i, j) = A.at(j, i) = rng.rat();
  return A;
}

Mat random_symplectic(Rng& rng, size_t n, size_t moves) {
  Mat T = Mat::identity(2 * n);
  for (size_t mv = 0; mv < moves; ++mv) {
    Mat G = Mat::identity(2 * n);
    switch (rng.upto(3)) {
      case 0: {  // (x, xi) -> (x, xi + A x), A symmetric
        Mat A = random_symmetric(rng, n);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) G.at(n + i, j) = A.at(i, j);
        break;
      }
      case 1: {  // (x, xi) -> (x + B xi, xi), B symmetric
        Mat B = random_symmetric(rng, n);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) G.at(i, n + j) = B.at(i, j);
        break;
      }
      default: {  // (x, xi) -> (P x, P^{-T} xi), unit upper-triangular P
        Mat P = Mat::identity(n);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = i + 1; j < n; ++j) P.at(i, j) = rng.rat(3, 2);
        Mat Pit = P.inverse().transpose();
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) {
            G.at(i, j) = P.at(i, j);
            G.at(n + i, n + j) = Pit.at(i, j);
          }
        break;
      }
    }
    T = G * T;
  }
  return T;
}

LagrangianFrame random_lagrangian(Rng& rng, const SymplecticSpace& s) {
  Mat T = random_symplectic(rng, s.n);
  LagrangianFrame base = rng.coin() ? fiber(s) : graph_of_symmetric(s, random_symmetric(rng, s.n));
  return apply_symplectic(T, base);
}

PathLift random_path_lift(Rng& rng, const SymplecticSpace& s, size_t num_segments) {
  std::vector<ChartSegment> segs;
  LagrangianFrame cur = fiber(s);
  for (size_t k = 0; k < num_segments; ++k) {
    for (;;) {
      LagrangianFrame nxt = random_lagrangian(rng, s);
      LagrangianFrame th = random_lagrangian(rng, s);
      if (is_transverse(th, cur) && is_transverse(th, nxt)) {
        segs.emplace_back(th, cur, nxt);
        cur = std::move(nxt);
        break;
      }
    }
  }
  return PathLift(s, std::move(segs));
}

}  // namespace lagdesk::rnd
