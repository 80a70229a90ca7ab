#include "doctest.h"
#include "lagdesk/degrees.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace lagdesk;
using lagdesk::testutil::expect_error;

namespace {

LagrangianGerm graph_germ(size_t m, const Mat& A, const Rat& f, const Rat& shift) {
  SymplecticSpace sp(m);
  return LagrangianGerm{m,           Mat(m, 1), Mat(m, 1), graph_of_symmetric(sp, A),
                        f,           shift,     std::nullopt};
}

LagrangianGerm graded_graph_germ(size_t m, const Mat& A, const Rat& f) {
  LagrangianGerm g = graph_germ(m, A, f, Rat(0));
  g.shift.reset();
  g.grading = canonical_graph_lift(SymplecticSpace(m), A);
  return g;
}

CleanComponentRecord component(const LagrangianGerm& g1, const LagrangianGerm& g2,
                               size_t dim_c) {
  return CleanComponentRecord{dim_c, {1}, g1, g2,
                              g2.primitive_value - g1.primitive_value, 0};
}

long morse_index_oracle(const Mat& D) {
  auto sig = oracles::signature_by_sturm(D);
  REQUIRE(sig.zero == 0);
  return static_cast<long>(sig.neg);
}

}  // namespace

TEST_CASE("graph lifts all carry shift one-half") {
  rnd::Rng rng(401);
  for (size_t m = 1; m <= 3; ++m) {
    SymplecticSpace sp(m);
    CHECK(shift_from_grading(canonical_graph_lift(sp, Mat(m, m)), m) == Rat(1) / 2);
    CHECK(shift_from_grading(canonical_graph_lift(sp, Mat::identity(m)), m) == Rat(1) / 2);
    CHECK(shift_from_grading(canonical_graph_lift(sp, Mat::identity(m).scaled(-1)), m) ==
          Rat(1) / 2);
    for (int t = 0; t < 4; ++t) {
      CHECK(shift_from_grading(canonical_graph_lift(sp, rnd::random_symmetric(rng, m)), m) ==
            Rat(1) / 2);
    }
  }
}

TEST_CASE("circle potential: transverse minimum counts in degree 0, maximum in degree 1") {
  // Second derivative of the potential difference at the critical point: +2 at
  // the minimum, -1 at the maximum; the degree is its Morse index.
  LagrangianGerm zero = graph_germ(1, Mat(1, 1), Rat(0), Rat(1) / 2);
  LagrangianGerm minimum = graph_germ(1, Mat{{Rat(2)}}, Rat(-1), Rat(1) / 2);
  LagrangianGerm maximum = graph_germ(1, Mat{{Rat(-1)}}, Rat(3), Rat(1) / 2);
  CHECK(degree_s(component(zero, minimum, 0)) == 0);
  CHECK(degree_s(component(zero, maximum, 0)) == 1);
}

TEST_CASE("degree of transverse graph pairs is the Morse index of the difference") {
  rnd::Rng rng(402);
  int done = 0;
  while (done < 30) {
    size_t m = 1 + static_cast<size_t>(rng.upto(3));
    Mat A1 = rnd::random_symmetric(rng, m);
    Mat A2 = rnd::random_symmetric(rng, m);
    Mat D = A2 - A1;
    if (D.rank() != m) continue;
    ++done;
    LagrangianGerm g1 = graph_germ(m, A1, rng.rat(), Rat(1) / 2);
    LagrangianGerm g2 = graph_germ(m, A2, rng.rat(), Rat(1) / 2);
    long expected = morse_index_oracle(D);
    CHECK(degree_s(component(g1, g2, 0)) == expected);
    CHECK(degree_s_morse_bott(m, 0, D) == expected);
  }
}

TEST_CASE("degree, normal Hessian count, and floer grading agree on transverse graphs") {
  rnd::Rng rng(403);
  int done = 0;
  while (done < 20) {
    size_t m = 1 + static_cast<size_t>(rng.upto(3));
    Mat A1 = rnd::random_symmetric(rng, m);
    Mat A2 = rnd::random_symmetric(rng, m);
    Mat D = A2 - A1;
    if (D.rank() != m) continue;
    ++done;
    CleanComponentRecord comp =
        component(graded_graph_germ(m, A1, rng.rat()), graded_graph_germ(m, A2, rng.rat()), 0);
    long s = degree_s(comp);
    CHECK(s == degree_s_morse_bott(m, 0, D));
    CHECK(s == floer_grading(comp));
    CHECK(s == degree_s_conified(comp));
  }
}

TEST_CASE("floer grading equals degree for random graded transverse germs") {
  rnd::Rng rng(404);
  int done = 0;
  while (done < 40) {
    size_t m = 1 + static_cast<size_t>(rng.upto(2));
    SymplecticSpace sp(m);
    PathLift l1 = rnd::random_path_lift(rng, sp, 2);
    PathLift l2 = rnd::random_path_lift(rng, sp, 2);
    if (!is_transverse(l1.endpoint(), l2.endpoint())) continue;
    ++done;
    LagrangianGerm g1{m,          Mat(m, 1),    Mat(m, 1), l1.endpoint(),
                      rng.rat(),  std::nullopt, l1};
    LagrangianGerm g2{m,          Mat(m, 1),    Mat(m, 1), l2.endpoint(),
                      rng.rat(),  std::nullopt, l2};
    CleanComponentRecord comp = component(g1, g2, 0);
    CHECK(floer_grading(comp) == degree_s(comp));
  }
}

TEST_CASE("floer grading equals degree on clean non-transverse components") {
  rnd::Rng rng(405);
  for (int t = 0; t < 12; ++t) {
    size_t m = 2 + static_cast<size_t>(rng.upto(2));
    Mat A1 = rnd::random_symmetric(rng, m);
    // Difference with a forced kernel: random nondegenerate block on the first
    // coordinates, zero on the rest.
    size_t k = 1 + static_cast<size_t>(rng.upto(static_cast<long>(m) - 1));
    Mat D(m, m);
    Mat block;
    do {
      block = rnd::random_symmetric(rng, k);
    } while (block.rank() != k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) D.at(i, j) = block.at(i, j);
    Mat A2 = A1 + D;
    size_t dim_c = m - k;
    CleanComponentRecord comp =
        component(graded_graph_germ(m, A1, rng.rat()), graded_graph_germ(m, A2, rng.rat()), dim_c);
    long s = degree_s(comp);
    CHECK(floer_grading(comp) == s);
    CHECK(degree_s_conified(comp) == s);
    CHECK(degree_s_morse_bott(m, dim_c, block) == s);
  }
}

TEST_CASE("conified degree route agrees at points with nonzero covector") {
  rnd::Rng rng(406);
  for (int t = 0; t < 10; ++t) {
    size_t m = 2;
    Mat A1 = rnd::random_symmetric(rng, m);
    Mat D(m, m);
    do {
      D.at(0, 0) = rng.rat();
    } while (D.at(0, 0) == 0);
    Mat A2 = A1 + D;
    // Intersection contains the second axis; attach the germs at a point on it
    // so xi = A x is generically nonzero.
    Mat x(m, 1);
    x.at(1, 0) = Rat(1);
    LagrangianGerm g1 = graph_germ(m, A1, rng.rat(), Rat(1) / 2);
    g1.x = x;
    g1.xi = A1 * x;
    LagrangianGerm g2 = graph_germ(m, A2, rng.rat(), Rat(1) / 2);
    g2.x = x;
    g2.xi = A2 * x;
    REQUIRE(g1.xi == g2.xi);
    CleanComponentRecord comp = component(g1, g2, 1);
    CHECK(degree_s_conified(comp) == degree_s(comp));
  }
}

TEST_CASE("degree is invariant under fiberwise symplectic coordinate changes") {
  rnd::Rng rng(407);
  for (int t = 0; t < 12; ++t) {
    size_t m = 1 + static_cast<size_t>(rng.upto(3));
    SymplecticSpace sp(m);
    Mat A1 = rnd::random_symmetric(rng, m);
    Mat A2 = rnd::random_symmetric(rng, m);
    if ((A2 - A1).rank() == 0) continue;
    size_t dim_c = m - (A2 - A1).rank();
    LagrangianGerm g1 = graph_germ(m, A1, rng.rat(), Rat(1) / 2);
    LagrangianGerm g2 = graph_germ(m, A2, rng.rat(), Rat(1) / 2);
    long s = degree_s(component(g1, g2, dim_c));

    // Fiber-preserving symplectic map: base change P combined with a shear.
    Mat P = Mat::identity(m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) P.at(i, j) = rng.rat(3, 2);
    Mat S = rnd::random_symmetric(rng, m);
    Mat SP = S * P;
    Mat T(2 * m, 2 * m);
    Mat Pit = P.inverse().transpose();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        T.at(i, j) = P.at(i, j);
        T.at(m + i, m + j) = Pit.at(i, j);
        T.at(m + i, j) = SP.at(i, j);
      }
    LagrangianGerm h1 = g1;
    h1.tangent = apply_symplectic(T, g1.tangent);
    LagrangianGerm h2 = g2;
    h2.tangent = apply_symplectic(T, g2.tangent);
    CHECK(degree_s(component(h1, h2, dim_c)) == s);
  }
}

TEST_CASE("deck move: a generator loop on one grading shifts degree and floer grading together") {
  rnd::Rng rng(408);
  size_t m = 2;
  Mat A1 = rnd::random_symmetric(rng, m);
  Mat A2 = A1 + Mat::identity(m);
  CleanComponentRecord base =
      component(graded_graph_germ(m, A1, Rat(0)), graded_graph_germ(m, A2, Rat(1)), 0);
  long s = degree_s(base);
  long gr = floer_grading(base);
  CHECK(s == gr);

  for (long k = -2; k <= 2; ++k) {
    CleanComponentRecord moved = base;
    moved.germ2.grading = prepend_generator_loops(*base.germ2.grading, k);
    CHECK(degree_s(moved) == s - k);
    CHECK(floer_grading(moved) == gr - k);
    CHECK(degree_s(moved) == floer_grading(moved));
  }
}

TEST_CASE("stored shift and grading must satisfy the grading equation") {
  size_t m = 2;
  SymplecticSpace sp(m);
  Mat A = Mat::identity(m);
  LagrangianGerm g = graph_germ(m, A, Rat(0), Rat(1) / 2);
  g.grading = canonical_graph_lift(sp, A);
  CHECK(grading_consistent(g));
  validate_germ(g);

  // Deck-shifted pairs stay consistent only when shift and loop move together.
  LagrangianGerm shifted = g;
  shifted.grading = prepend_generator_loops(*g.grading, 1);
  shifted.shift = Rat(1) / 2 - 1;
  CHECK(grading_consistent(shifted));
  validate_germ(shifted);

  LagrangianGerm broken = g;
  broken.grading = prepend_generator_loops(*g.grading, 1);
  CHECK_FALSE(grading_consistent(broken));
  expect_error(ErrorCode::InconsistentComponentData, [&] { validate_germ(broken); });

  LagrangianGerm no_shift = g;
  no_shift.shift.reset();
  CHECK(grading_consistent(no_shift));
  CHECK(effective_shift(no_shift) == Rat(1) / 2);

  LagrangianGerm no_grading = g;
  no_grading.grading.reset();
  CHECK(grading_consistent(no_grading));
  CHECK(effective_shift(no_grading) == Rat(1) / 2);
}

TEST_CASE("degree errors") {
  LagrangianGerm zero = graph_germ(1, Mat(1, 1), Rat(0), Rat(1) / 2);
  LagrangianGerm tilted = graph_germ(1, Mat{{Rat(1)}}, Rat(1), Rat(1) / 2);

  SUBCASE("non-integral degree") {
    LagrangianGerm odd = tilted;
    odd.shift = Rat(0);
    expect_error(ErrorCode::NonIntegralDegree, [&] { degree_s(component(zero, odd, 0)); });
  }
  SUBCASE("clean dimension must match the tangent intersection") {
    expect_error(ErrorCode::CleanViolation, [&] { degree_s(component(zero, tilted, 1)); });
    LagrangianGerm same = zero;
    same.primitive_value = Rat(5);
    expect_error(ErrorCode::CleanViolation, [&] { degree_s(component(zero, same, 0)); });
  }
  SUBCASE("germs must sit at one point with matching action gap") {
    CleanComponentRecord comp = component(zero, tilted, 0);
    comp.f21 = comp.f21 + 1;
    expect_error(ErrorCode::InconsistentComponentData, [&] { degree_s(comp); });
    CleanComponentRecord apart = component(zero, tilted, 0);
    apart.germ2.x.at(0, 0) = Rat(1);
    apart.germ2.xi.at(0, 0) = Rat(1);
    expect_error(ErrorCode::InconsistentComponentData, [&] { degree_s(apart); });
  }
  SUBCASE("missing shift data") {
    LagrangianGerm bare = tilted;
    bare.shift.reset();
    expect_error(ErrorCode::MissingGrading, [&] { degree_s(component(zero, bare, 0)); });
    expect_error(ErrorCode::MissingGrading,
                 [&] { floer_grading(component(zero, tilted, 0)); });
  }
  SUBCASE("normal Hessian validation") {
    expect_error(ErrorCode::DegenerateNormalHessian,
                 [&] { degree_s_morse_bott(2, 0, Mat(2, 2)); });
    expect_error(ErrorCode::SpaceMismatch,
                 [&] { degree_s_morse_bott(2, 1, Mat::identity(2)); });
    expect_error(ErrorCode::CleanViolation, [&] { degree_s_morse_bott(1, 2, Mat(0, 0)); });
    CHECK(degree_s_morse_bott(2, 2, Mat(0, 0)) == 0);
  }
  SUBCASE("shift must be a half-integer") {
    LagrangianGerm bad = tilted;
    bad.shift = Rat(1) / 3;
    expect_error(ErrorCode::BadInput, [&] { validate_germ(bad); });
  }
  SUBCASE("grading in a foreign space") {
    LagrangianGerm bad = tilted;
    bad.grading = PathLift::constant(SymplecticSpace(4));
    expect_error(ErrorCode::BaseMismatch, [&] { validate_germ(bad); });
  }
}

TEST_CASE("action value is the primitive gap") {
  LagrangianGerm g1 = graph_germ(2, Mat(2, 2), Rat(3) / 2, Rat(1) / 2);
  LagrangianGerm g2 = graph_germ(2, Mat::identity(2), Rat(-2), Rat(1) / 2);
  CleanComponentRecord comp = component(g1, g2, 0);
  CHECK(action_value(comp) == Rat(-7) / 2);
}
