// Acceptance gate: one line per criterion, nonzero exit if any fails. Each
// criterion recomputes its expectations through an independent oracle or a
// hand-frozen value, never through the code path it is checking.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lagdesk/harness.hpp"
#include "lagdesk/intervalsheaves.hpp"
#include "support/oracles.hpp"

using namespace lagdesk;

namespace {

struct Gate {
  int failures = 0;

  void run(int num, const std::string& label, double budget_s,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && elapsed >= budget_s) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num, label.c_str(),
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

Rat profile(size_t i, size_t n) {
  long w = static_cast<long>(std::min(i, n - i));
  return Rat(1) - Rat(4 * w, static_cast<long>(n));
}

Scenario circle_cosine(size_t n) {
  Scenario sc;
  sc.name = "cos";
  sc.manifold = circle(n);
  std::vector<Rat> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = profile(i, n);
  sc.phi1 = pl_from_vertex_values(sc.manifold, std::vector<Rat>(n, Rat(0)));
  sc.phi2 = pl_from_vertex_values(sc.manifold, v);
  sc.windows.push_back({RatX::neg_inf(), RatX::pos_inf()});
  sc.tasks.push_back("clean");
  return sc;
}

Scenario torus_heights(size_t n1, size_t n2, const Rat& a1, const Rat& a2) {
  Scenario sc;
  sc.name = "heights";
  sc.manifold = torus(n1, n2);
  std::vector<Rat> v(n1 * n2);
  for (size_t i = 0; i < n1; ++i)
    for (size_t j = 0; j < n2; ++j) v[i * n2 + j] = a1 * profile(i, n1) + a2 * profile(j, n2);
  sc.phi1 = pl_from_vertex_values(sc.manifold, std::vector<Rat>(n1 * n2, Rat(0)));
  sc.phi2 = pl_from_vertex_values(sc.manifold, v);
  sc.windows.push_back({RatX::neg_inf(), RatX::pos_inf()});
  sc.tasks.push_back("clean");
  return sc;
}

LagrangianGerm graded_graph_germ(size_t m, const Mat& A, const Rat& f) {
  SymplecticSpace sp(m);
  return LagrangianGerm{m,           Mat(m, 1), Mat(m, 1), graph_of_symmetric(sp, A),
                        f,           std::nullopt, canonical_graph_lift(sp, A)};
}

// Sorted distinct probe points pinning a step function on the line: every
// breakpoint, every midpoint between consecutive breakpoints, and one point
// beyond each end.
std::vector<Rat> probe_points(std::vector<Rat> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Rat> out;
  if (breaks.empty()) return {Rat(0)};
  out.push_back(breaks.front() - 1);
  for (size_t i = 0; i < breaks.size(); ++i) {
    out.push_back(breaks[i]);
    if (i + 1 < breaks.size()) out.push_back((breaks[i] + breaks[i + 1]) / 2);
  }
  out.push_back(breaks.back() + 1);
  return out;
}

bool criterion_inertia_axioms(std::string& detail) {
  rnd::Rng rng(101);
  for (int t = 0; t < 500; ++t) {
    SymplecticSpace s(1 + static_cast<size_t>(rng.upto(4)));
    LagrangianFrame a = rnd::random_lagrangian(rng, s), b = rnd::random_lagrangian(rng, s),
                    c = rnd::random_lagrangian(rng, s), d = rnd::random_lagrangian(rng, s);
    long tau = inertia_index(a, b, c);
    if (tau != -inertia_index(b, a, c) || tau != -inertia_index(a, c, b)) {
      detail = "antisymmetry failed at trial " + std::to_string(t);
      return false;
    }
    if (tau != inertia_index(a, b, d) + inertia_index(b, c, d) + inertia_index(c, a, d)) {
      detail = "cocycle failed at trial " + std::to_string(t);
      return false;
    }
    SymplecticSpace s2(1 + static_cast<size_t>(rng.upto(2)));
    LagrangianFrame a2 = rnd::random_lagrangian(rng, s2), b2 = rnd::random_lagrangian(rng, s2),
                    c2 = rnd::random_lagrangian(rng, s2);
    if (inertia_index(direct_sum_frame(a, a2), direct_sum_frame(b, b2),
                      direct_sum_frame(c, c2)) != tau + inertia_index(a2, b2, c2)) {
      detail = "direct-sum additivity failed at trial " + std::to_string(t);
      return false;
    }
    Mat U = rnd::random_symplectic(rng, s.n);
    if (inertia_index(apply_symplectic(U, a), apply_symplectic(U, b),
                      apply_symplectic(U, c)) != tau) {
      detail = "symplectic invariance failed at trial " + std::to_string(t);
      return false;
    }
  }
  return true;
}

bool criterion_graph_anchor(std::string& detail) {
  rnd::Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    size_t n = 1 + static_cast<size_t>(rng.upto(4));
    SymplecticSpace s(n);
    Mat A = rnd::random_symmetric(rng, n);
    long expected = -oracles::signature_by_sturm(A).sig();
    if (inertia_index(fiber(s), zero_section(s), graph_of_symmetric(s, A)) != expected) {
      detail = "trial " + std::to_string(t) + " disagreed with the root-counting oracle";
      return false;
    }
  }
  return true;
}

bool criterion_conified_tau(std::string& detail) {
  rnd::Rng rng(303);
  for (int t = 0; t < 200; ++t) {
    size_t m = 1 + static_cast<size_t>(rng.upto(3));
    SymplecticSpace sp(m);
    Mat xi(m, 1);
    for (size_t i = 0; i < m; ++i) xi.at(i, 0) = rng.rat();
    LagrangianFrame t1 = rnd::random_lagrangian(rng, sp);
    LagrangianFrame t2 = rnd::random_lagrangian(rng, sp);
    long base = inertia_index(t2, t1, fiber(sp));
    LagrangianFrame c2 = conify_tangent({m, xi, t2}, FSide::second);
    LagrangianFrame c1 = conify_tangent({m, xi, t1}, FSide::first);
    if (inertia_index(c2, c1, fiber(c1.space)) != base) {
      detail = "trial " + std::to_string(t) + ": conified index differs from the base index";
      return false;
    }
  }
  return true;
}

bool criterion_path_index_axioms(std::string& detail) {
  rnd::Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    SymplecticSpace s(1 + static_cast<size_t>(rng.upto(2)));
    PathLift l1 = rnd::random_path_lift(rng, s, 2);
    PathLift l2 = rnd::random_path_lift(rng, s, 2);
    PathLift l3 = rnd::random_path_lift(rng, s, 2);
    Rat mu12 = maslov_index(l1, l2);
    if (mu12 != -maslov_index(l2, l1)) {
      detail = "antisymmetry failed at trial " + std::to_string(t);
      return false;
    }
    Rat chain = mu12 + maslov_index(l2, l3) + maslov_index(l3, l1);
    long tau = inertia_index(l1.endpoint(), l2.endpoint(), l3.endpoint());
    if (chain != Rat(tau) / 2) {
      detail = "coboundary failed at trial " + std::to_string(t);
      return false;
    }
    Rat parity =
        (Rat(static_cast<long>(intersection_dim(l1.endpoint(), l2.endpoint()))) +
         Rat(static_cast<long>(s.n))) /
        2;
    if (!is_integer(mu12 - parity)) {
      detail = "parity failed at trial " + std::to_string(t);
      return false;
    }
    long wn = rng.range(-2, 2), wm = rng.range(-2, 2);
    if (maslov_index(prepend_generator_loops(l1, wn), prepend_generator_loops(l2, wm)) !=
        mu12 + Rat(wn - wm)) {
      detail = "deck shift failed at trial " + std::to_string(t);
      return false;
    }
  }
  return true;
}

bool criterion_graph_degrees(std::string& detail) {
  rnd::Rng rng(505);
  int done = 0;
  while (done < 200) {
    size_t m = 1 + static_cast<size_t>(rng.upto(3));
    Mat A1 = rnd::random_symmetric(rng, m), A2 = rnd::random_symmetric(rng, m);
    Mat D = A2 - A1;
    if (D.rank() != m) continue;  // transverse pairs only
    CleanComponentRecord comp{0, {1}, graded_graph_germ(m, A1, rng.rat()),
                              graded_graph_germ(m, A2, rng.rat()), Rat(0), 0};
    comp.f21 = comp.germ2.primitive_value - comp.germ1.primitive_value;
    long morse = static_cast<long>(oracles::signature_by_sturm(D).neg);
    comp.s = morse;
    if (degree_s(comp) != morse) {
      detail = "degree differs from the Morse index at trial " + std::to_string(done);
      return false;
    }
    if (floer_grading(comp) != morse) {
      detail = "grading difference differs from the Morse index at trial " +
               std::to_string(done);
      return false;
    }
    ++done;
  }
  return true;
}

bool criterion_clean_scenarios(std::string& detail) {
  // (a) circle: both sides equal the circle Betti numbers in every window.
  Scenario cs = circle_cosine(64);
  cs.windows = {{RatX::neg_inf(), RatX::pos_inf()},
                {RatX(Rat(-2)), RatX::pos_inf()},
                {RatX(Rat(-2)), RatX(Rat(2))},
                {RatX(Rat(-3, 2)), RatX(Rat(3, 2))},
                {RatX(Rat(-9, 8)), RatX(Rat(2))}};
  Report ra = verify_clean(cs);
  if (!ra.pass || ra.windows.size() != 5) {
    detail = "circle verification failed";
    return false;
  }
  for (const auto& w : ra.windows) {
    if (w.cells.size() != 2) {
      detail = "circle window missing a degree line";
      return false;
    }
    for (const auto& cell : w.cells) {
      long target = betti(cs.manifold, static_cast<size_t>(cell.k));
      if (!cell.rhs || cell.lhs != target || *cell.rhs != target) {
        detail = "circle window count differs from the Betti number";
        return false;
      }
    }
  }

  // (b) four transverse points on the large torus: per-degree 1, 2, 1.
  Report rb = verify_clean(torus_heights(32, 32, Rat(1), Rat(1, 3)));
  if (!rb.pass || rb.components.size() != 4 || !rb.corollary ||
      rb.corollary->components_total != 4 || rb.corollary->manifold_total != 4) {
    detail = "torus point scenario failed";
    return false;
  }
  std::vector<long> per_degree = {1, 2, 1};
  for (const auto& cell : rb.windows.at(0).cells) {
    if (!cell.rhs || cell.lhs != per_degree.at(static_cast<size_t>(cell.k)) ||
        *cell.rhs != cell.lhs) {
      detail = "torus per-degree counts differ from (1, 2, 1)";
      return false;
    }
  }

  // (c) two clean circles on the large torus: totals and crossing equalities.
  Scenario circles = torus_heights(32, 32, Rat(1), Rat(0));
  circles.hints = {{Rat(-1), Mat{{Rat(2)}}}, {Rat(1), Mat{{Rat(-2)}}}};
  Report rc = verify_clean(circles);
  if (!rc.pass || rc.components.size() != 2 || !rc.corollary ||
      rc.corollary->components_total != 4 || rc.corollary->manifold_total != 4) {
    detail = "torus circle scenario failed";
    return false;
  }
  if (rc.levels.empty()) {
    detail = "torus circle scenario produced no crossing lines";
    return false;
  }
  for (const auto& l : rc.levels) {
    if (l.lhs != l.rhs) {
      detail = "crossing equality failed at level " + rat_str(l.c);
      return false;
    }
  }
  return true;
}

bool criterion_flat_models(std::string& detail) {
  Report one = verify_appendix_a(AppendixExample::one);
  if (!one.pass || !one.appendix || one.appendix->contribution != 1 ||
      one.appendix->bound != 1 || one.appendix->transverse != 1) {
    detail = "opposite-side model gave the wrong contribution or bound";
    return false;
  }
  Report two = verify_appendix_a(AppendixExample::two);
  if (!two.pass || !two.appendix || two.appendix->contribution != 0 ||
      two.appendix->bound != 2 || two.appendix->transverse != 2) {
    detail = "same-side model gave the wrong contribution or bound";
    return false;
  }
  return true;
}

bool criterion_point_windows(std::string& detail) {
  rnd::Rng rng(808);
  for (int t = 0; t < 100; ++t) {
    Rat f1 = rng.rat(), f2 = rng.rat();
    RatX a, b;
    if (t % 10 == 0) {
      a = RatX::neg_inf();
      b = t % 20 == 0 ? RatX::pos_inf() : RatX(rng.rat(8, 3));
    } else if (t % 7 == 0) {
      a = RatX(rng.rat(8, 3));
      b = RatX::pos_inf();
    } else {
      Rat r1 = rng.rat(8, 3), r2 = rng.rat(8, 3);
      if (r1 == r2) r2 = r1 + 1;
      a = RatX(std::min(r1, r2));
      b = RatX(std::max(r1, r2));
    }

    Scenario sc;
    sc.manifold = CellComplex::from_cells({0}, {{}});
    sc.phi1 = pl_from_vertex_values(sc.manifold, {f1});
    sc.phi2 = pl_from_vertex_values(sc.manifold, {f2});
    sc.windows.push_back({RatX::neg_inf(), RatX::pos_inf()});

    long sheaf_dim =
        windowed_sections(hom_star(IntervalSheaf::ray(-f2), IntervalSheaf::ray(-f1)), a, b)
            .dim(0);
    long lhs = lhs_count(resolve_components(sc), a, b, 0);
    std::optional<long> rhs = rhs_count(sc, a, b, 0);
    if (sheaf_dim < 0 || sheaf_dim > 1 || lhs != sheaf_dim || !rhs || *rhs != sheaf_dim) {
      detail = "trial " + std::to_string(t) + ": sheaf window and component count differ";
      return false;
    }
  }
  return true;
}

bool criterion_stabilized_dims(std::string& detail) {
  Report rs1 = verify_cohlagr(circle_cosine(64));
  if (!rs1.stabilization || rs1.stabilization->betti != std::vector<long>{1, 1} ||
      rs1.stabilization->threshold != Rat(2)) {
    detail = "circle dimensions did not stabilize to (1, 1) at half-width 2";
    return false;
  }
  Report rs2 = verify_cohlagr(torus_heights(16, 16, Rat(1), Rat(1, 3)));
  if (!rs2.stabilization || rs2.stabilization->betti != std::vector<long>{1, 2, 1}) {
    detail = "torus dimensions did not stabilize to (1, 2, 1)";
    return false;
  }
  Scenario sphere;
  sphere.manifold = sphere2(1);
  size_t nv = sphere.manifold.num_vertices();
  std::vector<Rat> v(nv);
  for (size_t i = 0; i < nv; ++i) v[i] = Rat(static_cast<long>(i % 5)) - 2;
  sphere.phi1 = pl_from_vertex_values(sphere.manifold, std::vector<Rat>(nv, Rat(0)));
  sphere.phi2 = pl_from_vertex_values(sphere.manifold, v);
  sphere.windows.push_back({RatX::neg_inf(), RatX::pos_inf()});
  Report rs3 = verify_cohlagr(sphere);
  if (!rs3.stabilization || rs3.stabilization->betti != std::vector<long>{1, 0, 1}) {
    detail = "sphere dimensions did not stabilize to (1, 0, 1)";
    return false;
  }
  return true;
}

bool criterion_oracle_tables(std::string& detail) {
  rnd::Rng rng(1010);

  // Barcode window dimensions against brute-force pair ranks.
  auto check_windows = [&](const CellComplex& M, size_t kmax) -> bool {
    size_t nv = M.num_vertices();
    std::vector<Rat> vals(nv);
    for (size_t i = 0; i < nv; ++i) vals[i] = rng.rat(6, 2);
    PLFunction phi = pl_from_vertex_values(M, vals);
    Barcode code = barcode_all(M, phi);
    for (int w = 0; w < 6; ++w) {
      RatX a, b;
      if (w == 0) {
        a = RatX::neg_inf();
        b = RatX::pos_inf();
      } else {
        Rat r1 = rng.rat(8, 2), r2 = rng.rat(8, 2);
        if (r1 == r2) r2 = r1 + 1;
        a = RatX(std::min(r1, r2));
        b = RatX(std::max(r1, r2));
      }
      for (size_t k = 0; k <= kmax; ++k) {
        if (relative_dim(code, a, b, k) != oracles::pair_dim_direct(M, phi, a, b, k))
          return false;
      }
    }
    return true;
  };
  CellComplex ring = circle(16);
  for (int t = 0; t < 50; ++t) {
    if (!check_windows(ring, 1)) {
      detail = "circle window dims differ from direct pair ranks at trial " +
               std::to_string(t);
      return false;
    }
  }
  CellComplex donut = torus(8, 8);
  for (int t = 0; t < 10; ++t) {
    if (!check_windows(donut, 2)) {
      detail = "torus window dims differ from direct pair ranks at trial " + std::to_string(t);
      return false;
    }
  }

  // Convolution and morphism-object tables for every generator pair over a
  // fixed breakpoint grid, against the fiberwise and representability oracles.
  std::vector<Rat> grid = {Rat(-3), Rat(-3, 2), Rat(0), Rat(1), Rat(5, 2), Rat(4)};
  std::vector<IntervalSheaf> gens;
  for (size_t i = 0; i < grid.size(); ++i) {
    gens.push_back(IntervalSheaf::ray(grid[i]));
    for (size_t j = i + 1; j < grid.size(); ++j)
      gens.push_back(IntervalSheaf::bar(grid[i], grid[j]));
  }
  std::vector<Rat> sums, diffs;
  for (const Rat& x : grid)
    for (const Rat& y : grid) {
      sums.push_back(x + y);
      diffs.push_back(x - y);
    }
  std::vector<Rat> sum_probes = probe_points(sums);
  std::vector<Rat> diff_probes = probe_points(diffs);
  for (const IntervalSheaf& f : gens) {
    for (const IntervalSheaf& g : gens) {
      IntervalSheaf conv = convolve(f, g);
      for (const Rat& t : sum_probes) {
        if (oracles::sheaf_stalk(conv, t) != oracles::convolve_stalk(f, g, t)) {
          detail = "convolution stalk differs from the fiberwise oracle at " + rat_str(t);
          return false;
        }
      }
      IntervalSheaf hom = hom_star(f, g);
      for (const Rat& c : diff_probes) {
        GradedDim w = windowed_sections(hom, RatX(c), RatX::pos_inf());
        for (long k = -2; k <= 2; ++k) {
          if (w.dim(k) != oracles::sheaf_hom_dim(translate(f, c), g, k)) {
            detail = "morphism sections at offset " + rat_str(c) +
                     " differ from the normal-form oracle";
            return false;
          }
        }
      }
    }
  }

  // Symmetric signatures against Sturm root counting.
  for (int t = 0; t < 100; ++t) {
    size_t n = 1 + static_cast<size_t>(rng.upto(5));
    Mat A = rnd::random_symmetric(rng, n);
    if (!(signature_of_symmetric(A) == oracles::signature_by_sturm(A))) {
      detail = "signature differs from Sturm counts at trial " + std::to_string(t);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "inertia index axioms on random planes", 30, criterion_inertia_axioms);
  gate.run(2, "graph-plane anchor matches the root-counting oracle", 0, criterion_graph_anchor);
  gate.run(3, "conified tangent data preserves the inertia index", 0, criterion_conified_tau);
  gate.run(4, "path index axioms: antisymmetry, coboundary, parity, deck shifts", 60,
           criterion_path_index_axioms);
  gate.run(5, "transverse graph degrees equal Morse index and grading difference", 0,
           criterion_graph_degrees);
  gate.run(6, "clean verification on circle and torus scenarios", 60,
           criterion_clean_scenarios);
  gate.run(7, "flat-component models bound the transverse count", 0, criterion_flat_models);
  gate.run(8, "point scenarios: sheaf windows equal component counts", 0,
           criterion_point_windows);
  gate.run(9, "stabilized window dimensions recover the Betti numbers", 0,
           criterion_stabilized_dims);
  gate.run(10, "barcode windows, sheaf tables, and signatures match their oracles", 0,
           criterion_oracle_tables);
  if (gate.failures) {
    std::printf("%d criterion(s) failed\n", gate.failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
