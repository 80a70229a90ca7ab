#include "lagdesk/propsuite.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "lagdesk/harness.hpp"
#include "lagdesk/intervalsheaves.hpp"
#include "lagdesk/randgen.hpp"

namespace lagdesk {
namespace {

using Check = std::function<std::optional<std::string>(rnd::Rng&, long)>;

SuiteResult run_suite(const std::string& name, uint64_t seed, long trials, const Check& check) {
  SuiteResult r{name, trials, 0, {}};
  rnd::Rng rng(seed);
  for (long t = 0; t < trials; ++t) {
    // A throwing trial is a counterexample, not a reason to abort the run.
    std::optional<std::string> bad;
    try {
      bad = check(rng, t);
    } catch (const std::exception& e) {
      bad = std::string("threw: ") + e.what();
    }
    if (bad) {
      ++r.failures;
      if (r.counterexamples.size() < 3)
        r.counterexamples.push_back("trial " + std::to_string(t) + ": " + *bad);
    }
  }
  return r;
}

std::optional<std::string> ok() { return std::nullopt; }

// --- interval-sheaf helpers (normal-form generators) ------------------------

Summand random_normal_summand(rnd::Rng& rng) {
  Rat a = rng.rat(8, 3);
  long deg = rng.range(-2, 2);
  if (rng.coin()) return Summand{iv_closed_ray(a), deg};
  Rat len = Rat(1 + rng.upto(4)) / Rat(1 + rng.upto(2));
  return Summand{iv_closed_open(a, a + len), deg};
}

IntervalSheaf random_normal_sheaf(rnd::Rng& rng, long max_summands) {
  IntervalSheaf f = IntervalSheaf::zero();
  long n = 1 + rng.upto(max_summands);
  for (long i = 0; i < n; ++i) f.summands.push_back(random_normal_summand(rng));
  return f;
}

std::string gd_str(const GradedDim& g) { return graded_str(g); }

}  // namespace

bool PropReport::all_pass() const {
  for (const auto& s : suites)
    if (s.failures) return false;
  return true;
}

std::string PropReport::render_machine() const {
  nlohmann::ordered_json o;
  o["format_version"] = 1;
  o["kind"] = "property_suites";
  o["seed"] = seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["failures"] = s.failures;
    if (!s.counterexamples.empty()) j["counterexamples"] = s.counterexamples;
    arr.push_back(std::move(j));
  }
  o["suites"] = std::move(arr);
  o["result"] = all_pass() ? "pass" : "fail";
  return o.dump(2) + "\n";
}

std::string PropReport::render_table() const {
  std::ostringstream out;
  out << "property suites (seed " << seed << ")\n";
  for (const auto& s : suites) {
    out << "  " << s.name << ": " << (s.failures ? "FAIL" : "pass") << " (" << s.trials
        << " trials";
    if (s.failures) out << ", " << s.failures << " failures";
    out << ")\n";
    for (const auto& c : s.counterexamples) out << "    " << c << "\n";
  }
  out << "result: " << (all_pass() ? "pass" : "fail") << "\n";
  return out.str();
}

PropReport run_property_suites(uint64_t seed, const PropSizes& sizes, const PropOptions& opt) {
  PropReport rep;
  rep.seed = seed;
  uint64_t s0 = seed * 1000003 + 17;
  auto sub = [&](uint64_t idx) { return s0 + idx * 7919; };
  const long T = sizes.trials;
  const size_t cap = sizes.max_half_dim;

  rep.suites.push_back(run_suite(
      "inertia-antisymmetry-cocycle", sub(1), T, [&](rnd::Rng& rng, long) {
        SymplecticSpace s(1 + static_cast<size_t>(rng.upto(static_cast<long>(cap))));
        LagrangianFrame a = rnd::random_lagrangian(rng, s), b = rnd::random_lagrangian(rng, s),
                        c = rnd::random_lagrangian(rng, s), d = rnd::random_lagrangian(rng, s);
        long t = inertia_index(a, b, c);
        if (t != -inertia_index(b, a, c)) return std::optional<std::string>("swap 12 not odd");
        if (t != -inertia_index(a, c, b)) return std::optional<std::string>("swap 23 not odd");
        long chain = inertia_index(a, b, d) + inertia_index(b, c, d) + inertia_index(c, a, d);
        if (t != chain) return std::optional<std::string>("cocycle identity broke");
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "inertia-sum-and-sp-invariance", sub(2), T, [&](rnd::Rng& rng, long) {
        SymplecticSpace s1(1), s2(1 + static_cast<size_t>(rng.upto(static_cast<long>(cap))));
        LagrangianFrame a1 = rnd::random_lagrangian(rng, s1),
                        b1 = rnd::random_lagrangian(rng, s1),
                        c1 = rnd::random_lagrangian(rng, s1);
        LagrangianFrame a2 = rnd::random_lagrangian(rng, s2),
                        b2 = rnd::random_lagrangian(rng, s2),
                        c2 = rnd::random_lagrangian(rng, s2);
        long sum = inertia_index(direct_sum_frame(a1, a2), direct_sum_frame(b1, b2),
                                 direct_sum_frame(c1, c2));
        if (sum != inertia_index(a1, b1, c1) + inertia_index(a2, b2, c2))
          return std::optional<std::string>("direct-sum additivity broke");
        Mat U = rnd::random_symplectic(rng, s2.n);
        if (inertia_index(apply_symplectic(U, a2), apply_symplectic(U, b2),
                          apply_symplectic(U, c2)) != inertia_index(a2, b2, c2))
          return std::optional<std::string>("symplectic invariance broke");
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "maslov-coboundary", sub(3), T, [&](rnd::Rng& rng, long trial) -> std::optional<std::string> {
        SymplecticSpace s(trial == 0 ? 1
                                     : 1 + static_cast<size_t>(rng.upto(static_cast<long>(cap))));
        // Trial 0 is a pinned triple with nonzero inertia term so the
        // corrupted-sign hook is guaranteed to be visible.
        PathLift l1 = trial == 0 ? PathLift::constant(s) : rnd::random_path_lift(rng, s, 2);
        PathLift l2 = trial == 0 ? canonical_graph_lift(s, Mat(s.n, s.n))
                                 : rnd::random_path_lift(rng, s, 2);
        PathLift l3 = trial == 0 ? canonical_graph_lift(s, Mat::identity(s.n))
                                 : rnd::random_path_lift(rng, s, 2);
        Rat lhs = maslov_index(l1, l2) + maslov_index(l2, l3) + maslov_index(l3, l1);
        long tau = inertia_index(l1.endpoint(), l2.endpoint(), l3.endpoint());
        if (opt.corrupt_tau_sign) tau = -tau;
        if (lhs != Rat(tau) / 2)
          return "mu chain " + rat_str(lhs) + " != tau/2 " + rat_str(Rat(tau) / 2);
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "maslov-deck-shift", sub(4), T, [&](rnd::Rng& rng, long) -> std::optional<std::string> {
        SymplecticSpace s(1 + static_cast<size_t>(rng.upto(static_cast<long>(cap))));
        PathLift l1 = rnd::random_path_lift(rng, s, 2);
        PathLift l2 = rnd::random_path_lift(rng, s, 2);
        long n = rng.range(-2, 2), m = rng.range(-2, 2);
        Rat base = maslov_index(l1, l2);
        Rat moved =
            maslov_index(prepend_generator_loops(l1, n), prepend_generator_loops(l2, m));
        if (moved != base + Rat(n - m))
          return "deck shift " + rat_str(moved - base) + " != " + std::to_string(n - m);
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "graph-degree-consistency", sub(5), T, [&](rnd::Rng& rng, long) -> std::optional<std::string> {
        size_t m = 1 + static_cast<size_t>(rng.upto(2));
        SymplecticSpace sp(m);
        Mat A1 = rnd::random_symmetric(rng, m), A2 = rnd::random_symmetric(rng, m);
        Mat D = A2 - A1;
        if (D.rank() != m) return ok();  // only transverse pairs are in scope
        auto germ = [&](const Mat& A) {
          return LagrangianGerm{m,           Mat(m, 1),    Mat(m, 1),
                                graph_of_symmetric(sp, A), rng.rat(),    std::nullopt,
                                canonical_graph_lift(sp, A)};
        };
        CleanComponentRecord comp{0, {1}, germ(A1), germ(A2), Rat(0), 0};
        comp.f21 = comp.germ2.primitive_value - comp.germ1.primitive_value;
        long s = degree_s(comp);
        if (s != degree_s_morse_bott(m, 0, D))
          return std::optional<std::string>("degree != normal Hessian count");
        if (s != floer_grading(comp))
          return std::optional<std::string>("degree != floer grading");
        if (s != degree_s_conified(comp))
          return std::optional<std::string>("degree != conified route");
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "barcode-vs-sublevel", sub(6), T, [&](rnd::Rng& rng, long) -> std::optional<std::string> {
        size_t n = sizes.circle_size;
        CellComplex M = circle(n);
        std::vector<Rat> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = rng.rat(6, 2);
        PLFunction phi = pl_from_vertex_values(M, v);
        Barcode code = barcode_all(M, phi);
        std::vector<Rat> grid = v;
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        std::vector<Rat> samples;
        samples.push_back(grid.front() - 1);
        for (size_t i = 0; i + 1 < grid.size(); ++i)
          samples.push_back((grid[i] + grid[i + 1]) / 2);
        samples.push_back(grid.back() + 1);
        for (const Rat& c : samples) {
          CellComplex sub_complex = sublevel(M, phi, c);
          for (size_t k = 0; k <= 1; ++k) {
            long alive = 0;
            for (const Bar& b : code.bars)
              if (b.degree == k && b.birth < c && RatX(c) <= b.death) ++alive;
            long direct = sub_complex.num_cells() == 0 ? 0 : betti(sub_complex, k);
            if (alive != direct)
              return "at level " + rat_str(c) + " deg " + std::to_string(k) + ": bars " +
                     std::to_string(alive) + " != betti " + std::to_string(direct);
          }
        }
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "convolution-algebra", sub(7), T, [&](rnd::Rng& rng, long) -> std::optional<std::string> {
        IntervalSheaf f = random_normal_sheaf(rng, 2);
        IntervalSheaf g = random_normal_sheaf(rng, 2);
        IntervalSheaf h = random_normal_sheaf(rng, 2);
        IntervalSheaf unit = IntervalSheaf::ray(Rat(0));
        if (!same_object(convolve(unit, f), f))
          return std::optional<std::string>("unit law broke");
        if (!same_object(convolve(f, g), convolve(g, f)))
          return std::optional<std::string>("commutativity broke");
        if (!same_object(convolve(convolve(f, g), h), convolve(f, convolve(g, h))))
          return std::optional<std::string>("associativity broke");
        Rat c = rng.rat(5, 2);
        if (!same_object(convolve(translate(f, c), g), translate(convolve(f, g), c)))
          return std::optional<std::string>("translation compatibility broke");
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "windowed-sections", sub(8), T, [&](rnd::Rng& rng, long) -> std::optional<std::string> {
        IntervalSheaf f = random_normal_sheaf(rng, 2);
        IntervalSheaf g = random_normal_sheaf(rng, 2);
        GradedDim whole = windowed_sections(f, RatX::neg_inf(), RatX::pos_inf());
        if (whole != global_sections(f))
          return "windowed(-inf,inf) " + gd_str(whole) + " != global " +
                 gd_str(global_sections(f));
        // Named locals: entries() is a reference into the object, and C++20
        // does not extend a range-init temporary past the loop header.
        GradedDim gf = global_sections(f), gg = global_sections(g);
        GradedDim expect;
        for (const auto& [d, n] : gf.entries()) expect.add(d, n);
        for (const auto& [d, n] : gg.entries()) expect.add(d, n);
        if (global_sections(direct_sum(f, g)) != expect)
          return std::optional<std::string>("direct-sum additivity broke");
        Rat c = rng.rat(5, 2);
        if (global_sections(translate(f, c)) != global_sections(f))
          return std::optional<std::string>("translation invariance broke");
        return ok();
      }));

  rep.suites.push_back(run_suite(
      "crossing-equality", sub(9), T, [&](rnd::Rng& rng, long) -> std::optional<std::string> {
        size_t n = sizes.circle_size;
        // A random Morse PL function: distinct integer values in random order.
        std::vector<Rat> v(n);
        std::vector<long> perm(n);
        for (size_t i = 0; i < n; ++i) perm[i] = static_cast<long>(i);
        for (size_t i = n; i-- > 1;) {
          size_t j = static_cast<size_t>(rng.upto(static_cast<long>(i) + 1));
          std::swap(perm[i], perm[j]);
        }
        for (size_t i = 0; i < n; ++i) v[i] = Rat(perm[i]);
        Scenario sc;
        sc.name = "random-morse";
        sc.manifold = circle(n);
        sc.manifold_desc = "circle " + std::to_string(n);
        sc.graph_mode = true;
        sc.phi1 = pl_from_vertex_values(sc.manifold, std::vector<Rat>(n, Rat(0)));
        sc.phi2 = pl_from_vertex_values(sc.manifold, v);
        sc.windows.push_back({RatX::neg_inf(), RatX::pos_inf()});
        sc.tasks.push_back("clean");
        Report r1 = verify_clean(sc);
        if (!r1.pass) return std::optional<std::string>("clean verification failed");
        if (r1.levels.empty()) return std::optional<std::string>("no crossing lines produced");
        Report r2 = verify_clean(sc);
        if (r1.render_machine() != r2.render_machine())
          return std::optional<std::string>("machine report not deterministic");
        return ok();
      }));

  return rep;
}

}  // namespace lagdesk
