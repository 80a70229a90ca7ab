#include "lagdesk/harness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lagdesk/intervalsheaves.hpp"

namespace lagdesk {
namespace {

using ojson = nlohmann::ordered_json;

std::vector<Rat> vertex_values(const CellComplex& M, const PLFunction& phi) {
  std::vector<Rat> out;
  for (size_t v : M.cells_of_dim(0)) out.push_back(phi.cell_value[v]);
  return out;
}

PLFunction difference_function(const Scenario& sc) {
  std::vector<Rat> v1 = vertex_values(sc.manifold, sc.phi1);
  std::vector<Rat> v2 = vertex_values(sc.manifold, sc.phi2);
  std::vector<Rat> d(v1.size());
  for (size_t i = 0; i < v1.size(); ++i) d[i] = v2[i] - v1[i];
  return pl_from_vertex_values(sc.manifold, d);
}

// Half the minimal gap between distinct values; any band of this radius
// around a value contains no other value. 1/2 when there is nothing to
// separate.
Rat half_min_gap(std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2) return Rat(1, 2);
  Rat gap = values[1] - values[0];
  for (size_t i = 2; i < values.size(); ++i) {
    Rat d = values[i] - values[i - 1];
    if (d < gap) gap = d;
  }
  return gap / 2;
}

// Deterministic union-find: the class root is always the smallest member.
struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }
  size_t find(size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};

struct GraphResolution {
  PLFunction psi;
  Barcode code;
  std::vector<Rat> crit;
  Rat eps;  // half the minimal vertex-value gap
  std::vector<ResolvedComponent> comps;
};

GraphResolution resolve_graph(const Scenario& sc) {
  const CellComplex& M = sc.manifold;
  GraphResolution out{difference_function(sc), {}, {}, Rat(1, 2), {}};
  out.code = barcode_all(M, out.psi);
  out.crit = critical_values(out.code);
  std::vector<Rat> vv = vertex_values(M, out.psi);
  out.eps = half_min_gap(vv);

  std::map<Rat, std::vector<const ComponentHint*>> hints_at;
  for (const auto& h : sc.hints) {
    require(std::find(out.crit.begin(), out.crit.end(), h.level) != out.crit.end(),
            ErrorCode::BadScenario,
            "hessian hint at " + rat_str(h.level) + ", which is not a critical level");
    hints_at[h.level].push_back(&h);
  }

  const std::vector<size_t> verts = M.cells_of_dim(0);
  std::vector<long> vindex(M.num_cells(), -1);
  for (size_t i = 0; i < verts.size(); ++i) vindex[verts[i]] = static_cast<long>(i);
  size_t m = M.top_dim();

  for (const Rat& c : out.crit) {
    // For rational data the tolerance band around c holds exactly the
    // vertices with value c: eps is half the minimal distance between
    // distinct values.
    std::vector<char> in_band(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); ++i) {
      Rat d = vv[i] > c ? Rat(vv[i] - c) : Rat(c - vv[i]);
      in_band[i] = d < out.eps ? 1 : 0;
    }

    // Full subcomplex on the band vertices; union cells into components.
    UnionFind uf(verts.size());
    std::vector<size_t> level_cells;
    for (size_t id = 0; id < M.num_cells(); ++id) {
      bool all = true;
      for (size_t v : M.vertices_of(id)) {
        if (!in_band[vindex[v]]) {
          all = false;
          break;
        }
      }
      if (!all) continue;
      level_cells.push_back(id);
      size_t first = static_cast<size_t>(vindex[M.vertices_of(id)[0]]);
      for (size_t v : M.vertices_of(id)) uf.unite(first, static_cast<size_t>(vindex[v]));
    }

    // Homological events at this level locate the honest critical components;
    // a regular vertex that merely shares the value c produces none and its
    // band component is discarded.
    struct Ev {
      size_t cell;
      size_t degree;
      bool birth;
    };
    std::map<size_t, std::vector<Ev>> by_root;
    for (const Bar& b : out.code.bars) {
      std::vector<Ev> here;
      if (b.birth == c) here.push_back({b.birth_cell, b.degree, true});
      if (!b.death.is_pos_inf() && b.death.value() == c)
        here.push_back({b.death_cell, b.degree, false});
      for (const Ev& e : here) {
        std::set<size_t> roots;
        for (size_t v : M.vertices_of(e.cell)) {
          long i = vindex[v];
          if (in_band[i]) roots.insert(uf.find(static_cast<size_t>(i)));
        }
        require(roots.size() == 1, ErrorCode::BadScenario,
                "critical cell does not meet exactly one level-set component");
        by_root[*roots.begin()].push_back(e);
      }
    }

    const auto& hints = hints_at.count(c) ? hints_at.at(c) : std::vector<const ComponentHint*>{};
    require(hints.empty() || hints.size() == by_root.size(), ErrorCode::BadScenario,
            "hessian hints at level " + rat_str(c) + " must match its component count");

    size_t hint_idx = 0;
    for (const auto& [root, evs] : by_root) {
      std::vector<size_t> dims;
      std::vector<std::vector<size_t>> bnd;
      std::map<size_t, size_t> renum;
      size_t next = 0;
      for (size_t id : level_cells) {
        if (uf.find(static_cast<size_t>(vindex[M.vertices_of(id)[0]])) != root) continue;
        renum[id] = next++;
      }
      for (const auto& [id, _] : renum) {
        dims.push_back(M.dim(id));
        std::vector<size_t> fb;
        for (size_t f : M.boundary(id)) fb.push_back(renum.at(f));
        bnd.push_back(std::move(fb));
      }
      CellComplex comp = CellComplex::from_cells(std::move(dims), std::move(bnd));
      size_t dim_c = comp.top_dim();

      long s;
      if (!hints.empty()) {
        s = degree_s_morse_bott(m, dim_c, hints[hint_idx++]->hessian_normal);
      } else {
        require(dim_c == 0, ErrorCode::BadScenario,
                "positive-dimensional component at level " + rat_str(c) +
                    " needs a hessian hint");
        require(evs.size() == 1, ErrorCode::BadScenario,
                "degenerate critical vertex at level " + rat_str(c) +
                    " (not Morse); supply a hessian hint");
        s = static_cast<long>(evs[0].degree) + (evs[0].birth ? 0 : 1);
      }
      out.comps.push_back({c, dim_c, s, betti_all(comp)});
    }
  }
  return out;
}

std::vector<ResolvedComponent> resolve_records(const Scenario& sc) {
  std::vector<ResolvedComponent> out;
  for (const auto& rec : sc.records) {
    long s = degree_s(rec);
    require(s == rec.s, ErrorCode::InconsistentComponentData,
            "stored index " + std::to_string(rec.s) + " but the germ data gives " +
                std::to_string(s));
    out.push_back({action_value(rec), rec.dim_c, s, rec.betti});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ResolvedComponent& a, const ResolvedComponent& b) {
                     return a.f21 < b.f21;
                   });
  return out;
}

bool has_task(const Scenario& sc, const std::string& name) {
  return std::find(sc.tasks.begin(), sc.tasks.end(), name) != sc.tasks.end();
}

std::string verdict_str(bool pass) { return pass ? "pass" : "fail"; }

}  // namespace

std::vector<ResolvedComponent> resolve_components(const Scenario& sc) {
  return sc.graph_mode ? resolve_graph(sc).comps : resolve_records(sc);
}

long lhs_count(const std::vector<ResolvedComponent>& comps, const RatX& a, const RatX& b,
               long k) {
  require(a < b, ErrorCode::BadWindow, "window needs a < b");
  long total = 0;
  for (const auto& c : comps) {
    RatX f(c.f21);
    if (a <= f && f < b) {
      long i = k - c.s;
      if (i >= 0 && i < static_cast<long>(c.betti.size())) total += c.betti[i];
    }
  }
  return total;
}

std::optional<long> rhs_count(const Scenario& sc, const RatX& a, const RatX& b, long k) {
  require(a < b, ErrorCode::BadWindow, "window needs a < b");
  if (sc.graph_mode) {
    if (k < 0) return 0;
    return relative_dim(sc.manifold, difference_function(sc), a, b, static_cast<size_t>(k));
  }
  if (a.is_neg_inf() && b.is_pos_inf()) {
    if (k < 0 || k > static_cast<long>(sc.manifold.top_dim())) return 0;
    return betti(sc.manifold, static_cast<size_t>(k));
  }
  return std::nullopt;
}

Report verify_clean(const Scenario& sc) {
  Report rep;
  rep.kind = "verify_clean";
  rep.scenario = sc.name;
  rep.mode = sc.graph_mode ? "graph" : "components";

  std::optional<GraphResolution> gr;
  if (sc.graph_mode) {
    gr = resolve_graph(sc);
    rep.components = gr->comps;
  } else {
    rep.components = resolve_records(sc);
  }

  // Regularization data: windows must avoid the action values; offending
  // finite endpoints move down by half the minimal value gap, which changes
  // neither side of any count.
  std::set<Rat> crit_set;
  for (const auto& c : rep.components) crit_set.insert(c.f21);
  Rat shift = gr ? gr->eps : [&] {
    std::vector<Rat> levels(crit_set.begin(), crit_set.end());
    return half_min_gap(levels);
  }();
  auto regularize = [&](const RatX& x, bool& flag) -> RatX {
    if (x.is_neg_inf() || x.is_pos_inf() || !crit_set.count(x.value())) return x;
    flag = true;
    return RatX(Rat(x.value() - shift));
  };

  long kmax = static_cast<long>(sc.manifold.top_dim());
  long kmin = 0;
  for (const auto& c : rep.components) {
    kmax = std::max(kmax, c.s + static_cast<long>(c.betti.size()) - 1);
    kmin = std::min(kmin, c.s);
  }

  for (const Window& w : sc.windows) {
    WindowReport wr{w.a, w.b, w.a, w.b, false, false, {}};
    wr.eff_a = regularize(w.a, wr.perturbed_a);
    wr.eff_b = regularize(w.b, wr.perturbed_b);
    if (!(wr.eff_a < wr.eff_b)) {
      // Regularizing b collided with a non-critical a just beneath it; such a
      // window holds no action value, so the original endpoints are already
      // regular enough for both counts (everything is zero).
      wr.eff_a = w.a;
      wr.eff_b = w.b;
      wr.perturbed_a = wr.perturbed_b = false;
    }
    for (long k = kmin; k <= kmax; ++k) {
      long lhs = lhs_count(rep.components, wr.eff_a, wr.eff_b, k);
      std::optional<long> rhs;
      if (sc.graph_mode) {
        rhs = k < 0 ? 0 : relative_dim(gr->code, wr.eff_a, wr.eff_b, static_cast<size_t>(k));
      } else if (wr.eff_a.is_neg_inf() && wr.eff_b.is_pos_inf()) {
        rhs = (k < 0 || k > static_cast<long>(sc.manifold.top_dim()))
                  ? 0
                  : betti(sc.manifold, static_cast<size_t>(k));
      }
      if (rhs && lhs == 0 && *rhs == 0) continue;
      if (!rhs && lhs == 0) continue;
      WindowCell cell{k, lhs, rhs, !rhs || lhs >= *rhs};
      if (!cell.pass) rep.pass = false;
      wr.cells.push_back(cell);
    }
    rep.windows.push_back(std::move(wr));
  }

  // Crossing equalities: over a window isolating one critical value the two
  // sides agree exactly, not just by inequality.
  if (sc.graph_mode) {
    for (const Rat& c : gr->crit) {
      RatX lo{Rat(c - gr->eps)}, hi{Rat(c + gr->eps)};
      for (long k = kmin; k <= kmax; ++k) {
        long lhs = lhs_count(rep.components, lo, hi, k);
        long rhs = k < 0 ? 0 : relative_dim(gr->code, lo, hi, static_cast<size_t>(k));
        if (lhs == 0 && rhs == 0) continue;
        LevelCell lc{c, k, lhs, rhs, lhs == rhs};
        if (!lc.pass) rep.pass = false;
        rep.levels.push_back(lc);
      }
    }
  }

  long comp_total = 0;
  for (const auto& c : rep.components)
    for (long b : c.betti) comp_total += b;
  long manifold_total = 0;
  for (long b : betti_all(sc.manifold)) manifold_total += b;
  rep.corollary = CorollaryLine{comp_total, manifold_total, comp_total >= manifold_total};
  if (!rep.corollary->pass) rep.pass = false;

  if (has_task(sc, "cohlagr")) {
    Report sub = verify_cohlagr(sc);
    rep.stabilization = sub.stabilization;
    if (!sub.pass) rep.pass = false;
  }
  return rep;
}

Report verify_cohlagr(const Scenario& sc) {
  require(sc.graph_mode, ErrorCode::BadScenario, "the stabilization sweep needs graph mode");
  Report rep;
  rep.kind = "verify_cohlagr";
  rep.scenario = sc.name;
  rep.mode = "graph";

  const CellComplex& M = sc.manifold;
  Barcode code = barcode_all(M, difference_function(sc));
  std::vector<long> target = betti_all(M);
  Rat maxabs(0);
  for (const Rat& c : critical_values(code)) {
    Rat a = abs(c);
    if (a > maxabs) maxabs = a;
  }

  // Doubling sweep of symmetric windows (-c, c); once c clears every critical
  // value the window dimensions are the global ones, so termination is
  // guaranteed for well-formed data and the cap only guards engine bugs.
  const Rat cap(1 << 20);
  std::vector<std::pair<Rat, bool>> sweep;
  Rat c(1);
  while (true) {
    bool ok = true;
    for (size_t k = 0; k < target.size(); ++k) {
      if (relative_dim(code, RatX(Rat(-c)), RatX(c), k) != target[k]) {
        ok = false;
        break;
      }
    }
    sweep.push_back({c, ok});
    if (ok && c > maxabs) break;
    require(c <= cap, ErrorCode::NoStabilization,
            "window dimensions did not stabilize by half-width 2^20");
    c = c * 2;
  }
  Rat threshold = sweep.back().first;
  for (size_t i = sweep.size(); i-- > 0;) {
    if (!sweep[i].second) break;
    threshold = sweep[i].first;
  }
  rep.stabilization = StabilizationReport{target, threshold};
  return rep;
}

Report verify_appendix_a(AppendixExample ex) {
  Report rep;
  rep.kind = "appendix_a";
  rep.scenario = ex == AppendixExample::one ? "one" : "two";
  rep.mode = "graph";

  // Ambient circle: the global bound is its total F2 cohomology.
  long rhs_total = 0;
  for (long b : betti_all(circle(8))) rhs_total += b;

  // Flat component [-1, 1] of the zero section against the graph. Leaving on
  // opposite sides closes both ends of the model interval (ordinary
  // cohomology of a closed interval: one dimension); leaving on the same side
  // closes only one (compactly supported cohomology of [a, b): zero).
  GradedDim g = degenerate_contribution(ex == AppendixExample::one
                                            ? DegenerateModel::closed_closed
                                            : DegenerateModel::closed_open,
                                        Rat(-1), Rat(1));
  AppendixReport ar;
  for (const auto& [deg, n] : g.entries()) {
    ar.contribution += n;
    while (static_cast<long>(ar.contribution_by_degree.size()) <= deg)
      ar.contribution_by_degree.push_back(0);
    ar.contribution_by_degree[static_cast<size_t>(deg)] = n;
  }
  // The primitive must return to its start around the circle, so its
  // derivative changes sign at least once more after an opposite-side
  // departure and at least twice more after a same-side one; the minimal
  // models realize exactly that.
  ar.transverse = ex == AppendixExample::one ? 1 : 2;
  ar.rhs_total = rhs_total;
  ar.bound = rhs_total - ar.contribution;
  rep.pass = ar.transverse + ar.contribution >= ar.rhs_total;
  rep.appendix = ar;
  return rep;
}

std::string Report::render_machine() const {
  ojson o;
  o["format_version"] = 1;
  o["kind"] = kind;
  o["scenario"] = scenario;
  o["mode"] = mode;
  if (!components.empty()) {
    ojson arr = ojson::array();
    for (const auto& c : components) {
      ojson j;
      j["f21"] = rat_str(c.f21);
      j["dim"] = c.dim_c;
      j["s"] = c.s;
      j["betti"] = c.betti;
      arr.push_back(std::move(j));
    }
    o["components"] = std::move(arr);
  }
  if (!windows.empty()) {
    ojson arr = ojson::array();
    for (const auto& w : windows) {
      ojson j;
      j["a"] = ratx_str(w.a);
      j["b"] = ratx_str(w.b);
      if (w.perturbed_a) j["effective_a"] = ratx_str(w.eff_a);
      if (w.perturbed_b) j["effective_b"] = ratx_str(w.eff_b);
      ojson cells = ojson::array();
      for (const auto& c : w.cells) {
        ojson cj;
        cj["k"] = c.k;
        cj["lhs"] = c.lhs;
        if (c.rhs) cj["rhs"] = *c.rhs;
        else cj["rhs"] = "unavailable";
        cj["verdict"] = c.rhs ? verdict_str(c.pass) : "skipped";
        cells.push_back(std::move(cj));
      }
      j["cells"] = std::move(cells);
      arr.push_back(std::move(j));
    }
    o["windows"] = std::move(arr);
  }
  if (!levels.empty()) {
    ojson arr = ojson::array();
    for (const auto& l : levels) {
      ojson j;
      j["c"] = rat_str(l.c);
      j["k"] = l.k;
      j["lhs"] = l.lhs;
      j["rhs"] = l.rhs;
      j["verdict"] = verdict_str(l.pass);
      arr.push_back(std::move(j));
    }
    o["levels"] = std::move(arr);
  }
  if (corollary) {
    ojson j;
    j["components_total"] = corollary->components_total;
    j["manifold_total"] = corollary->manifold_total;
    j["verdict"] = verdict_str(corollary->pass);
    o["corollary"] = std::move(j);
  }
  if (stabilization) {
    ojson j;
    j["betti"] = stabilization->betti;
    j["threshold"] = rat_str(stabilization->threshold);
    o["stabilization"] = std::move(j);
  }
  if (appendix) {
    ojson j;
    j["transverse"] = appendix->transverse;
    j["contribution"] = appendix->contribution;
    j["contribution_by_degree"] = appendix->contribution_by_degree;
    j["rhs_total"] = appendix->rhs_total;
    j["transverse_lower_bound"] = appendix->bound;
    o["appendix"] = std::move(j);
  }
  if (!notes.empty()) o["notes"] = notes;
  o["result"] = verdict_str(pass);
  return o.dump(2) + "\n";
}

std::string Report::render_table() const {
  std::ostringstream out;
  out << kind << " " << scenario << " (" << mode << " mode)\n";
  if (!components.empty()) {
    out << "components:\n";
    for (const auto& c : components) {
      out << "  f21=" << rat_str(c.f21) << "  dim=" << c.dim_c << "  s=" << c.s << "  betti=[";
      for (size_t i = 0; i < c.betti.size(); ++i) out << (i ? "," : "") << c.betti[i];
      out << "]\n";
    }
  }
  for (const auto& w : windows) {
    out << "window [" << ratx_str(w.a) << ", " << ratx_str(w.b) << ")";
    if (w.perturbed_a || w.perturbed_b)
      out << "  (regularized to [" << ratx_str(w.eff_a) << ", " << ratx_str(w.eff_b) << "))";
    out << "\n";
    for (const auto& c : w.cells) {
      out << "  k=" << c.k << "  lhs=" << c.lhs << "  rhs=";
      if (c.rhs) out << *c.rhs << "  " << verdict_str(c.pass);
      else out << "unavailable  skipped";
      out << "\n";
    }
    if (w.cells.empty()) out << "  (all zero)\n";
  }
  for (const auto& l : levels) {
    out << "level " << rat_str(l.c) << ": k=" << l.k << "  lhs=" << l.lhs << "  rhs=" << l.rhs
        << "  " << verdict_str(l.pass) << "\n";
  }
  if (corollary) {
    out << "corollary: " << corollary->components_total << " >= " << corollary->manifold_total
        << "  " << verdict_str(corollary->pass) << "\n";
  }
  if (stabilization) {
    out << "stabilized dims [";
    for (size_t i = 0; i < stabilization->betti.size(); ++i)
      out << (i ? "," : "") << stabilization->betti[i];
    out << "] from half-width " << rat_str(stabilization->threshold) << "\n";
  }
  if (appendix) {
    out << "transverse " << appendix->transverse << " + contribution " << appendix->contribution
        << " >= " << appendix->rhs_total << "  " << verdict_str(pass) << "\n";
    out << "implied transverse lower bound: " << appendix->bound << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  out << "result: " << verdict_str(pass) << "\n";
  return out.str();
}

}  // namespace lagdesk
