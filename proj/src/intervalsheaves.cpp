#include "lagdesk/intervalsheaves.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace lagdesk {

DecoratedInterval make_interval(const RatX& left, bool left_closed, const RatX& right,
                                bool right_closed) {
  require(!left.is_pos_inf() && !right.is_neg_inf(), ErrorCode::BadInterval,
          "interval endpoints out of order at infinity");
  require(!(left.is_neg_inf() && left_closed), ErrorCode::BadInterval,
          "-oo endpoint must be open");
  require(!(right.is_pos_inf() && right_closed), ErrorCode::BadInterval,
          "+oo endpoint must be open");
  require(left <= right, ErrorCode::BadInterval, "interval endpoints out of order");
  if (left == right)
    require(left_closed && right_closed, ErrorCode::BadInterval,
            "degenerate interval must be closed on both sides");
  return DecoratedInterval{left, right, left_closed, right_closed};
}

DecoratedInterval iv_closed_open(const Rat& a, const Rat& b) {
  return make_interval(RatX(a), true, RatX(b), false);
}
DecoratedInterval iv_closed_ray(const Rat& a) {
  return make_interval(RatX(a), true, RatX::pos_inf(), false);
}
DecoratedInterval iv_closed_closed(const Rat& a, const Rat& b) {
  return make_interval(RatX(a), true, RatX(b), true);
}
DecoratedInterval iv_open_open(const Rat& a, const Rat& b) {
  return make_interval(RatX(a), false, RatX(b), false);
}
DecoratedInterval iv_whole_line() {
  return make_interval(RatX::neg_inf(), false, RatX::pos_inf(), false);
}

bool contains(const DecoratedInterval& iv, const Rat& t) {
  RatX x(t);
  if (x < iv.left || (x == iv.left && !iv.left_closed)) return false;
  if (x > iv.right || (x == iv.right && !iv.right_closed)) return false;
  return true;
}

bool is_normal_form(const DecoratedInterval& iv) {
  if (!iv.left.finite() || !iv.left_closed) return false;
  if (iv.right.is_pos_inf()) return true;
  return iv.right.finite() && !iv.right_closed;
}

std::string interval_str(const DecoratedInterval& iv) {
  std::ostringstream os;
  os << (iv.left_closed ? '[' : '(') << ratx_str(iv.left) << ", " << ratx_str(iv.right)
     << (iv.right_closed ? ']' : ')');
  return os.str();
}

void GradedDim::add(long degree, long count) {
  if (count == 0) return;
  long v = e_[degree] += count;
  require(v >= 0, ErrorCode::BadInput, "graded dimension went negative");
  if (v == 0) e_.erase(degree);
}

long GradedDim::dim(long degree) const {
  auto it = e_.find(degree);
  return it == e_.end() ? 0 : it->second;
}

long GradedDim::euler() const {
  long s = 0;
  for (const auto& [k, n] : e_) s += (k % 2 == 0 ? n : -n);
  return s;
}

std::string graded_str(const GradedDim& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, n] : g.entries()) {
    if (!first) os << ", ";
    os << k << ": " << n;
    first = false;
  }
  os << '}';
  return os.str();
}

IntervalSheaf IntervalSheaf::of(const DecoratedInterval& iv, long degree) {
  return IntervalSheaf{{Summand{iv, degree}}};
}
IntervalSheaf IntervalSheaf::bar(const Rat& a, const Rat& b, long degree) {
  return of(iv_closed_open(a, b), degree);
}
IntervalSheaf IntervalSheaf::ray(const Rat& a, long degree) {
  return of(iv_closed_ray(a), degree);
}

IntervalSheaf direct_sum(const IntervalSheaf& a, const IntervalSheaf& b) {
  IntervalSheaf r = a;
  r.summands.insert(r.summands.end(), b.summands.begin(), b.summands.end());
  return r;
}

namespace {

// RatX as a sortable triple; infinities order before/after all finite values.
std::tuple<int, Rat> ratx_key(const RatX& x) {
  if (x.is_neg_inf()) return {-1, Rat(0)};
  if (x.is_pos_inf()) return {1, Rat(0)};
  return {0, x.value()};
}

std::tuple<long, std::tuple<int, Rat>, bool, std::tuple<int, Rat>, bool> summand_key(
    const Summand& s) {
  return {s.degree, ratx_key(s.interval.left), !s.interval.left_closed,
          ratx_key(s.interval.right), s.interval.right_closed};
}

std::vector<Summand> sorted_summands(const IntervalSheaf& f) {
  std::vector<Summand> v = f.summands;
  std::sort(v.begin(), v.end(),
            [](const Summand& a, const Summand& b) { return summand_key(a) < summand_key(b); });
  return v;
}

}  // namespace

bool same_object(const IntervalSheaf& a, const IntervalSheaf& b) {
  auto va = sorted_summands(a), vb = sorted_summands(b);
  if (va.size() != vb.size()) return false;
  for (size_t i = 0; i < va.size(); ++i)
    if (summand_key(va[i]) != summand_key(vb[i])) return false;
  return true;
}

bool all_normal_form(const IntervalSheaf& f) {
  for (const auto& s : f.summands)
    if (!is_normal_form(s.interval)) return false;
  return true;
}

std::string sheaf_str(const IntervalSheaf& f) {
  if (f.summands.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : sorted_summands(f)) {
    if (!first) os << " + ";
    os << interval_str(s.interval);
    if (s.degree != 0) os << "[" << -s.degree << "]";
    first = false;
  }
  return os.str();
}

namespace {

// (h^0, h^1) of derived sections over the open ray U = (-oo, bound) of the
// summand's restriction there.  An endpoint at or past the boundary of U is
// absorbing: the cut interval is closed on that side inside U, so only finite
// open endpoints strictly inside U obstruct sections.  Zero open ends give a
// section class in degree 0, one gives nothing, two give a class in degree 1.
struct RayDims {
  long h0 = 0;
  long h1 = 0;
};

RayDims ray_section_dims(const DecoratedInterval& iv, const RatX& bound) {
  if (iv.left >= bound) return {};  // empty restriction
  int open_ends = 0;
  if (iv.left.finite() && !iv.left_closed) ++open_ends;
  if (iv.right < bound && !iv.right_closed) ++open_ends;
  if (open_ends == 0) return {1, 0};
  if (open_ends == 1) return {0, 0};
  return {0, 1};
}

}  // namespace

GradedDim windowed_sections(const IntervalSheaf& f, const RatX& a, const RatX& b) {
  require(a < b, ErrorCode::BadWindow, "window requires a < b");
  GradedDim out;
  for (const auto& s : f.summands) {
    // Sections over U = (-oo, b) supported on [a, b), via the fiber sequence
    // of the restriction to A = (-oo, a).  Restriction acts summandwise, and
    // between one-dimensional section spaces of the same summand it is the
    // identity on the generating section, so its rank is 1 exactly when both
    // sides are nonzero.
    RayDims u = ray_section_dims(s.interval, b);
    RayDims aa = ray_section_dims(s.interval, a);
    long r0 = (u.h0 && aa.h0) ? 1 : 0;
    long r1 = (u.h1 && aa.h1) ? 1 : 0;
    out.add(s.degree, u.h0 - r0);
    out.add(s.degree + 1, (aa.h0 - r0) + (u.h1 - r1));
    out.add(s.degree + 2, aa.h1 - r1);
  }
  return out;
}

GradedDim global_sections(const IntervalSheaf& f) {
  return windowed_sections(f, RatX::neg_inf(), RatX::pos_inf());
}

namespace {

void require_normal(const IntervalSheaf& f, const char* op) {
  require(all_normal_form(f), ErrorCode::NotNormalForm,
          std::string(op) + ": summands must be [a,b) or [a,+oo)");
}

void push_bar(IntervalSheaf& out, const Rat& a, const RatX& b, long degree) {
  if (RatX(a) >= b) return;  // empty piece
  out.summands.push_back(Summand{make_interval(RatX(a), true, b, false), degree});
}

}  // namespace

IntervalSheaf convolve(const IntervalSheaf& f, const IntervalSheaf& g) {
  require_normal(f, "convolve");
  require_normal(g, "convolve");
  IntervalSheaf out;
  for (const auto& sf : f.summands)
    for (const auto& sg : g.summands) {
      const Rat& a = sf.interval.left.value();
      const Rat& c = sg.interval.left.value();
      long deg = sf.degree + sg.degree;
      bool f_ray = sf.interval.right.is_pos_inf();
      bool g_ray = sg.interval.right.is_pos_inf();
      if (f_ray && g_ray) {
        push_bar(out, a + c, RatX::pos_inf(), deg);
      } else if (f_ray || g_ray) {
        // One ray: the bar slides along it unchanged.
        const Rat& u = f_ray ? c : a;
        const Rat& v = (f_ray ? sg : sf).interval.right.value();
        const Rat& base = f_ray ? a : c;
        push_bar(out, base + u, RatX(base + v), deg);
      } else {
        // Two bars: sections pile up until the shorter bar is exhausted, then
        // the overlap drains; the drain is one degree up.
        const Rat& b = sf.interval.right.value();
        const Rat& d = sg.interval.right.value();
        Rat lo = std::min(a + d, b + c);
        Rat hi = std::max(a + d, b + c);
        push_bar(out, a + c, RatX(lo), deg);
        push_bar(out, hi, RatX(b + d), deg + 1);
      }
    }
  return out;
}

IntervalSheaf hom_star(const IntervalSheaf& f, const IntervalSheaf& g) {
  require_normal(f, "hom_star");
  require_normal(g, "hom_star");
  IntervalSheaf out;
  for (const auto& sf : f.summands)
    for (const auto& sg : g.summands) {
      // Contravariant in the first slot: its degree enters negated.
      long deg = sg.degree - sf.degree;
      const Rat& u = sf.interval.left.value();
      const Rat& gl = sg.interval.left.value();
      bool f_ray = sf.interval.right.is_pos_inf();
      bool g_ray = sg.interval.right.is_pos_inf();
      if (f_ray) {
        // hom out of a ray is translation by its left endpoint.
        if (g_ray) {
          push_bar(out, gl - u, RatX::pos_inf(), deg);
        } else {
          push_bar(out, gl - u, RatX(sg.interval.right.value() - u), deg);
        }
      } else if (g_ray) {
        // Bar into a ray: one bar, one degree down.  The degrees here are
        // pinned by adjunction against ray sources: maps out of k_[x,oo)
        // into the result must match maps out of its translate by the bar.
        const Rat& v = sf.interval.right.value();
        push_bar(out, gl - v, RatX(gl - u), deg - 1);
      } else {
        // Bar into bar: the window where the translate of the target still
        // receives the identity, plus a piece one degree down where only the
        // connecting morphism survives.
        const Rat& v = sf.interval.right.value();
        const Rat& dl = sg.interval.right.value();
        push_bar(out, std::max(gl - u, dl - v), RatX(dl - u), deg);
        push_bar(out, gl - v, RatX(std::min(gl - u, dl - v)), deg - 1);
      }
    }
  return out;
}

IntervalSheaf translate(const IntervalSheaf& f, const Rat& c) {
  IntervalSheaf out = f;
  for (auto& s : out.summands) {
    s.interval.left = s.interval.left + c;
    s.interval.right = s.interval.right + c;
  }
  return out;
}

RatX torsion_bound(const IntervalSheaf& f) {
  require_normal(f, "torsion_bound");
  Rat best(0);
  for (const auto& s : f.summands) {
    if (s.interval.right.is_pos_inf()) return RatX::pos_inf();
    Rat len = s.interval.right.value() - s.interval.left.value();
    if (len > best) best = len;
  }
  return RatX(best);
}

long tamarkin_hom(const IntervalSheaf& f, const IntervalSheaf& g, long k) {
  require_normal(f, "tamarkin_hom");
  require_normal(g, "tamarkin_hom");
  // Stable once the translate puts every breakpoint of g past every
  // breakpoint of f; evaluate at two such offsets and insist they agree.
  Rat m(0);
  for (const auto* h : {&f, &g})
    for (const auto& s : h->summands) {
      if (abs(s.interval.left.value()) > m) m = abs(s.interval.left.value());
      if (s.interval.right.finite() && abs(s.interval.right.value()) > m)
        m = abs(s.interval.right.value());
    }
  Rat c1 = 4 * m + 3;
  GradedDim w1 = windowed_sections(hom_star(f, translate(g, c1)), RatX(Rat(0)), RatX::pos_inf());
  GradedDim w2 =
      windowed_sections(hom_star(f, translate(g, c1 + 5)), RatX(Rat(0)), RatX::pos_inf());
  require(w1 == w2, ErrorCode::NoStabilization, "colimit did not stabilize");
  return w1.dim(k);
}

GradedDim degenerate_contribution(DegenerateModel model, const Rat& a, const Rat& b) {
  if (model == DegenerateModel::closed_closed) {
    // The point case a == b is the one-point component and is allowed.
    require(a <= b, ErrorCode::BadInterval, "degenerate model needs a <= b");
    return global_sections(IntervalSheaf::of(iv_closed_closed(a, b)));
  }
  require(a < b, ErrorCode::BadInterval, "half-open model needs a < b");
  return global_sections(IntervalSheaf::of(iv_closed_open(a, b)));
}

}  // namespace lagdesk
