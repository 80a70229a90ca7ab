#pragma once
#include <map>
#include <string>
#include <vector>

#include "lagdesk/error.hpp"
#include "lagdesk/rational.hpp"

namespace lagdesk {

// An interval on the line with endpoint decorations.  Infinite endpoints are
// always open; a degenerate interval (left == right) must be closed on both
// sides (a single point).  Anything empty or malformed is rejected up front,
// so every DecoratedInterval in circulation is a nonempty subset of the line.
struct DecoratedInterval {
  RatX left;
  RatX right;
  bool left_closed;
  bool right_closed;
};

DecoratedInterval make_interval(const RatX& left, bool left_closed, const RatX& right,
                                bool right_closed);

// Shorthands for the shapes that come up constantly.
DecoratedInterval iv_closed_open(const Rat& a, const Rat& b);   // [a, b)
DecoratedInterval iv_closed_ray(const Rat& a);                  // [a, +oo)
DecoratedInterval iv_closed_closed(const Rat& a, const Rat& b); // [a, b]
DecoratedInterval iv_open_open(const Rat& a, const Rat& b);     // (a, b)
DecoratedInterval iv_whole_line();

bool contains(const DecoratedInterval& iv, const Rat& t);
// Normal form: [a, b) or [a, +oo) with a finite.  Convolution-side operations
// require it; section functors accept any decorated interval.
bool is_normal_form(const DecoratedInterval& iv);
std::string interval_str(const DecoratedInterval& iv);

// Finitely supported graded dimension vector (integer degrees).
class GradedDim {
public:
  GradedDim() = default;
  void add(long degree, long count = 1);
  long dim(long degree) const;
  bool is_zero() const { return e_.empty(); }
  long euler() const;
  const std::map<long, long>& entries() const { return e_; }

  friend bool operator==(const GradedDim& a, const GradedDim& b) { return a.e_ == b.e_; }
  friend bool operator!=(const GradedDim& a, const GradedDim& b) { return !(a == b); }

private:
  std::map<long, long> e_;  // nonzero entries only
};

std::string graded_str(const GradedDim& g);

// One direct summand: the constant sheaf on the interval, placed in
// cohomological degree `degree` (i.e. shifted by [-degree]).
struct Summand {
  DecoratedInterval interval;
  long degree;
};

// A finite direct sum of shifted interval sheaves, stored as a multiset of
// summands.  This is a normal-form container: operations produce and consume
// the decomposition, never chain complexes.
struct IntervalSheaf {
  std::vector<Summand> summands;

  static IntervalSheaf zero() { return {}; }
  static IntervalSheaf of(const DecoratedInterval& iv, long degree = 0);
  static IntervalSheaf bar(const Rat& a, const Rat& b, long degree = 0);  // k_[a,b)
  static IntervalSheaf ray(const Rat& a, long degree = 0);                // k_[a,+oo)
};

IntervalSheaf direct_sum(const IntervalSheaf& a, const IntervalSheaf& b);
// Multiset equality of summands (order-insensitive).
bool same_object(const IntervalSheaf& a, const IntervalSheaf& b);
bool all_normal_form(const IntervalSheaf& f);
std::string sheaf_str(const IntervalSheaf& f);

// Graded dimensions of the derived global sections over the whole line.
// Per summand the answer depends only on how many finite endpoints are open:
// none -> one dimension in the summand's degree, one -> zero, two -> one
// dimension one degree up.
GradedDim global_sections(const IntervalSheaf& f);

// Graded dimensions of sections over (-oo, b) supported on [a, b).
// pre: a < b (b may be +oo, a may be -oo).
GradedDim windowed_sections(const IntervalSheaf& f, const RatX& a, const RatX& b);

// Day convolution of normal-form sheaves (sum of endpoints); the finite x
// finite case splits into a degree-0 and a degree-1 piece.
IntervalSheaf convolve(const IntervalSheaf& f, const IntervalSheaf& g);

// Internal hom adjoint to convolution, on normal-form sheaves.
IntervalSheaf hom_star(const IntervalSheaf& f, const IntervalSheaf& g);

// Shift every summand endpoint by c (any valid sheaf).
IntervalSheaf translate(const IntervalSheaf& f, const Rat& c);

// Least c >= 0 such that the canonical map to the c-translate vanishes:
// the longest bar length, +oo if any summand is a ray, 0 for the zero sheaf.
// pre: normal form.
RatX torsion_bound(const IntervalSheaf& f);

// dim of the degree-k morphism space in the translation-stabilized category:
// windowed sections over [0, +oo) of hom_star(f, translate(g, c)) for c past
// every breakpoint difference.  pre: normal form.
long tamarkin_hom(const IntervalSheaf& f, const IntervalSheaf& g, long k);

// Local models at a non-transverse point: sections of the interval sheaf the
// point contributes.  closed_closed admits the degenerate a == b case (a
// single point); closed_open requires a < b.
enum class DegenerateModel { closed_closed, closed_open };
GradedDim degenerate_contribution(DegenerateModel model, const Rat& a, const Rat& b);

}  // namespace lagdesk
