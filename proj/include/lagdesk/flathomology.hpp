#pragma once
#include <vector>

#include "lagdesk/rational.hpp"

namespace lagdesk {

// Finite cell complex with F2 boundary. Cells are numbered 0..num_cells()-1;
// boundary lists are XOR-reduced facet id sets (sorted, no repeats). The
// square-zero law and the facet dimension law are enforced at construction.
class CellComplex {
public:
  static CellComplex from_cells(std::vector<size_t> dims,
                                std::vector<std::vector<size_t>> boundary);

  size_t num_cells() const { return dims_.size(); }
  size_t dim(size_t id) const { return dims_[id]; }
  size_t top_dim() const { return top_; }
  const std::vector<size_t>& boundary(size_t id) const { return bnd_[id]; }
  // Vertex ids in the closure of the cell, sorted.
  const std::vector<size_t>& vertices_of(size_t id) const { return verts_[id]; }
  std::vector<size_t> cells_of_dim(size_t k) const;
  size_t num_vertices() const;

private:
  CellComplex() = default;
  std::vector<size_t> dims_;
  std::vector<std::vector<size_t>> bnd_;
  std::vector<std::vector<size_t>> verts_;
  size_t top_ = 0;
};

// Piecewise-linear function in the lower-star convention: one rational per
// vertex; the stored per-cell value is the max over the cell's vertices.
struct PLFunction {
  std::vector<Rat> cell_value;  // one entry per cell id
};

// Values are taken in increasing vertex id order (circle(n): vertex i is id i;
// product complexes: row-major over the factor vertex orders).
PLFunction pl_from_vertex_values(const CellComplex& complex, const std::vector<Rat>& values);

long euler_characteristic(const CellComplex& complex);

// F2 homology rank in degree k (equals the cohomology dimension).
long betti(const CellComplex& complex, size_t k);
std::vector<long> betti_all(const CellComplex& complex);

// Builtin complexes. circle(n): vertices 0..n-1 in cyclic order, edge n+i
// joining i and i+1 mod n. Products number cell (a,b) as a*B.num_cells()+b.
CellComplex circle(size_t n);  // n >= 3
CellComplex torus(size_t n1, size_t n2);
CellComplex sphere2(size_t subdiv);  // octahedron with subdiv midpoint refinements
CellComplex disjoint_union(const CellComplex& a, const CellComplex& b);
CellComplex product(const CellComplex& a, const CellComplex& b);

// Full subcomplex on the strict sublevel {phi < c}; cells are renumbered in
// increasing original id order.
CellComplex sublevel(const CellComplex& complex, const PLFunction& phi, const Rat& c);

// One bar of the lower-star persistence of phi: half-open [birth, death) with
// death possibly +inf. The creating and (for finite bars) killing cells are
// kept so callers can locate the homological event inside the complex.
struct Bar {
  size_t degree;
  Rat birth;
  RatX death;
  size_t birth_cell;
  size_t death_cell;  // npos for infinite bars
  static constexpr size_t npos = static_cast<size_t>(-1);
};

struct Barcode {
  std::vector<Bar> bars;
  std::vector<Bar> in_degree(size_t k) const;
};

// Standard F2 column reduction of the lower-star filtration. Zero-length
// pairs are dropped; every remaining bar changes some strict sublevel.
Barcode barcode_all(const CellComplex& complex, const PLFunction& phi);
std::vector<Bar> barcode(const CellComplex& complex, const PLFunction& phi, size_t k);

// dim_F2 H^k({phi < b}, {phi < a}), computed from the barcode: degree-k bars
// with a <= birth < b <= death plus degree-(k-1) bars with
// birth < a <= death < b. A bar [beta, delta) is alive in {phi < x} exactly
// when beta < x <= delta, which is what the two clauses count through the long
// exact sequence of the pair.
long relative_dim(const CellComplex& complex, const PLFunction& phi, const RatX& a,
                  const RatX& b, size_t k);
long relative_dim(const Barcode& code, const RatX& a, const RatX& b, size_t k);

// Sorted values where the sublevel homology changes: births and finite deaths
// of bars. (A finite death changes homology without any birth at that level,
// so deaths must be included for the between-values-isomorphism guarantee.)
std::vector<Rat> critical_values(const CellComplex& complex, const PLFunction& phi);
std::vector<Rat> critical_values(const Barcode& code);

}  // namespace lagdesk
