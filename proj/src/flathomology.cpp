#include "lagdesk/flathomology.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace lagdesk {
namespace {

// Dense F2 column over a fixed row count; pivots are the highest set rows, as
// the persistence reduction wants.
class BitCol {
public:
  explicit BitCol(size_t rows) : w_((rows + 63) / 64, 0) {}
  void flip(size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }
  void operator^=(const BitCol& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }
  long high() const {
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i]) return static_cast<long>(i * 64 + 63 - std::countl_zero(w_[i]));
    return -1;
  }

private:
  std::vector<uint64_t> w_;
};

size_t f2_rank(std::vector<BitCol> cols) {
  std::map<long, size_t> pivot_col;
  size_t rank = 0;
  for (size_t j = 0; j < cols.size(); ++j) {
    long h;
    while ((h = cols[j].high()) >= 0) {
      auto it = pivot_col.find(h);
      if (it == pivot_col.end()) {
        pivot_col.emplace(h, j);
        ++rank;
        break;
      }
      cols[j] ^= cols[it->second];
    }
  }
  return rank;
}

// XOR-reduce an F2 facet list: repeated entries cancel in pairs.
std::vector<size_t> xor_reduce(std::vector<size_t> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<size_t> out;
  for (size_t i = 0; i < ids.size();) {
    size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ids[i]);
    i = j;
  }
  return out;
}

std::vector<size_t> symmetric_difference(const std::vector<size_t>& a,
                                         const std::vector<size_t>& b) {
  std::vector<size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

void check_pl(const CellComplex& complex, const PLFunction& phi) {
  require(phi.cell_value.size() == complex.num_cells(), ErrorCode::BadInput,
          "function does not match the complex");
}

}  // namespace

CellComplex CellComplex::from_cells(std::vector<size_t> dims,
                                    std::vector<std::vector<size_t>> boundary) {
  require(dims.size() == boundary.size(), ErrorCode::BadInput,
          "every cell needs a boundary list");
  size_t n = dims.size();
  CellComplex c;
  c.dims_ = std::move(dims);
  c.bnd_.resize(n);
  for (size_t id = 0; id < n; ++id) {
    c.bnd_[id] = xor_reduce(std::move(boundary[id]));
    for (size_t f : c.bnd_[id]) {
      require(f < n, ErrorCode::BadInput, "facet id out of range");
      require(c.dims_[f] + 1 == c.dims_[id], ErrorCode::BadInput,
              "facet dimension must be one less");
    }
    if (c.dims_[id] == 0)
      require(c.bnd_[id].empty(), ErrorCode::BadInput, "vertices have empty boundary");
  }
  for (size_t id = 0; id < n; ++id) {
    std::vector<size_t> sq;
    for (size_t f : c.bnd_[id]) sq = symmetric_difference(sq, c.bnd_[f]);
    require(sq.empty(), ErrorCode::BoundaryNotSquareZero,
            "boundary of boundary is nonzero over F2");
  }
  // Vertex closures, computed upward in dimension.
  c.verts_.resize(n);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return c.dims_[a] < c.dims_[b]; });
  for (size_t id : order) {
    if (c.dims_[id] == 0) {
      c.verts_[id] = {id};
      continue;
    }
    std::vector<size_t> v;
    for (size_t f : c.bnd_[id]) {
      std::vector<size_t> merged;
      std::set_union(v.begin(), v.end(), c.verts_[f].begin(), c.verts_[f].end(),
                     std::back_inserter(merged));
      v = std::move(merged);
    }
    require(!v.empty(), ErrorCode::BadInput, "positive-dimensional cell with empty boundary");
    c.verts_[id] = std::move(v);
  }
  c.top_ = 0;
  for (size_t d : c.dims_) c.top_ = std::max(c.top_, d);
  return c;
}

std::vector<size_t> CellComplex::cells_of_dim(size_t k) const {
  std::vector<size_t> out;
  for (size_t id = 0; id < dims_.size(); ++id)
    if (dims_[id] == k) out.push_back(id);
  return out;
}

size_t CellComplex::num_vertices() const { return cells_of_dim(0).size(); }

PLFunction pl_from_vertex_values(const CellComplex& complex, const std::vector<Rat>& values) {
  std::vector<size_t> verts = complex.cells_of_dim(0);
  require(values.size() == verts.size(), ErrorCode::BadInput,
          "need exactly one value per vertex");
  std::vector<Rat> by_vertex_id(complex.num_cells());
  for (size_t i = 0; i < verts.size(); ++i) by_vertex_id[verts[i]] = values[i];
  PLFunction phi;
  phi.cell_value.resize(complex.num_cells());
  for (size_t id = 0; id < complex.num_cells(); ++id) {
    const std::vector<size_t>& vs = complex.vertices_of(id);
    Rat m = by_vertex_id[vs.front()];
    for (size_t v : vs) m = std::max(m, by_vertex_id[v]);
    phi.cell_value[id] = m;
  }
  return phi;
}

long euler_characteristic(const CellComplex& complex) {
  long chi = 0;
  for (size_t id = 0; id < complex.num_cells(); ++id)
    chi += (complex.dim(id) % 2 == 0) ? 1 : -1;
  return chi;
}

namespace {

// Rank of the F2 boundary map from k-cells to (k-1)-cells.
size_t boundary_rank(const CellComplex& complex, size_t k) {
  if (k == 0 || k > complex.top_dim()) return 0;
  std::vector<size_t> rows = complex.cells_of_dim(k - 1);
  std::vector<size_t> row_pos(complex.num_cells(), 0);
  for (size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
  std::vector<BitCol> cols;
  for (size_t id : complex.cells_of_dim(k)) {
    BitCol c(rows.size());
    for (size_t f : complex.boundary(id)) c.flip(row_pos[f]);
    cols.push_back(std::move(c));
  }
  return f2_rank(std::move(cols));
}

}  // namespace

long betti(const CellComplex& complex, size_t k) {
  if (k > complex.top_dim()) return 0;
  size_t cells = complex.cells_of_dim(k).size();
  return static_cast<long>(cells) - static_cast<long>(boundary_rank(complex, k)) -
         static_cast<long>(boundary_rank(complex, k + 1));
}

std::vector<long> betti_all(const CellComplex& complex) {
  std::vector<long> out;
  for (size_t k = 0; k <= complex.top_dim(); ++k) out.push_back(betti(complex, k));
  return out;
}

CellComplex circle(size_t n) {
  require(n >= 3, ErrorCode::TooCoarse, "circle needs at least three vertices");
  std::vector<size_t> dims(2 * n, 0);
  std::vector<std::vector<size_t>> bnd(2 * n);
  for (size_t i = 0; i < n; ++i) {
    dims[n + i] = 1;
    bnd[n + i] = {i, (i + 1) % n};
  }
  return CellComplex::from_cells(std::move(dims), std::move(bnd));
}

CellComplex product(const CellComplex& a, const CellComplex& b) {
  size_t nb = b.num_cells();
  size_t n = a.num_cells() * nb;
  std::vector<size_t> dims(n);
  std::vector<std::vector<size_t>> bnd(n);
  for (size_t ca = 0; ca < a.num_cells(); ++ca)
    for (size_t cb = 0; cb < nb; ++cb) {
      size_t id = ca * nb + cb;
      dims[id] = a.dim(ca) + b.dim(cb);
      for (size_t f : a.boundary(ca)) bnd[id].push_back(f * nb + cb);
      for (size_t f : b.boundary(cb)) bnd[id].push_back(ca * nb + f);
    }
  return CellComplex::from_cells(std::move(dims), std::move(bnd));
}

CellComplex torus(size_t n1, size_t n2) { return product(circle(n1), circle(n2)); }

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
  size_t na = a.num_cells();
  std::vector<size_t> dims;
  std::vector<std::vector<size_t>> bnd;
  for (size_t id = 0; id < na; ++id) {
    dims.push_back(a.dim(id));
    bnd.push_back(a.boundary(id));
  }
  for (size_t id = 0; id < b.num_cells(); ++id) {
    dims.push_back(b.dim(id));
    std::vector<size_t> shifted;
    for (size_t f : b.boundary(id)) shifted.push_back(f + na);
    bnd.push_back(std::move(shifted));
  }
  return CellComplex::from_cells(std::move(dims), std::move(bnd));
}

namespace {

// One 4-to-1 midpoint refinement of a complex whose 2-cells are triangles.
CellComplex refine_triangles(const CellComplex& c) {
  std::vector<size_t> old_verts = c.cells_of_dim(0);
  std::vector<size_t> old_edges = c.cells_of_dim(1);
  std::vector<size_t> old_tris = c.cells_of_dim(2);
  require(old_verts.size() + old_edges.size() + old_tris.size() == c.num_cells(),
          ErrorCode::BadInput, "refinement handles dimensions up to two");
  std::vector<size_t> edge_pos(c.num_cells(), 0);
  for (size_t i = 0; i < old_edges.size(); ++i) {
    require(c.vertices_of(old_edges[i]).size() == 2, ErrorCode::BadInput,
            "refinement needs honest edges");
    edge_pos[old_edges[i]] = i;
  }

  size_t nv = old_verts.size() + old_edges.size();
  std::vector<size_t> vert_pos(c.num_cells(), 0);
  for (size_t i = 0; i < old_verts.size(); ++i) vert_pos[old_verts[i]] = i;
  auto midpoint = [&](size_t e) { return old_verts.size() + edge_pos[e]; };

  std::vector<size_t> dims(nv, 0);
  std::vector<std::vector<size_t>> bnd(nv);
  std::map<std::pair<size_t, size_t>, size_t> edge_of;  // new vertex pair -> new edge id
  auto new_edge = [&](size_t u, size_t v) {
    auto key = std::minmax(u, v);
    auto it = edge_of.find(key);
    if (it != edge_of.end()) return it->second;
    size_t id = dims.size();
    dims.push_back(1);
    bnd.push_back({key.first, key.second});
    edge_of.emplace(key, id);
    return id;
  };

  for (size_t e : old_edges) {
    size_t u = vert_pos[c.vertices_of(e)[0]];
    size_t v = vert_pos[c.vertices_of(e)[1]];
    new_edge(u, midpoint(e));
    new_edge(v, midpoint(e));
  }
  for (size_t t : old_tris) {
    const std::vector<size_t>& edges = c.boundary(t);
    require(edges.size() == 3, ErrorCode::BadInput, "refinement needs triangles");
    size_t m0 = midpoint(edges[0]), m1 = midpoint(edges[1]), m2 = midpoint(edges[2]);
    // Medial triangle.
    std::vector<size_t> medial = {new_edge(m0, m1), new_edge(m1, m2), new_edge(m0, m2)};
    dims.push_back(2);
    bnd.push_back(medial);
    // Corner triangles: for each vertex, the two half-edges toward the
    // midpoints of its adjacent sides plus the midline joining them.
    for (size_t v : c.vertices_of(t)) {
      std::vector<size_t> adj;
      for (size_t e : edges) {
        const std::vector<size_t>& vs = c.vertices_of(e);
        if (vs[0] == v || vs[1] == v) adj.push_back(e);
      }
      require(adj.size() == 2, ErrorCode::BadInput, "triangle corner must meet two sides");
      size_t vp = vert_pos[v];
      std::vector<size_t> corner = {new_edge(vp, midpoint(adj[0])),
                                    new_edge(vp, midpoint(adj[1])),
                                    new_edge(midpoint(adj[0]), midpoint(adj[1]))};
      dims.push_back(2);
      bnd.push_back(std::move(corner));
    }
  }
  return CellComplex::from_cells(std::move(dims), std::move(bnd));
}

}  // namespace

CellComplex sphere2(size_t subdiv) {
  // Octahedron: poles 0 and 5, equator 1..4.
  std::vector<size_t> dims(6, 0);
  std::vector<std::vector<size_t>> bnd(6);
  std::map<std::pair<size_t, size_t>, size_t> edge_of;
  auto edge = [&](size_t u, size_t v) {
    auto key = std::minmax(u, v);
    auto it = edge_of.find(key);
    if (it != edge_of.end()) return it->second;
    size_t id = dims.size();
    dims.push_back(1);
    bnd.push_back({key.first, key.second});
    edge_of.emplace(key, id);
    return id;
  };
  for (size_t i = 1; i <= 4; ++i) {
    size_t j = i == 4 ? 1 : i + 1;
    for (size_t pole : {size_t{0}, size_t{5}}) {
      size_t e1 = edge(pole, i), e2 = edge(pole, j), e3 = edge(i, j);
      dims.push_back(2);
      bnd.push_back({e1, e2, e3});
    }
  }
  CellComplex c = CellComplex::from_cells(std::move(dims), std::move(bnd));
  for (size_t s = 0; s < subdiv; ++s) c = refine_triangles(c);
  return c;
}

CellComplex sublevel(const CellComplex& complex, const PLFunction& phi, const Rat& c) {
  check_pl(complex, phi);
  // Facet values never exceed the cell value, so the sublevel is automatically
  // a full subcomplex; ids are renumbered in two passes since facet ids are
  // not required to precede the cell's.
  std::vector<size_t> new_id(complex.num_cells(), Bar::npos);
  std::vector<size_t> dims;
  for (size_t id = 0; id < complex.num_cells(); ++id) {
    if (!(phi.cell_value[id] < c)) continue;
    new_id[id] = dims.size();
    dims.push_back(complex.dim(id));
  }
  std::vector<std::vector<size_t>> bnd;
  for (size_t id = 0; id < complex.num_cells(); ++id) {
    if (new_id[id] == Bar::npos) continue;
    std::vector<size_t> facets;
    for (size_t f : complex.boundary(id)) facets.push_back(new_id[f]);
    bnd.push_back(std::move(facets));
  }
  return CellComplex::from_cells(std::move(dims), std::move(bnd));
}

std::vector<Bar> Barcode::in_degree(size_t k) const {
  std::vector<Bar> out;
  for (const Bar& b : bars)
    if (b.degree == k) out.push_back(b);
  return out;
}

Barcode barcode_all(const CellComplex& complex, const PLFunction& phi) {
  check_pl(complex, phi);
  size_t n = complex.num_cells();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (phi.cell_value[a] != phi.cell_value[b]) return phi.cell_value[a] < phi.cell_value[b];
    if (complex.dim(a) != complex.dim(b)) return complex.dim(a) < complex.dim(b);
    return a < b;
  });
  std::vector<size_t> pos(n);
  for (size_t i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<BitCol> reduced;
  reduced.reserve(n);
  std::vector<long> pivot_col(n, -1);   // row position -> column position
  std::vector<bool> creator(n, false);  // by position
  for (size_t j = 0; j < n; ++j) {
    BitCol col(n);
    for (size_t f : complex.boundary(order[j])) col.flip(pos[f]);
    long h;
    while ((h = col.high()) >= 0 && pivot_col[h] >= 0) col ^= reduced[pivot_col[h]];
    if (h < 0)
      creator[j] = true;
    else
      pivot_col[h] = static_cast<long>(j);
    reduced.push_back(std::move(col));
  }

  Barcode code;
  for (size_t i = 0; i < n; ++i) {
    size_t id = order[i];
    if (pivot_col[i] >= 0) {
      size_t killer = order[static_cast<size_t>(pivot_col[i])];
      if (phi.cell_value[id] < phi.cell_value[killer])
        code.bars.push_back(Bar{complex.dim(id), phi.cell_value[id],
                                RatX(phi.cell_value[killer]), id, killer});
    } else if (creator[i]) {
      code.bars.push_back(
          Bar{complex.dim(id), phi.cell_value[id], RatX::pos_inf(), id, Bar::npos});
    }
  }
  std::sort(code.bars.begin(), code.bars.end(), [](const Bar& a, const Bar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    return a.birth_cell < b.birth_cell;
  });
  return code;
}

std::vector<Bar> barcode(const CellComplex& complex, const PLFunction& phi, size_t k) {
  return barcode_all(complex, phi).in_degree(k);
}

long relative_dim(const Barcode& code, const RatX& a, const RatX& b, size_t k) {
  require(a < b, ErrorCode::BadWindow, "window must satisfy a < b");
  long count = 0;
  for (const Bar& bar : code.bars) {
    RatX birth(bar.birth);
    if (bar.degree == k && a <= birth && birth < b && b <= bar.death) ++count;
    if (k >= 1 && bar.degree + 1 == k && birth < a && a <= bar.death && bar.death < b)
      ++count;
  }
  return count;
}

long relative_dim(const CellComplex& complex, const PLFunction& phi, const RatX& a,
                  const RatX& b, size_t k) {
  return relative_dim(barcode_all(complex, phi), a, b, k);
}

std::vector<Rat> critical_values(const Barcode& code) {
  std::vector<Rat> vals;
  for (const Bar& bar : code.bars) {
    vals.push_back(bar.birth);
    if (bar.death.finite()) vals.push_back(bar.death.value());
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::vector<Rat> critical_values(const CellComplex& complex, const PLFunction& phi) {
  return critical_values(barcode_all(complex, phi));
}

}  // namespace lagdesk
