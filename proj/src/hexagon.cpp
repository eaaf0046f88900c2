#include "hexinv/hexagon.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hexinv {

namespace {

const std::vector<long long> kRMatrix = {
    0, -2, 1,  1,  -2,  //
    0, -1, 0,  1,  -1,  //
    -1, 2, -2, 0,  1,   //
    -1, 3, -2, -1, 2,   //
    0,  1, -1, 0,  0};

const std::array<long long, 6> kEdgeX = {-1, 2, -1, -1, 0, 1};
const std::array<long long, 6> kEdgeY = {1, -1, 0, 0, 1, -1};

}  // namespace

Mat r_matrix(const GfPtr& field) { return Mat::from_ints(field, 5, 5, kRMatrix); }

Mat deformed_r_matrix(const GfPtr& field, fe m) {
  const Gf& f = *field;
  if (m == 0) throw std::invalid_argument("deformation parameter must be invertible");
  fe inv = f.inv(m);
  fe inv2 = f.mul(inv, inv);
  fe one = f.one();
  fe m_minus_1 = f.sub(m, one);
  fe r_a = f.mul(m_minus_1, inv2);          // (M-1)/M^2
  fe r_b = f.neg(r_a);                      // (1-M)/M^2
  fe r_c = f.mul(f.sub(one, f.add(m, m)), inv2);  // (1-2M)/M^2
  std::vector<fe> e = {
      0,   r_a, inv2, f.neg(inv), r_a,   //
      0,   inv, 0,    f.neg(inv), inv,   //
      inv, r_b, r_a,  0,          inv2,  //
      inv, r_c, r_a,  inv,        r_b,   //
      0,   f.neg(inv), inv, 0,    0};
  Mat out(field, 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) out.set(i, j, e[i * 5 + j]);
  return out;
}

EdgeProfile edge_profile(const GfPtr& field) {
  EdgeProfile p;
  for (int i = 0; i < 6; ++i) {
    p.x[i] = field->from_int(kEdgeX[i]);
    p.y[i] = field->from_int(kEdgeY[i]);
  }
  return p;
}

EdgeProfile deformed_edge_profile(const GfPtr& field, fe m) {
  const Gf& f = *field;
  if (m == 0) throw std::invalid_argument("deformation parameter must be invertible");
  fe inv = f.inv(m);
  EdgeProfile p;
  p.x = {f.from_int(-1), f.sub(f.one(), m), m, m, 0, f.neg(m)};
  p.y = {f.neg(inv), inv, 0, 0, f.one(), f.from_int(-1)};
  return p;
}

int edge_position_in_tet(const std::vector<int>& tet, int a, int b) {
  if (a > b) std::swap(a, b);
  int ia = -1, ib = -1;
  for (int i = 0; i < 4; ++i) {
    if (tet[i] == a) ia = i;
    if (tet[i] == b) ib = i;
  }
  if (ia < 0 || ib < 0) throw std::invalid_argument("edge not inside tetrahedron");
  static constexpr int kPos[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return kPos[ia][ib];
}

namespace {

// Rows of the agreement system: one row per inner tetrahedron.
Mat inner_constraints(const Triangulation& t, const GfPtr& field) {
  if (t.dim() != 4) throw std::invalid_argument("dimension must be 4");
  const Gf& f = *field;
  Mat r = r_matrix(field);
  const auto& inc = t.ridge_incidence();
  const auto& fr = t.facet_ridges();
  std::size_t n3 = t.faces(3).size();
  std::vector<std::size_t> inner;
  for (std::size_t ti = 0; ti < inc.size(); ++ti)
    if (inc[ti].count == 2) inner.push_back(ti);
  Mat c(field, inner.size(), n3);
  for (std::size_t row = 0; row < inner.size(); ++row) {
    const auto& in = inc[inner[row]];
    for (int j = 0; j < 5; ++j) {
      std::size_t col = std::size_t(fr[in.facet[0]][j]);
      c.set(row, col, f.add(c.at(row, col), r.at(in.drop[0], j)));
      std::size_t col2 = std::size_t(fr[in.facet[1]][j]);
      c.set(row, col2, f.sub(c.at(row, col2), r.at(in.drop[1], j)));
    }
  }
  return c;
}

}  // namespace

Mat gluing_matrix(const Triangulation& t, const GfPtr& field) {
  if (t.dim() != 4) throw std::invalid_argument("dimension must be 4");
  if (!t.closed()) throw std::invalid_argument("gluing matrix needs a closed complex");
  return inner_constraints(t, field);
}

ColoringSpace permitted_space(const Triangulation& t, const GfPtr& field) {
  Mat c = inner_constraints(t, field);
  Mat ker = nullspace(c);
  ColoringSpace s;
  s.field = field;
  s.ambient = t.faces(3).size();
  s.basis = rref(ker).m;
  s.role = ColoringSpace::Role::permitted;
  return s;
}

bool is_permitted(const Triangulation& t, const GfPtr& field, const std::vector<fe>& x) {
  if (t.dim() != 4) throw std::invalid_argument("dimension must be 4");
  if (x.size() != t.faces(3).size()) throw std::invalid_argument("coloring length mismatch");
  const Gf& f = *field;
  Mat r = r_matrix(field);
  const auto& fr = t.facet_ridges();
  for (const auto& in : t.ridge_incidence()) {
    if (in.count != 2) continue;
    fe y0 = 0, y1 = 0;
    for (int j = 0; j < 5; ++j) {
      y0 = f.add(y0, f.mul(r.at(in.drop[0], j), x[fr[in.facet[0]][j]]));
      y1 = f.add(y1, f.mul(r.at(in.drop[1], j), x[fr[in.facet[1]][j]]));
    }
    if (y0 != y1) return false;
  }
  return true;
}

std::vector<fe> edge_shift(const Triangulation& t, const GfPtr& field,
                           const std::vector<int>& edge) {
  if (t.dim() != 4) throw std::invalid_argument("dimension must be 4");
  std::vector<int> e(edge);
  std::sort(e.begin(), e.end());
  t.face_index(1, e);  // existence check
  EdgeProfile prof = edge_profile(field);
  const auto& tets = t.faces(3);
  std::vector<fe> out(tets.size(), 0);
  for (std::size_t ti = 0; ti < tets.size(); ++ti) {
    const auto& tet = tets[ti];
    if (std::includes(tet.begin(), tet.end(), e.begin(), e.end()))
      out[ti] = prof.x[edge_position_in_tet(tet, e[0], e[1])];
  }
  return out;
}

ColoringSpace edge_subspace(const Triangulation& t, const GfPtr& field) {
  if (t.dim() != 4) throw std::invalid_argument("dimension must be 4");
  EdgeProfile prof = edge_profile(field);
  const auto& tets = t.faces(3);
  const auto& edges = t.faces(1);
  Mat xi(field, edges.size(), tets.size());
  for (std::size_t ti = 0; ti < tets.size(); ++ti) {
    const auto& tet = tets[ti];
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        std::size_t ei = t.face_index(1, {tet[a], tet[b]});
        xi.set(ei, ti, prof.x[edge_position_in_tet(tet, tet[a], tet[b])]);
      }
  }
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    std::vector<fe> row(xi.row(ei), xi.row(ei) + tets.size());
    if (!is_permitted(t, field, row))
      throw std::logic_error("edge shift violates a gluing constraint");
  }
  Rref r = rref(xi);
  ColoringSpace s;
  s.field = field;
  s.ambient = tets.size();
  s.basis = Mat(field, r.rank(), tets.size());
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < tets.size(); ++j) s.basis.set(i, j, r.m.at(i, j));
  s.role = ColoringSpace::Role::edge_span;
  return s;
}

std::uint64_t QuotientSpace::count() const {
  std::uint64_t q = std::uint64_t(big.field->q());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (total > UINT64_MAX / 2 / q) throw std::overflow_error("coset count overflows");
    total *= q;
  }
  return total;
}

std::vector<fe> QuotientSpace::representative(std::uint64_t index) const {
  const Gf& f = *big.field;
  std::uint64_t q = std::uint64_t(f.q());
  std::vector<fe> out(big.ambient, 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    fe c = fe(index % q);
    index /= q;
    if (c == 0) continue;
    const fe* row = complement.row(i);
    for (std::size_t j = 0; j < big.ambient; ++j)
      if (row[j] != 0) out[j] = f.add(out[j], f.mul(c, row[j]));
  }
  if (index != 0) throw std::out_of_range("representative index too large");
  return out;
}

namespace {

std::size_t leading_col(const Mat& m, std::size_t row) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.at(row, c) != 0) return c;
  return m.cols();
}

}  // namespace

QuotientSpace quotient(const ColoringSpace& big, const ColoringSpace& small) {
  if (!big.field->same(*small.field)) throw std::invalid_argument("field mismatch");
  if (big.ambient != small.ambient) throw std::invalid_argument("ambient mismatch");
  if (small.dim() > big.dim()) throw std::invalid_argument("subspace is larger");
  // Membership: stacking must not raise the rank.
  Mat stacked(big.field, big.dim() + small.dim(), big.ambient);
  for (std::size_t i = 0; i < big.dim(); ++i)
    for (std::size_t j = 0; j < big.ambient; ++j) stacked.set(i, j, big.basis.at(i, j));
  for (std::size_t i = 0; i < small.dim(); ++i)
    for (std::size_t j = 0; j < big.ambient; ++j)
      stacked.set(big.dim() + i, j, small.basis.at(i, j));
  if (rank(stacked) != big.dim())
    throw std::invalid_argument("claimed subspace is not contained in the larger space");

  std::vector<char> small_pivot(big.ambient + 1, 0);
  for (std::size_t i = 0; i < small.dim(); ++i)
    small_pivot[leading_col(small.basis, i)] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < big.dim(); ++i)
    if (!small_pivot[leading_col(big.basis, i)]) keep.push_back(i);
  if (keep.size() != big.dim() - small.dim())
    throw std::logic_error("pivot bookkeeping failed");

  QuotientSpace out;
  out.big = big;
  out.small = small;
  out.complement = Mat(big.field, keep.size(), big.ambient);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < big.ambient; ++j)
      out.complement.set(i, j, big.basis.at(keep[i], j));
  return out;
}

BoundaryFrame boundary_frame(const Triangulation& t, const GfPtr& field) {
  if (t.dim() != 4) throw std::invalid_argument("dimension must be 4");
  if (t.closed()) throw std::invalid_argument("boundary frame needs a bounded complex");
  const Gf& f = *field;
  Mat r = r_matrix(field);
  ColoringSpace perm = permitted_space(t, field);
  const auto& btets = t.boundary_ridges();
  const auto& fr = t.facet_ridges();
  const auto& inc = t.ridge_incidence();
  std::size_t n3 = t.faces(3).size();

  // Boundary-value map: x |-> (x_t, y_t) over the boundary tetrahedra.
  Mat bmap(field, 2 * btets.size(), n3);
  for (std::size_t b = 0; b < btets.size(); ++b) {
    const auto& in = inc[btets[b]];
    bmap.set(2 * b, btets[b], 1);
    for (int j = 0; j < 5; ++j) {
      std::size_t col = std::size_t(fr[in.facet[0]][j]);
      bmap.set(2 * b + 1, col, f.add(bmap.at(2 * b + 1, col), r.at(in.drop[0], j)));
    }
  }

  // Image of the permitted space under the map, one row per basis vector.
  Mat image_rows(field, perm.dim(), 2 * btets.size());
  for (std::size_t i = 0; i < perm.dim(); ++i) {
    std::vector<fe> x(perm.basis.row(i), perm.basis.row(i) + n3);
    auto vals = bmap.apply(x);
    for (std::size_t j = 0; j < vals.size(); ++j) image_rows.set(i, j, vals[j]);
  }
  Rref ri = rref(image_rows);

  BoundaryFrame out;
  for (std::size_t b : btets) out.boundary_tets.push_back(t.faces(3)[b]);
  out.space_dim = perm.dim();
  out.image_rank = ri.rank();
  out.image = Mat(field, ri.rank(), 2 * btets.size());
  for (std::size_t i = 0; i < ri.rank(); ++i)
    for (std::size_t j = 0; j < 2 * btets.size(); ++j) out.image.set(i, j, ri.m.at(i, j));
  return out;
}

HexagonReport verify_full_hexagon(const GfPtr& field) {
  Triangulation model = boundary_of_simplex(5);
  const auto& facets = model.facets();

  std::vector<std::optional<BoundaryFrame>> frames(64);
  auto frame_of = [&](unsigned mask) -> const BoundaryFrame& {
    if (!frames[mask]) {
      std::vector<std::vector<int>> sub;
      for (int i = 0; i < 6; ++i)
        if (mask & (1u << i)) sub.push_back(facets[i]);
      frames[mask] = boundary_frame(Triangulation::from_facets(4, sub), field);
    }
    return *frames[mask];
  };

  HexagonReport rep;
  rep.field = field;
  rep.pass = true;
  for (unsigned mask = 1; mask < 63; ++mask) {
    SplitRecord rec;
    for (int i = 0; i < 6; ++i)
      if (mask & (1u << i)) rec.facet_indices.push_back(i);
    rec.k = rec.facet_indices.size();
    const BoundaryFrame& self = frame_of(mask);
    const BoundaryFrame& other = frame_of(63u ^ mask);
    rec.space_dim = self.space_dim;
    rec.fiber_log = self.fiber_log();
    rec.image_match =
        self.boundary_tets == other.boundary_tets && self.image == other.image;
    rec.fiber_ok = rec.fiber_log == HexagonReport::expected_fiber_log[rec.k - 1];
    if (!rec.image_match || !rec.fiber_ok) rep.pass = false;
    rep.splits.push_back(std::move(rec));
  }
  return rep;
}

std::string HexagonReport::to_text() const {
  std::ostringstream out;
  out << "full hexagon over " << field->name() << "\n";
  out << "multiplicities by pentachoron count:";
  for (std::size_t k = 1; k <= 5; ++k) {
    std::uint64_t a = 1;
    for (std::size_t i = 0; i < expected_fiber_log[k - 1]; ++i) a *= std::uint64_t(field->q());
    out << " " << a;
  }
  out << "\n";
  std::size_t bad = 0;
  for (const auto& s : splits)
    if (!s.image_match || !s.fiber_ok) ++bad;
  out << splits.size() << " splits checked, " << bad << " violations\n";
  for (const auto& s : splits) {
    if (s.image_match && s.fiber_ok) continue;
    out << "  split {";
    for (std::size_t i = 0; i < s.facet_indices.size(); ++i)
      out << (i ? "," : "") << s.facet_indices[i];
    out << "}: image " << (s.image_match ? "ok" : "MISMATCH") << ", fiber log "
        << s.fiber_log << (s.fiber_ok ? "" : " UNEXPECTED") << "\n";
  }
  out << (pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

DependencyReport verify_edge_dependencies(const GfPtr& field, fe m) {
  const Gf& f = *field;
  if (m == 0) throw std::invalid_argument("deformation parameter must be invertible");
  EdgeProfile prof = deformed_edge_profile(field, m);
  Mat a = deformed_r_matrix(field, m);

  // Tetrahedra of pentachoron 12345 in drop order; 10 coordinates (x,y).
  std::vector<std::vector<int>> tets;
  for (int drop = 1; drop <= 5; ++drop) {
    std::vector<int> tet;
    for (int v = 1; v <= 5; ++v)
      if (v != drop) tet.push_back(v);
    tets.push_back(tet);
  }
  auto shift_vec = [&](int va, int vb) {
    std::vector<fe> vec(10, 0);
    for (int ti = 0; ti < 5; ++ti) {
      const auto& tet = tets[ti];
      bool hasa = std::find(tet.begin(), tet.end(), va) != tet.end();
      bool hasb = std::find(tet.begin(), tet.end(), vb) != tet.end();
      if (!hasa || !hasb) continue;
      int pos = edge_position_in_tet(tet, va, vb);
      vec[2 * ti] = prof.x[pos];
      vec[2 * ti + 1] = prof.y[pos];
    }
    return vec;
  };

  DependencyReport rep;
  rep.dependencies_hold = true;
  for (int i = 1; i <= 5; ++i) {
    std::vector<fe> sum(10, 0);
    for (int j = 1; j <= 5; ++j) {
      if (j == i) continue;
      fe gamma = i < j ? f.one() : m;
      auto vec = shift_vec(std::min(i, j), std::max(i, j));
      for (int c = 0; c < 10; ++c) sum[c] = f.add(sum[c], f.mul(gamma, vec[c]));
    }
    for (int c = 0; c < 10; ++c)
      if (sum[c] != 0) rep.dependencies_hold = false;
  }

  rep.shifts_in_graph = true;
  for (int va = 1; va <= 5; ++va)
    for (int vb = va + 1; vb <= 5; ++vb) {
      auto vec = shift_vec(va, vb);
      for (int row = 0; row < 5; ++row) {
        fe y = 0;
        for (int col = 0; col < 5; ++col) y = f.add(y, f.mul(a.at(row, col), vec[2 * col]));
        if (y != vec[2 * row + 1]) rep.shifts_in_graph = false;
      }
    }
  return rep;
}

}  // namespace hexinv
