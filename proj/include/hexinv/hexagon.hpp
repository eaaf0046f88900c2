#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hexinv/gf.hpp"
#include "hexinv/mat.hpp"
#include "hexinv/triangulation.hpp"

namespace hexinv {

/// The 5x5 matrix tying a pentachoron's y-column to its x-column.  Rows and
/// columns are indexed by the five tetrahedra in drop-vertex order (the
/// tetrahedron at index i omits the i-th smallest vertex).
Mat r_matrix(const GfPtr& field);

/// One-parameter deformation of r_matrix; the fixed matrix is the value at
/// m = -1.  m must be invertible.
Mat deformed_r_matrix(const GfPtr& field, fe m);

/// x- and y-values of an edge shift on a tetrahedron ijkl, indexed by the
/// edge position in the order ij, ik, il, jk, jl, kl.
struct EdgeProfile {
  std::array<fe, 6> x{}, y{};
};
EdgeProfile edge_profile(const GfPtr& field);
EdgeProfile deformed_edge_profile(const GfPtr& field, fe m);

/// Position of edge {a,b} within the sorted 4-tuple tet, in the profile
/// order above.
int edge_position_in_tet(const std::vector<int>& tet, int a, int b);

/// For each tetrahedron of a closed 4-complex, the row stating that its two
/// induced y-values agree: (row of t in u1) - (row of t in u2), columns
/// indexed by tetrahedra, pentachora ordered lexicographically.  Square
/// N3 x N3; the kernel is the permitted space.
Mat gluing_matrix(const Triangulation& t, const GfPtr& field);

/// A subspace of x-colorings, held as a canonical (reduced row echelon)
/// basis over F^{N3}.
struct ColoringSpace {
  enum class Role { permitted, edge_span, other };
  GfPtr field;
  std::size_t ambient = 0;
  Mat basis;  // RREF rows
  Role role = Role::other;
  std::size_t dim() const { return basis.rows(); }
};

/// Permitted colorings: x-vectors whose two induced y-values agree on every
/// inner tetrahedron.  Bounded complexes are allowed (boundary tetrahedra
/// are unconstrained); for closed ones this is the kernel of gluing_matrix.
ColoringSpace permitted_space(const Triangulation& t, const GfPtr& field);

/// Whether the two y-values of every inner tetrahedron agree for this x.
bool is_permitted(const Triangulation& t, const GfPtr& field, const std::vector<fe>& x);

/// The x-vector of the shift along one edge (1 on the edge, 0 elsewhere,
/// pushed through the edge profile).
std::vector<fe> edge_shift(const Triangulation& t, const GfPtr& field,
                           const std::vector<int>& edge);

/// Span of all edge shifts.  Verifies every shift is permitted; a violation
/// is a hard failure (logic_error), not a report.
ColoringSpace edge_subspace(const Triangulation& t, const GfPtr& field);

/// Coset representatives of big/small.  The complement basis is pivot-greedy:
/// the rows of big's RREF basis whose pivot columns are not pivot columns of
/// small's.  Representatives are the q^dim combinations of complement rows,
/// enumerated by index with base-q digits as coefficients; the index range
/// [0, count) can be chunked freely for parallel consumption.
struct QuotientSpace {
  ColoringSpace big, small;
  Mat complement;
  std::size_t dim() const { return complement.rows(); }
  std::uint64_t count() const;  // q^dim; throws if it would overflow
  std::vector<fe> representative(std::uint64_t index) const;
};
QuotientSpace quotient(const ColoringSpace& big, const ColoringSpace& small);

/// Boundary data of a bounded 4-complex: which (x_t, y_t) pairs on the
/// boundary tetrahedra are reachable from permitted colorings, and how many
/// colorings sit over each reachable boundary value (always q^fiber_log).
struct BoundaryFrame {
  std::vector<std::vector<int>> boundary_tets;  // lex-ordered vertex tuples
  std::size_t space_dim = 0;                    // dim of the permitted space
  std::size_t image_rank = 0;
  Mat image;  // RREF basis; coordinates alternate x_t, y_t per boundary tet
  std::size_t fiber_log() const { return space_dim - image_rank; }
};
BoundaryFrame boundary_frame(const Triangulation& t, const GfPtr& field);

/// Full verification over one field: for every proper split of the boundary
/// of the 5-simplex into complementary facet sets, the reachable boundary
/// values agree from both sides, and the extension counts match the fixed
/// multiplicities 1, 1, 1, q, q^4 for 1..5 pentachora.
struct SplitRecord {
  std::vector<int> facet_indices;  // which of the 6 model facets form C
  std::size_t k = 0;
  std::size_t space_dim = 0;
  std::size_t fiber_log = 0;
  bool image_match = false;
  bool fiber_ok = false;
};
struct HexagonReport {
  GfPtr field;
  std::vector<SplitRecord> splits;
  bool pass = false;
  /// log_q of the extension multiplicities by pentachoron count 1..5
  static constexpr std::array<std::size_t, 5> expected_fiber_log{0, 0, 0, 1, 4};
  std::string to_text() const;
};
HexagonReport verify_full_hexagon(const GfPtr& field);

/// On the model pentachoron: the five vertex dependencies between deformed
/// edge shifts (weights 1 forward, m backward), and membership of every edge
/// shift in the graph of the deformed matrix.
struct DependencyReport {
  bool dependencies_hold = false;
  bool shifts_in_graph = false;
  bool pass() const { return dependencies_hold && shifts_in_graph; }
};
DependencyReport verify_edge_dependencies(const GfPtr& field, fe m);

}  // namespace hexinv
