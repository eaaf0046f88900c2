#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexinv {

/// Pure simplicial complex of dimension 1..4 given by its facets, with the
/// full face lattice precomputed.  Construction validates that the complex is
/// a pseudomanifold (every ridge in at most two facets) and connected across
/// the facet-ridge graph; every facet is stored sorted and the facet list is
/// in lexicographic order.
class Triangulation {
 public:
  /// Incidence of a ridge ((dim-1)-face): the one or two facets containing
  /// it, ordered by facet index, with the position of the dropped vertex.
  struct RidgeIncidence {
    int count = 0;
    std::array<int, 2> facet{-1, -1};
    std::array<int, 2> drop{-1, -1};  // 0-based position of the opposite vertex
  };

  static Triangulation from_facets(int dim, std::vector<std::vector<int>> facets);

  int dim() const { return dim_; }
  bool closed() const { return closed_; }

  const std::vector<std::vector<int>>& facets() const { return faces_[dim_]; }
  const std::vector<std::vector<int>>& faces(int d) const;

  /// Index into faces(d); throws if the face is absent.
  std::size_t face_index(int d, const std::vector<int>& face) const;
  bool has_face(int d, const std::vector<int>& face) const;

  std::vector<long long> f_vector() const;
  long long euler_characteristic() const;

  const std::vector<RidgeIncidence>& ridge_incidence() const { return ridge_inc_; }

  /// For each facet, the ridge index obtained by dropping vertex position i.
  const std::vector<std::array<int, 5>>& facet_ridges() const { return facet_ridges_; }

  /// Ridge indices lying in exactly one facet; empty iff closed.
  const std::vector<std::size_t>& boundary_ridges() const { return boundary_ridges_; }

  /// Indices of facets containing the given face.
  std::vector<std::size_t> star_facets(const std::vector<int>& face) const;

  /// Facets of the link: (facet minus face) for each facet in the star.
  std::vector<std::vector<int>> link_facets(const std::vector<int>& face) const;

  /// Vertex relabelling; the map must be injective, positive, and cover
  /// every vertex in use.
  Triangulation relabel(const std::map<int, int>& map) const;

  const std::optional<std::string>& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool operator==(const Triangulation& o) const {
    return dim_ == o.dim_ && facets() == o.facets();
  }

 private:
  Triangulation() = default;

  int dim_ = 0;
  bool closed_ = false;
  std::vector<std::vector<std::vector<int>>> faces_;  // per dimension 0..dim_
  std::vector<RidgeIncidence> ridge_inc_;
  std::vector<std::array<int, 5>> facet_ridges_;
  std::vector<std::size_t> boundary_ridges_;
  std::optional<std::string> name_;
};

/// Boundary of the 5-simplex on vertices 1..6, the model complex of the
/// hexagon moves.  Only n = 5 is accepted.
Triangulation boundary_of_simplex(int n);

/// Cycle with n >= 3 vertices.
Triangulation circle(int n);

/// Boundary of the (d+1)-simplex, d in 1..4.
Triangulation sphere(int d);

/// The 6-vertex triangulation of the real projective plane.
Triangulation projective_plane();

/// Staircase triangulation of |A| x |B|: one simplex per monotone lattice
/// path through each facet pair, vertices relabelled 1..n in lexicographic
/// pair order.  dim(A) + dim(B) must be at most 4.
Triangulation staircase_product(const Triangulation& a, const Triangulation& b);

/// Orientation of a closed 4-dimensional complex: signs on facets such that
/// the two induced orientations of every tetrahedron cancel.  The
/// lexicographically first facet gets +1.
struct Orientation {
  bool orientable = false;
  std::vector<std::int8_t> sign;  // per facet; empty when not orientable
};
Orientation orient(const Triangulation& t);

/// TRI text format: '#' comments, a `dim 4` line, an optional `name ...`
/// line, then one facet (5 vertex labels) per line.
Triangulation ingest_tri(std::istream& in);
Triangulation ingest_tri_file(const std::string& path);
std::string emit_tri(const Triangulation& t);

}  // namespace hexinv
