#include "hexinv/homology.hpp"

#include <stdexcept>

namespace hexinv {

Mat boundary_matrix(const Triangulation& t, int d, const GfPtr& field) {
  if (d < 1 || d > t.dim()) throw std::invalid_argument("no boundary map in that degree");
  const auto& lower = t.faces(d - 1);
  const auto& upper = t.faces(d);
  Mat m(field, lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    std::vector<int> face(upper[c]);
    for (int i = 0; i <= d; ++i) {
      int v = face[i];
      face.erase(face.begin() + i);
      std::size_t r = t.face_index(d - 1, face);
      m.set(r, c, field->from_int(i % 2 ? -1 : 1));
      face.insert(face.begin() + i, v);
    }
  }
  return m;
}

std::vector<long long> betti_mod_p(const Triangulation& t, int p) {
  auto field = Gf::make(p, 1);
  std::vector<std::size_t> ranks(t.dim() + 2, 0);  // ranks[d] = rank of boundary_d
  for (int d = 1; d <= t.dim(); ++d) ranks[d] = rank(boundary_matrix(t, d, field));
  std::vector<long long> betti(t.dim() + 1);
  for (int d = 0; d <= t.dim(); ++d) {
    long long nd = (long long)t.faces(d).size();
    betti[d] = nd - (long long)ranks[d] - (long long)ranks[d + 1];
  }
  return betti;
}

}  // namespace hexinv
