#pragma once

#include <vector>

#include "hexinv/gf.hpp"
#include "hexinv/mat.hpp"
#include "hexinv/triangulation.hpp"

namespace hexinv {

/// Boundary matrix of the simplicial chain complex over GF(p): rows are the
/// (d-1)-faces, columns the d-faces, entry (-1)^i for dropping position i.
Mat boundary_matrix(const Triangulation& t, int d, const GfPtr& field);

/// Mod-p Betti numbers b_0 .. b_dim.  Used to validate shipped data assets.
std::vector<long long> betti_mod_p(const Triangulation& t, int p);

}  // namespace hexinv
