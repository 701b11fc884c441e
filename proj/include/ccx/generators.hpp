#pragma once

#include <string>

#include "ccx/complex.hpp"

namespace ccx {

// Boundary of the d-simplex on vertices 0..d: all proper nonempty subsets.
CellComplex simplex_boundary(int d);

// Cycle on n >= 3 vertices 0..n-1.
CellComplex cycle(int n);

// Path with n >= 1 edges on vertices 0..n.
CellComplex path(int n);

// Square torus obtained from an r x c grid of lattice points (r, c >= 4) by
// identifying opposite sides, so there are (r-1)(c-1) distinct vertices.
// Vertex at row i, column j gets id i*(c-1)+j.
CellComplex torus_grid(int r, int c);

// Side surface of a prism over an n-gon: bottom vertices 0..n-1, top
// vertices n..2n-1, n square side cells, no top or bottom face.
CellComplex prism(int n);

// Two solid tetrahedra glued along the shared triangle {0,1,2}.
CellComplex bitetra();

// Two tetrahedron boundaries sharing only the vertex 0.
CellComplex wedge_tetra();

CellComplex generate(const std::string& name, const std::vector<int>& params);

}  // namespace ccx
