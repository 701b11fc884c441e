#pragma once

#include "ccx/map.hpp"

namespace ccx {

// Maximal cells containing every vertex of a. Requires a pure complex.
std::vector<int> dual_set(const CellComplex& k, const VertexSet& a);

// Dual of a vertex set near the boundary: the maximal cells above it in the
// whole complex together with the top boundary cells above it.
struct TildeDual {
  VertexSet origin;
  std::vector<VertexSet> interior_members;  // maximal cells of the complex
  std::vector<VertexSet> boundary_members;  // top-rank cells of the boundary
};

TildeDual bdual_set(const CellComplex& k, const VertexSet& a);

struct DualComplexResult {
  ComplexPtr complex;
  std::vector<int> primal_to_dual;  // cell id -> dual cell id
  std::vector<int> dual_to_primal;
  // Dual vertex v corresponds to this primal maximal cell.
  std::vector<int> maximal_of_dual_vertex;
};

// Inclusion-reversing dual with one fresh vertex per maximal cell, numbered
// in canonical cell order so the construction is reproducible.
DualComplexResult dual_complex(const CellComplex& k);

// The image of a map under duality: sends the dual of x to the dual of its
// image, between the dual complexes. Reductions dualize to collapses and
// conversely; isomorphisms stay isomorphisms.
struct DualMapResult {
  CcMap map;
  DualComplexResult domain_dual;
  DualComplexResult codomain_dual;
};

DualMapResult dual_map(const CcMap& m);

}  // namespace ccx
