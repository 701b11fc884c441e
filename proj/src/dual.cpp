#include "ccx/dual.hpp"

#include "ccx/classify.hpp"

namespace ccx {

std::vector<int> dual_set(const CellComplex& k, const VertexSet& a) {
  if (!is_pure(k)) fail(Errc::NotPure, "dual sets need a pure complex");
  VertexSet key = normalized(a);
  for (VertexId v : key)
    if (!contains_vertex(k.vertices(), v))
      fail(Errc::UnknownVertex, "vertex " + std::to_string(v) + " is not in the complex");
  std::vector<int> out;
  for (int z : k.maximal_cells())
    if (is_subset(key, k.cell(z).verts)) out.push_back(z);
  return out;
}

TildeDual bdual_set(const CellComplex& k, const VertexSet& a) {
  if (!is_non_singular(k))
    fail(Errc::PreconditionFailed, "tilde duals need a non-singular complex");
  VertexSet key = normalized(a);
  if (key.empty()) fail(Errc::EmptySet, "tilde dual of the empty set is not defined");
  TildeDual out;
  out.origin = key;
  for (int z : k.maximal_cells())
    if (is_subset(key, k.cell(z).verts)) out.interior_members.push_back(k.cell(z).verts);
  CellComplex bd = k.boundary();
  const int top = bd.max_rank();
  for (int i = 0; i < bd.size(); ++i)
    if (bd.cell(i).rank == top && is_subset(key, bd.cell(i).verts))
      out.boundary_members.push_back(bd.cell(i).verts);
  return out;
}

DualComplexResult dual_complex(const CellComplex& k) {
  PropertyReport props = classify(k);
  if (!props.closed) fail(Errc::NotClosed, "dual complexes are defined for closed complexes");
  if (!props.in_C) fail(Errc::NotInC, "dual complexes need a non-singular non-pinching local complex");

  std::vector<int> tops = k.maximal_cells();
  std::vector<int> vertex_of_maximal(k.size(), -1);
  for (int t = 0; t < static_cast<int>(tops.size()); ++t)
    vertex_of_maximal[tops[t]] = t;

  const int big = k.max_rank();
  RawCells cells;
  std::vector<VertexSet> dual_verts(k.size());
  for (int i = 0; i < k.size(); ++i) {
    VertexSet d;
    for (int z : k.above(i))
      if (k.is_maximal(z)) d.push_back(vertex_of_maximal[z]);
    dual_verts[i] = normalized(std::move(d));
    cells.push_back({dual_verts[i], big - k.cell(i).rank});
  }

  DualComplexResult out;
  out.complex = share(CellComplex::trusted(std::move(cells)));
  out.primal_to_dual.resize(k.size());
  out.dual_to_primal.assign(k.size(), -1);
  for (int i = 0; i < k.size(); ++i) {
    int d = out.complex->id_of(dual_verts[i]);
    out.primal_to_dual[i] = d;
    out.dual_to_primal[d] = i;
  }
  out.maximal_of_dual_vertex = tops;
  return out;
}

DualMapResult dual_map(const CcMap& m) {
  DualMapResult out{CcMap{}, dual_complex(*m.domain), dual_complex(*m.codomain)};
  std::vector<int> assignment(m.domain->size());
  for (int d = 0; d < m.domain->size(); ++d) {
    int x = out.domain_dual.dual_to_primal[d];
    assignment[d] = out.codomain_dual.primal_to_dual[m.assignment[x]];
  }
  out.map = CcMap{out.domain_dual.complex, out.codomain_dual.complex,
                  std::move(assignment), MapKind::Unchecked};

  switch (m.kind) {
    case MapKind::Reduction: {
      out.map.kind = MapKind::Collapse;
      if (deep_checks()) {
        CcMap copy = out.map;
        copy.kind = MapKind::Unchecked;
        if (!check_collapse(copy).all_pass())
          fail(Errc::InternalCheckFailed, "dual of a reduction must collapse");
      }
      break;
    }
    case MapKind::Collapse: {
      out.map.kind = MapKind::Reduction;
      if (deep_checks()) {
        CcMap copy = out.map;
        copy.kind = MapKind::Unchecked;
        if (!check_reduction(copy).all_pass())
          fail(Errc::InternalCheckFailed, "dual of a collapse must reduce");
      }
      break;
    }
    case MapKind::Isomorphism:
      out.map.kind = MapKind::Isomorphism;
      break;
    case MapKind::Homomorphism:
      if (is_order_preserving(out.map) && has_equal_rank_preimages(out.map))
        out.map.kind = MapKind::Homomorphism;
      break;
    case MapKind::Unchecked:
      break;
  }
  return out;
}

}  // namespace ccx
