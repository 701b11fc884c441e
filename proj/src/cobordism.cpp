#include "ccx/cobordism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ccx/classify.hpp"
#include "ccx/dual.hpp"

namespace ccx {

namespace {

// Disjoint union of already validated vertex-disjoint parts.
CellComplex union_of(const std::vector<CellComplex>& parts) {
  RawCells cells;
  for (const CellComplex& p : parts)
    for (const Cell& c : p.cells()) cells.push_back(c);
  return CellComplex::trusted(std::move(cells));
}

std::string first_witness(const RelativeReport& rep) {
  static const char* keys[] = {"non_degenerate", "pure_relative", "uniformity_U",
                               "transition_in_B", "local_relative"};
  for (const char* key : keys)
    if (rep.witnesses.count(key)) return rep.witnesses.at(key);
  return "";
}

// Monotone relabel of every vertex onto base, base+1, ... Cell ids carry
// over; out_map receives old -> new.
CellComplex relabel_from(const CellComplex& k, VertexId base,
                         std::map<VertexId, VertexId>& out_map) {
  out_map.clear();
  VertexId next = base;
  for (VertexId v : k.vertices()) out_map[v] = next++;
  RawCells cells;
  cells.reserve(k.size());
  for (const Cell& c : k.cells()) {
    VertexSet nv;
    nv.reserve(c.verts.size());
    for (VertexId v : c.verts) nv.push_back(out_map[v]);
    cells.push_back({std::move(nv), c.rank});
  }
  return CellComplex::trusted(std::move(cells));
}

CcMap with_codomain(const CcMap& m, ComplexPtr cod) {
  return CcMap{m.domain, std::move(cod), m.assignment, m.kind};
}

CcMap ensure_reduction(CcMap m, Errc code, const std::string& name) {
  if (m.kind == MapKind::Reduction || m.kind == MapKind::Isomorphism) return m;
  ConditionReport rep;
  try {
    rep = check_reduction(m);
  } catch (const Error& e) {
    fail(code, name + " is not a reduction", e.what());
  }
  if (!rep.all_pass()) fail(code, name + " is not a reduction", rep.summary());
  return m;
}

}  // namespace

int boundary_component_index(const CellComplex& k, const CellComplex& comp) {
  std::vector<CellComplex> comps = k.boundary().components();
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    if (comps[i].same_cells_as(comp)) return i;
  fail(Errc::InvalidArgument, "not a boundary component");
}

Cobordism make_cobordism(const CellComplex& k, const std::vector<int>& ingoing_components) {
  if (k.empty()) fail(Errc::InvalidArgument, "empty complex");
  PropertyReport pr = classify(k);
  if (!pr.in_C)
    fail(Errc::NotInC, "the complex is not in C",
         !pr.non_singular ? "singular"
         : !pr.non_pinching
             ? "pinch at " + to_string(pr.pinch_cells.front().verts)
             : "not local");

  const std::vector<CellComplex>& comps = pr.boundary_components;
  std::vector<int> idx = ingoing_components;
  std::sort(idx.begin(), idx.end());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= static_cast<int>(comps.size()))
      fail(Errc::InvalidArgument,
           "boundary component index out of range: " + std::to_string(idx[i]));
    if (i > 0 && idx[i] == idx[i - 1])
      fail(Errc::InvalidArgument, "duplicate boundary component index");
  }

  std::vector<CellComplex> in_parts, out_parts;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    bool chosen = std::binary_search(idx.begin(), idx.end(), i);
    if (chosen && comps[i].max_rank() != k.max_rank() - 1)
      fail(Errc::PreconditionFailed,
           "ingoing component " + std::to_string(i) + " has the wrong rank");
    (chosen ? in_parts : out_parts).push_back(comps[i]);
  }
  CellComplex ingoing = union_of(in_parts);
  CellComplex outgoing = union_of(out_parts);

  for (const Cell& c : k.cells()) {
    if (ingoing.has_cell(c.verts)) continue;
    if (is_subset(c.verts, ingoing.vertices()))
      fail(Errc::Degenerate, "cell outside the ingoing part lies on its vertices",
           to_string(c.verts));
  }

  bool ec = true;
  for (int i : idx) {
    RelativeReport rep = relative_report(k, comps[i]);
    if (!rep.local_relative)
      fail(Errc::NotLocalRelative,
           "ingoing component " + std::to_string(i) + " is not local relative",
           first_witness(rep));
    ec = ec && rep.exactly_collared;
  }
  return Cobordism{k, std::move(ingoing), std::move(outgoing), std::move(idx), ec,
                   false};
}

Cobordism slice_cobordism(const Slice& s) {
  return make_cobordism(s.complex, {boundary_component_index(s.complex, s.j)});
}

Cobordism unit_cobordism(const CellComplex& j) {
  if (j.empty()) fail(Errc::InvalidArgument, "empty complex");
  for (const CellComplex& c : j.components()) {
    if (c.max_rank() != j.max_rank())
      fail(Errc::PreconditionFailed, "unit components must share one rank");
    if (!classify(c).in_B)
      fail(Errc::PreconditionFailed, "unit carrier must be a union of B complexes");
  }
  Cobordism u;
  u.complex = j;
  u.ingoing = j;
  u.outgoing = j;
  u.exactly_collared = true;
  u.unit = true;
  return u;
}

Cobordism dual_cobordism(const Cobordism& c) {
  if (c.unit) return unit_cobordism(*dual_complex(c.complex).complex);

  const CellComplex& k = c.complex;
  const int top = k.max_rank();

  // One vertex per maximal cell, then one per top cell of the outgoing
  // boundary; ids follow canonical cell order.
  std::map<int, VertexId> label_of_max;
  VertexId next = 0;
  for (int id : k.maximal_cells()) label_of_max[id] = next++;
  const VertexId boundary_base = next;
  std::map<int, VertexId> label_of_bmax;
  for (int id : c.outgoing.maximal_cells()) {
    if (c.outgoing.cell(id).rank != top - 1)
      fail(Errc::PreconditionFailed, "outgoing boundary is not pure");
    label_of_bmax[id] = next++;
  }

  const VertexSet bd_verts = k.boundary().vertices();
  RawCells cells;
  for (int id = 0; id < k.size(); ++id) {
    const Cell& x = k.cell(id);
    if (c.ingoing.has_cell(x.verts)) continue;
    VertexSet dv;
    for (int up : k.above(id))
      if (k.is_maximal(up)) dv.push_back(label_of_max.at(up));
    if (is_subset(x.verts, bd_verts))
      for (const auto& [oid, lab] : label_of_bmax)
        if (is_subset(x.verts, c.outgoing.cell(oid).verts)) dv.push_back(lab);
    cells.push_back({normalized(std::move(dv)), top - x.rank});
  }
  for (int id = 0; id < c.outgoing.size(); ++id) {
    VertexSet dv;
    for (int up : c.outgoing.above(id))
      if (c.outgoing.is_maximal(up)) dv.push_back(label_of_bmax.at(up));
    cells.push_back({normalized(std::move(dv)), (top - 1) - c.outgoing.cell(id).rank});
  }

  CellComplex d;
  try {
    d = CellComplex::build(std::move(cells));
  } catch (const Error& e) {
    fail(Errc::InternalCheckFailed,
         std::string("dual cells failed validation: ") + e.what());
  }

  // The boundary splits into duals of the outgoing boundary, which become
  // ingoing, and duals of the collar along the old ingoing part.
  std::vector<int> in_idx;
  std::vector<CellComplex> dcomps = d.boundary().components();
  for (int i = 0; i < static_cast<int>(dcomps.size()); ++i) {
    const VertexSet& dv = dcomps[i].vertices();
    bool on_bduals = dv.front() >= boundary_base;
    if (on_bduals != (dv.back() >= boundary_base))
      fail(Errc::InternalCheckFailed, "mixed dual boundary component");
    if (on_bduals) in_idx.push_back(i);
  }

  Cobordism out = make_cobordism(d, in_idx);
  if (deep_checks() && !out.exactly_collared)
    fail(Errc::InternalCheckFailed, "dual cobordism is not exactly collared");
  return out;
}

Cobordism compose_cobordisms(const Cobordism& a, const Cobordism& b,
                             const GlueSpec& glue) {
  if (a.unit) {
    std::vector<CellComplex> b_in = b.ingoing.components();
    if (glue.to_ingoing < 0 || glue.to_ingoing >= static_cast<int>(b_in.size()))
      fail(Errc::InvalidArgument, "ingoing component index out of range");
    if (!a.complex.same_cells_as(b_in[glue.to_ingoing]))
      fail(Errc::NotConnecting, "unit does not match the glued component");
    return b;
  }
  if (b.unit) {
    std::vector<CellComplex> a_out = a.outgoing.components();
    if (glue.from_outgoing < 0 || glue.from_outgoing >= static_cast<int>(a_out.size()))
      fail(Errc::InvalidArgument, "outgoing component index out of range");
    if (!b.complex.same_cells_as(a_out[glue.from_outgoing]))
      fail(Errc::NotConnecting, "unit does not match the glued component");
    return a;
  }

  if (a.complex.max_rank() != b.complex.max_rank())
    fail(Errc::NotConnecting, "the two sides have different ranks");
  std::vector<CellComplex> a_out = a.outgoing.components();
  std::vector<CellComplex> b_in = b.ingoing.components();
  if (glue.from_outgoing < 0 || glue.from_outgoing >= static_cast<int>(a_out.size()))
    fail(Errc::InvalidArgument, "outgoing component index out of range");
  if (glue.to_ingoing < 0 || glue.to_ingoing >= static_cast<int>(b_in.size()))
    fail(Errc::InvalidArgument, "ingoing component index out of range");
  const CellComplex& ja = a_out[glue.from_outgoing];
  const CellComplex& lb = b_in[glue.to_ingoing];

  CcMap rho_a = glue.rho_a ? *glue.rho_a : identity_map(share(ja));
  if (!rho_a.codomain || !rho_a.codomain->same_cells_as(ja))
    fail(Errc::DomainMismatch, "rho_a does not land on the glued component of a");
  ComplexPtr iface = rho_a.domain;

  // The interface may touch a only inside the glued component; b moves to
  // fresh labels entirely.
  VertexSet stray = set_difference(
      set_intersection(iface->vertices(), a.complex.vertices()), ja.vertices());
  if (!stray.empty())
    fail(Errc::VertexClash, "interface labels collide with the first side",
         to_string(stray));
  VertexId base = 0;
  for (VertexId v : a.complex.vertices()) base = std::max(base, v + 1);
  for (VertexId v : iface->vertices()) base = std::max(base, v + 1);
  std::map<VertexId, VertexId> bmap;
  CellComplex b_rel = relabel_from(b.complex, base, bmap);
  RawCells lb_cells;
  for (const Cell& c : lb.cells()) {
    VertexSet nv;
    for (VertexId v : c.verts) nv.push_back(bmap.at(v));
    lb_cells.push_back({normalized(std::move(nv)), c.rank});
  }
  ComplexPtr lb_rel = share(CellComplex::trusted(std::move(lb_cells)));

  CcMap rho_b;
  if (glue.rho_b) {
    if (!glue.rho_b->domain || !glue.rho_b->domain->same_cells_as(*iface))
      fail(Errc::DomainMismatch, "the two gluing maps have different interfaces");
    if (!glue.rho_b->codomain || !glue.rho_b->codomain->same_cells_as(lb))
      fail(Errc::DomainMismatch, "rho_b does not land on the glued component of b");
    rho_b = with_codomain(*glue.rho_b, lb_rel);
  } else {
    std::map<VertexId, VertexId> sigma;
    const VertexSet& iv = iface->vertices();
    const VertexSet& lv = lb_rel->vertices();
    if (iv.size() != lv.size())
      fail(Errc::NotConnecting, "no default interface map: vertex counts differ");
    for (std::size_t i = 0; i < iv.size(); ++i) sigma[iv[i]] = lv[i];
    try {
      rho_b = map_from_vertex_bijection(iface, lb_rel, sigma);
    } catch (const Error& e) {
      fail(Errc::NotConnecting, "no default interface isomorphism onto b",
           e.what());
    }
  }
  if (glue.twist) {
    if (glue.twist->kind != MapKind::Isomorphism ||
        !glue.twist->domain->same_cells_as(*iface) ||
        !glue.twist->codomain->same_cells_as(*iface))
      fail(Errc::InvalidArgument, "twist must be an automorphism of the interface");
    rho_b = compose(rho_b, with_codomain(*glue.twist, iface));
  }
  rho_a = ensure_reduction(std::move(rho_a), Errc::NotConnecting, "rho_a");
  rho_b = ensure_reduction(std::move(rho_b), Errc::NotConnecting, "rho_b");

  // Both sides connect through the interface when the composite reductions
  // onto the two transitions form a connecting sequence with the midsection
  // collapses: compatible at the transitions, reflective at the interface.
  CanonicalMaps cma, cmb;
  try {
    cma = canonical_maps(a.complex, ja);
  } catch (const Error& e) {
    fail(Errc::NotConnecting, "the glued component of a is not uniform", e.what());
  }
  try {
    cmb = canonical_maps(b_rel, *lb_rel);
  } catch (const Error& e) {
    fail(Errc::NotConnecting, "the glued component of b is not uniform", e.what());
  }
  CcMap sig_a = ensure_reduction(compose(cma.rho, rho_a), Errc::NotConnecting,
                                 "the composite onto the transition of a");
  CcMap sig_b = ensure_reduction(compose(cmb.rho, rho_b), Errc::NotConnecting,
                                 "the composite onto the transition of b");
  GeometricSequence seq;
  seq.nodes = {cma.pi.domain, sig_a.codomain, iface, sig_b.codomain, cmb.pi.domain};
  seq.arrows = {{0, 1, cma.pi}, {2, 1, sig_a}, {2, 3, sig_b}, {4, 3, cmb.pi}};
  SequenceVerdict sv = check_geometric_sequence(seq, deep_checks());
  for (const JunctionReport& r : sv.reports) {
    if (r.pass) continue;
    if (r.clause == "reflective")
      fail(Errc::ReflectivityViolated,
           "the two interface reductions are not reflective", r.witness);
    fail(Errc::NotConnecting,
         "connecting sequence fails " + r.clause + " at node " +
             std::to_string(r.index),
         r.witness);
  }

  CellComplex ka = relative_subdivide(a.complex, ja, rho_a);
  CellComplex hb = relative_subdivide(b_rel, *lb_rel, rho_b);

  // Union with overlap exactly the interface.
  std::map<VertexSet, Cell> merged;
  for (const Cell& c : ka.cells()) merged.emplace(c.verts, c);
  int overlap = 0;
  for (const Cell& c : hb.cells()) {
    auto [it, fresh] = merged.emplace(c.verts, c);
    if (fresh) continue;
    if (it->second.rank != c.rank || !iface->has_cell(c.verts))
      fail(Errc::InternalCheckFailed, "sides overlap beyond the interface",
           to_string(c.verts));
    ++overlap;
  }
  if (overlap != iface->size())
    fail(Errc::InternalCheckFailed, "the interface is not shared whole");
  RawCells uc;
  uc.reserve(merged.size());
  for (auto& [verts, cell] : merged) uc.push_back(std::move(cell));
  CellComplex u;
  try {
    u = CellComplex::build(std::move(uc));
  } catch (const Error& e) {
    fail(Errc::InternalCheckFailed,
         std::string("glued complex failed validation: ") + e.what());
  }

  std::vector<int> in_idx;
  std::vector<CellComplex> ucomps = u.boundary().components();
  for (const CellComplex& jin : a.ingoing.components()) {
    bool found = false;
    for (int i = 0; i < static_cast<int>(ucomps.size()); ++i)
      if (ucomps[i].same_cells_as(jin)) {
        in_idx.push_back(i);
        found = true;
        break;
      }
    if (!found)
      fail(Errc::InternalCheckFailed, "an ingoing component vanished while gluing");
  }
  return make_cobordism(u, in_idx);
}

}  // namespace ccx
