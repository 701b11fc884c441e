#include "ccx/slice.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ccx/classify.hpp"

namespace ccx {

namespace {

// Monotone vertex relabel onto base, base+1, ... in vertex order. Monotone
// maps keep the canonical cell order, so cell ids carry over unchanged.
CellComplex relabel_from(const CellComplex& k, VertexId base) {
  std::map<VertexId, VertexId> m;
  VertexId next = base;
  for (VertexId v : k.vertices()) m[v] = next++;
  RawCells cells;
  cells.reserve(k.size());
  for (const Cell& c : k.cells()) {
    VertexSet nv;
    nv.reserve(c.verts.size());
    for (VertexId v : c.verts) nv.push_back(m[v]);
    cells.push_back({std::move(nv), c.rank});
  }
  return CellComplex::trusted(std::move(cells));
}

// The relabeled complex has the same cell ids, so assignments stay valid.
CcMap with_codomain(const CcMap& m, ComplexPtr cod) {
  return CcMap{m.domain, std::move(cod), m.assignment, m.kind};
}

CcMap with_domain(const CcMap& m, ComplexPtr dom) {
  return CcMap{std::move(dom), m.codomain, m.assignment, m.kind};
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

// Unique vertex of the fiber over each codomain vertex. Reductions have
// singleton vertex fibers, so this is total.
std::map<VertexId, VertexId> vertex_fiber(const CcMap& rho) {
  std::map<VertexId, VertexId> out;
  for (int i = 0; i < rho.domain->size(); ++i) {
    const Cell& x = rho.domain->cell(i);
    const Cell& y = rho.image_cell(i);
    if (x.rank == 0 && y.rank == 0) out[y.verts.front()] = x.verts.front();
  }
  return out;
}

}  // namespace

CellComplex relative_subdivide(const CellComplex& k, const CellComplex& j_prime,
                               const CcMap& rho) {
  bool is_component = false;
  for (const CellComplex& c : k.boundary().components())
    if (c.same_cells_as(j_prime)) {
      is_component = true;
      break;
    }
  if (!is_component)
    fail(Errc::PreconditionFailed, "the sub-complex is not a boundary component");
  if (!rho.codomain || !rho.codomain->same_cells_as(j_prime))
    fail(Errc::DomainMismatch, "the reduction does not land on the boundary component");
  CcMap red = ensure_reduction(rho, Errc::PreconditionFailed, "the gluing map");

  // Domain labels may meet k only inside the component being replaced.
  const VertexSet& jv = j_prime.vertices();
  VertexSet stray =
      set_difference(set_intersection(red.domain->vertices(), k.vertices()), jv);
  if (!stray.empty())
    fail(Errc::PreconditionFailed, "domain vertices collide with the complex",
         to_string(stray));

  CanonicalMaps cm = canonical_maps(k, j_prime);
  CcMap sigma = ensure_reduction(compose(cm.rho, red), Errc::InternalCheckFailed,
                                 "the composite onto the transition");
  RelationReport rel = relation_check(sigma, cm.pi);
  if (rel.compatible != TriState::Holds)
    fail(Errc::CompatibilityViolated,
         "the composite reduction is not compatible with the canonical collapse",
         rel.compatible_witness);

  // Keep cells clear of the component, widen collar cells by the fibers of
  // the reduction, and adjoin the new boundary.
  RawCells cells;
  for (const Cell& c : k.cells()) {
    VertexSet inter = set_intersection(c.verts, jv);
    if (inter.empty()) {
      cells.push_back(c);
      continue;
    }
    if (inter == c.verts) continue;
    VertexSet nv = set_difference(c.verts, jv);
    for (int i = 0; i < red.domain->size(); ++i)
      if (is_subset(red.image_cell(i).verts, c.verts))
        nv = set_union(nv, red.domain->cell(i).verts);
    cells.push_back({std::move(nv), c.rank});
  }
  for (const Cell& c : red.domain->cells()) cells.push_back(c);

  CellComplex out;
  try {
    out = CellComplex::build(std::move(cells));
  } catch (const Error& e) {
    fail(Errc::InternalCheckFailed,
         std::string("subdivided complex failed validation: ") + e.what());
  }

  if (deep_checks()) {
    if (!classify(out).in_C)
      fail(Errc::InternalCheckFailed, "subdivided complex left C");
    RelativeReport rep = relative_report(out, *red.domain);
    if (!rep.uniform || !rep.local_relative)
      fail(Errc::InternalCheckFailed, "subdivided pair is not uniform and local");
    // The transition reduction of the result must be the composite, read
    // through the vertex fibers of the gluing map.
    TransitionResult tr = transition(out, *red.domain);
    std::map<VertexId, VertexId> fib = vertex_fiber(red);
    for (int i = 0; i < red.domain->size(); ++i) {
      VertexSet expect;
      for (VertexId v : sigma.image_cell(i).verts) expect.push_back(fib.at(v));
      expect = normalized(std::move(expect));
      if (tr.complex.cell(tr.of_sub[i]).verts != expect)
        fail(Errc::InternalCheckFailed,
             "transition of the subdivision differs from the composite",
             to_string(red.domain->cell(i).verts));
    }
  }
  return out;
}

SliceVerdict check_slice(const CellComplex& s) {
  SliceVerdict v;
  auto fails = [&](const std::string& clause, const std::string& wit) {
    v.failures.emplace_back(clause, wit);
  };
  if (s.empty()) {
    fails("in_C", "empty complex");
    return v;
  }
  PropertyReport pr = classify(s);
  if (!pr.in_C) {
    std::string wit = !pr.non_singular ? "singular"
                      : !pr.non_pinching
                          ? "pinch at " + to_string(pr.pinch_cells.front().verts)
                          : "not local";
    fails("in_C", wit);
  }
  CellComplex bd = s.boundary();
  VertexSet interior = set_difference(s.vertices(), bd.vertices());
  if (!interior.empty()) fails("vertices_on_boundary", to_string(interior));
  std::vector<CellComplex> comps = bd.components();
  if (comps.size() != 2) {
    fails("two_components", std::to_string(comps.size()) + " boundary components");
    return v;
  }

  static const char* keys[] = {"non_degenerate", "pure_relative", "uniformity_U",
                               "transition_in_B", "local_relative"};
  bool relative_ok = true;
  for (int i = 0; i < 2; ++i) {
    RelativeReport rep = relative_report(s, comps[i]);
    std::string wit;
    for (const char* key : keys)
      if (rep.witnesses.count(key)) {
        wit = rep.witnesses.at(key);
        break;
      }
    if (!rep.uniform) fails("uniform:" + std::to_string(i), wit);
    if (!rep.local_relative) fails("local_relative:" + std::to_string(i), wit);
    relative_ok = relative_ok && rep.uniform && rep.local_relative;
  }
  if (!relative_ok) return v;

  MidsectionResult m0 = midsection(s, comps[0]);
  MidsectionResult m1 = midsection(s, comps[1]);
  if (!m0.complex.same_cells_as(m1.complex)) {
    fails("equal_midsections", "the two midsections differ");
    return v;
  }
  if (!v.failures.empty()) return v;
  v.ok = true;
  v.slice = Slice{s, std::move(comps[0]), std::move(comps[1]), std::move(m0.complex)};
  return v;
}

Slice require_slice(const CellComplex& s) {
  SliceVerdict v = check_slice(s);
  if (!v.ok) {
    const auto& [clause, wit] = v.failures.front();
    fail(Errc::PreconditionFailed, "not a slice, failing " + clause, wit);
  }
  return std::move(*v.slice);
}

GeometricSequence as_geometric(const SliceSequence& q) {
  GeometricSequence seq;
  seq.nodes = {q.j, q.j_trans, q.m, q.l_trans, q.l};
  seq.arrows = {{0, 1, q.rho_j}, {2, 1, q.pi_j}, {2, 3, q.pi_l}, {4, 3, q.rho_l}};
  return seq;
}

SliceSequence slice_to_sequence(const Slice& s) {
  CanonicalMaps cj = canonical_maps(s.complex, s.j);
  CanonicalMaps cl = canonical_maps(s.complex, s.l);
  if (!cj.mid.complex.same_cells_as(cl.mid.complex))
    fail(Errc::InternalCheckFailed, "the two midsections of the slice differ");

  SliceSequence q;
  q.j = cj.rho.domain;
  q.j_trans = cj.rho.codomain;
  q.m = cj.pi.domain;
  q.l_trans = cl.rho.codomain;
  q.l = cl.rho.domain;
  q.rho_j = cj.rho;
  q.pi_j = cj.pi;
  q.pi_l = with_domain(cl.pi, q.m);
  q.rho_l = cl.rho;
  try {
    require_geometric_sequence(as_geometric(q), deep_checks());
  } catch (const Error& e) {
    fail(Errc::InternalCheckFailed,
         std::string("slice produced an invalid sequence: ") + e.what());
  }
  return q;
}

Slice sequence_to_slice(const SliceSequence& q) {
  if (!q.j || !q.j_trans || !q.m || !q.l_trans || !q.l)
    fail(Errc::InvalidArgument, "sequence has a missing node");
  auto joins = [](const CcMap& m, const ComplexPtr& dom, const ComplexPtr& cod,
                  const char* name) {
    if (!m.domain || !m.codomain || !m.domain->same_cells_as(*dom) ||
        !m.codomain->same_cells_as(*cod))
      fail(Errc::DomainMismatch, std::string(name) + " does not join its nodes");
  };
  joins(q.rho_j, q.j, q.j_trans, "rho_j");
  joins(q.pi_j, q.m, q.j_trans, "pi_j");
  joins(q.pi_l, q.m, q.l_trans, "pi_l");
  joins(q.rho_l, q.l, q.l_trans, "rho_l");
  if (q.j->empty() || q.l->empty())
    fail(Errc::PreconditionFailed, "the end nodes must be nonempty");

  SequenceVerdict sv = check_geometric_sequence(as_geometric(q), deep_checks());
  for (const JunctionReport& r : sv.reports)
    if (!r.pass)
      fail(Errc::RelationViolated,
           "junction at node " + std::to_string(r.index) + " fails " + r.clause,
           r.witness);

  VertexSet clash = set_intersection(q.j->vertices(), q.l->vertices());
  if (!clash.empty())
    fail(Errc::VertexClash, "the two ends share vertex labels", to_string(clash));

  // Fresh labels for the transitions; the midsection contributes no labels
  // of its own.
  VertexId base = 0;
  for (VertexId v : q.j->vertices()) base = std::max(base, v + 1);
  for (VertexId v : q.l->vertices()) base = std::max(base, v + 1);
  ComplexPtr jp = share(relabel_from(*q.j_trans, base));
  ComplexPtr lp = share(relabel_from(
      *q.l_trans, base + static_cast<VertexId>(jp->vertices().size())));
  CcMap pi_j = with_codomain(q.pi_j, jp);
  CcMap pi_l = with_codomain(q.pi_l, lp);

  // Augmented midsection: each cell becomes the union of its two collapse
  // images, one rank up. Orthogonality makes this injective.
  RawCells cells;
  std::map<VertexSet, int> seen;
  for (int i = 0; i < q.m->size(); ++i) {
    VertexSet verts = set_union(pi_j.image_cell(i).verts, pi_l.image_cell(i).verts);
    if (!seen.emplace(verts, i).second)
      fail(Errc::InternalCheckFailed, "augmented cells collide", to_string(verts));
    cells.push_back({std::move(verts), q.m->cell(i).rank + 1});
  }
  for (const Cell& c : jp->cells()) cells.push_back(c);
  for (const Cell& c : lp->cells()) cells.push_back(c);
  CellComplex s0;
  try {
    s0 = CellComplex::build(std::move(cells));
  } catch (const Error& e) {
    fail(Errc::InternalCheckFailed,
         std::string("augmented complex failed validation: ") + e.what());
  }

  CellComplex s1 = relative_subdivide(s0, *jp, with_codomain(q.rho_j, jp));
  CellComplex s2 = relative_subdivide(s1, *lp, with_codomain(q.rho_l, lp));

  SliceVerdict v = check_slice(s2);
  if (!v.ok)
    fail(Errc::InternalCheckFailed,
         "rebuilt complex is not a slice, failing " + v.failures.front().first,
         v.failures.front().second);
  Slice out = std::move(*v.slice);
  if (out.j.vertices() != q.j->vertices()) std::swap(out.j, out.l);
  if (!out.j.same_cells_as(*q.j) || !out.l.same_cells_as(*q.l))
    fail(Errc::InternalCheckFailed, "rebuilt boundary differs from the end nodes");

  if (deep_checks()) {
    if (!find_isomorphism(out.midsection, *q.m))
      fail(Errc::InternalCheckFailed, "rebuilt midsection has a different shape");
    if (!find_isomorphism(transition(out.complex, out.j).complex, *q.j_trans))
      fail(Errc::InternalCheckFailed, "rebuilt transition has a different shape");
  }
  return out;
}

}  // namespace ccx
