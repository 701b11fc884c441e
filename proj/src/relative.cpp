#include "ccx/relative.hpp"

#include <set>

#include "ccx/classify.hpp"
#include "ccx/dual.hpp"
#include "ccx/error.hpp"

namespace ccx {

namespace {

// Everything the relative constructions need to know about the collar of a
// vertex set: the cells meeting it halfway, which of them are edges, and per
// collar cell the crossing edges inside it and the trace on the vertex set.
struct CollarInfo {
  VertexSet j0;
  std::vector<int> ids;                 // collar cell ids, ascending
  std::vector<int> crossing;            // the rank-1 collar cells, ascending
  std::vector<VertexSet> edges_in;      // per collar cell: crossing positions
  std::vector<VertexSet> cap;           // per collar cell: intersection with j0
};

CollarInfo collect_collar(const CellComplex& k, const VertexSet& j0) {
  CollarInfo ci;
  ci.j0 = j0;
  ci.ids = collar(k, j0);
  std::map<int, int> cross_pos;
  for (int id : ci.ids)
    if (k.cell(id).rank == 1) {
      cross_pos[id] = static_cast<int>(ci.crossing.size());
      ci.crossing.push_back(id);
    }
  for (int id : ci.ids) {
    const Cell& c = k.cell(id);
    ci.cap.push_back(set_intersection(c.verts, j0));
    VertexSet e;
    for (int cid : ci.crossing)
      if (is_subset(k.cell(cid).verts, c.verts)) e.push_back(cross_pos[cid]);
    ci.edges_in.push_back(std::move(e));
  }
  return ci;
}

void check_degenerate(const CellComplex& k, const CellComplex& j) {
  const VertexSet& j0 = j.vertices();
  for (const auto& c : k.cells())
    if (is_subset(c.verts, j0) && !j.has_cell(c.verts))
      fail(Errc::DegenerateCellInComplement,
           "cell outside the sub-complex with every vertex inside it",
           to_string(c.verts));
}

// Trace purity per collar cell. Fills the top trace rank and returns the
// first offending collar cell, if any.
std::string scan_traces(const CellComplex& k, const CellComplex& j,
                        const CollarInfo& ci, std::vector<int>& trace_rank) {
  trace_rank.assign(ci.ids.size(), -1);
  std::string witness;
  for (std::size_t t = 0; t < ci.ids.size(); ++t) {
    CellComplex tr = j.restriction(ci.cap[t]);
    trace_rank[t] = tr.max_rank();
    if (witness.empty() && !is_pure(tr))
      witness = to_string(k.cell(ci.ids[t]).verts);
  }
  return witness;
}

// Minimal collar cells above each sub-complex cell together with their shared
// rank; rank stays -1 where there is no such cell or the ranks disagree.
struct SubAbove {
  std::string witness;  // empty when every sub-complex cell is covered evenly
  std::vector<std::vector<int>> mins;  // collar indices
  std::vector<int> rank;
};

SubAbove minimal_collar_above(const CellComplex& k, const CellComplex& j,
                              const CollarInfo& ci) {
  SubAbove sa;
  sa.mins.resize(j.size());
  sa.rank.assign(j.size(), -1);
  for (int s = 0; s < j.size(); ++s) {
    const VertexSet& a = j.cell(s).verts;
    std::vector<int> over;
    for (std::size_t t = 0; t < ci.ids.size(); ++t)
      if (is_subset(a, k.cell(ci.ids[t]).verts))
        over.push_back(static_cast<int>(t));
    if (over.empty()) {
      if (sa.witness.empty()) sa.witness = to_string(a);
      continue;
    }
    std::vector<int> mins;
    for (int t : over) {
      bool minimal = true;
      for (int u : over)
        if (u != t && is_strict_subset(k.cell(ci.ids[u]).verts,
                                       k.cell(ci.ids[t]).verts)) {
          minimal = false;
          break;
        }
      if (minimal) mins.push_back(t);
    }
    const int r = k.cell(ci.ids[mins[0]]).rank;
    bool even = true;
    for (int t : mins) even = even && k.cell(ci.ids[t]).rank == r;
    if (even)
      sa.rank[s] = r;
    else if (sa.witness.empty())
      sa.witness = to_string(a);
    sa.mins[s] = std::move(mins);
  }
  return sa;
}

// Reduced cell per collar cell: the sub-complex endpoints of its crossing
// edges. Requires every crossing edge to meet the sub-complex in one vertex.
std::vector<VertexSet> reduced_cells(const CellComplex& k,
                                     const CollarInfo& ci,
                                     std::string* bad = nullptr) {
  std::vector<VertexId> endpoint(ci.crossing.size());
  for (std::size_t t = 0; t < ci.crossing.size(); ++t) {
    const VertexSet capped =
        set_intersection(k.cell(ci.crossing[t]).verts, ci.j0);
    if (capped.size() != 1) {
      const std::string w = to_string(k.cell(ci.crossing[t]).verts);
      if (bad) {
        *bad = w;
        return {};
      }
      fail(Errc::PreconditionFailed,
           "crossing edge does not meet the sub-complex in a single vertex", w);
    }
    endpoint[t] = capped[0];
  }
  std::vector<VertexSet> red(ci.ids.size());
  for (std::size_t t = 0; t < ci.ids.size(); ++t) {
    if (ci.edges_in[t].empty()) {
      const std::string w = to_string(k.cell(ci.ids[t]).verts);
      if (bad) {
        *bad = w;
        return {};
      }
      fail(Errc::PreconditionFailed, "collar cell without a crossing edge", w);
    }
    VertexSet r;
    for (int p : ci.edges_in[t]) r.push_back(endpoint[p]);
    red[t] = normalized(std::move(r));
  }
  return red;
}

// First pair of collar cells whose traces and reduced cells order
// differently, or the empty string.
std::string uniformity_witness(const CellComplex& k, const CollarInfo& ci,
                               const std::vector<VertexSet>& red) {
  const int n = static_cast<int>(ci.ids.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (is_subset(ci.cap[a], ci.cap[b]) != is_subset(red[a], red[b]))
        return to_string(k.cell(ci.ids[a]).verts) + " vs " +
               to_string(k.cell(ci.ids[b]).verts);
    }
  return {};
}

}  // namespace

std::vector<int> collar(const CellComplex& k, const VertexSet& b) {
  const VertexSet bn = normalized(b);
  std::vector<int> out;
  for (int i = 0; i < k.size(); ++i) {
    const VertexSet capped = set_intersection(k.cell(i).verts, bn);
    if (!capped.empty() && capped != k.cell(i).verts) out.push_back(i);
  }
  return out;
}

MidsectionResult midsection(const CellComplex& k, const CellComplex& j) {
  if (!k.has_subcomplex(j))
    fail(Errc::InvalidArgument,
         "midsection needs a subcomplex of the ambient complex");
  if (!is_local(k))
    fail(Errc::PreconditionFailed, "midsection needs a local ambient complex");
  check_degenerate(k, j);
  CollarInfo ci = collect_collar(k, j.vertices());
  if (ci.ids.empty())
    fail(Errc::EmptyCollar,
         "no cell meets the sub-complex without lying inside it");
  for (std::size_t t = 0; t < ci.ids.size(); ++t) {
    if (k.cell(ci.ids[t]).rank != 2) continue;
    if (!is_connected(j.restriction(ci.cap[t])))
      fail(Errc::NonConnectedTrace,
           "rank-2 collar cell with a disconnected trace",
           to_string(k.cell(ci.ids[t]).verts));
  }

  RawCells raw;
  std::set<VertexSet> seen;
  for (std::size_t t = 0; t < ci.ids.size(); ++t) {
    const Cell& c = k.cell(ci.ids[t]);
    if (ci.edges_in[t].empty())
      fail(Errc::InternalCheckFailed,
           "collar cell of a local complex without a crossing edge",
           to_string(c.verts));
    if (!seen.insert(ci.edges_in[t]).second)
      fail(Errc::InternalCheckFailed,
           "two collar cells share their crossing edges", to_string(c.verts));
    raw.push_back({ci.edges_in[t], c.rank - 1});
  }

  MidsectionResult out;
  out.complex = CellComplex::trusted(std::move(raw));
  out.edge_of_vertex.reserve(ci.crossing.size());
  for (int cid : ci.crossing) out.edge_of_vertex.push_back(k.cell(cid).verts);
  out.to_collar.assign(out.complex.size(), -1);
  for (std::size_t t = 0; t < ci.ids.size(); ++t) {
    const int m = out.complex.id_of(ci.edges_in[t]);
    out.to_collar[m] = ci.ids[t];
    out.from_collar[ci.ids[t]] = m;
  }

  if (deep_checks()) {
    for (std::size_t a = 0; a < ci.ids.size(); ++a)
      for (std::size_t b = 0; b < ci.ids.size(); ++b) {
        const bool in_k =
            is_subset(k.cell(ci.ids[a]).verts, k.cell(ci.ids[b]).verts);
        const bool in_m = is_subset(ci.edges_in[a], ci.edges_in[b]);
        if (in_k != in_m)
          fail(Errc::InternalCheckFailed,
               "collar correspondence is not an order embedding",
               to_string(k.cell(ci.ids[a]).verts) + " vs " +
                   to_string(k.cell(ci.ids[b]).verts));
      }
  }
  return out;
}

MidsectionResult local_figure(const CellComplex& k, const VertexSet& x) {
  const int id = k.id_of(normalized(x));
  if (k.is_maximal(id))
    fail(Errc::MaximalCellHasNoFigure, "maximal cells have no local figure",
         to_string(k.cell(id).verts));
  return midsection(k, k.restriction(k.cell(id).verts));
}

TransitionResult transition(const CellComplex& k, const CellComplex& j) {
  if (!k.has_subcomplex(j))
    fail(Errc::InvalidArgument,
         "transition needs a subcomplex of the ambient complex");
  TransitionResult out;
  if (j.empty()) return out;

  CollarInfo ci = collect_collar(k, j.vertices());
  if (ci.ids.empty())
    fail(Errc::PreconditionFailed, "transition needs a nonempty collar");
  const std::vector<VertexSet> red = reduced_cells(k, ci);

  const std::string uw = uniformity_witness(k, ci, red);
  if (!uw.empty())
    fail(Errc::UniformityViolated,
         "traces and reduced cells order differently", uw);

  std::vector<int> trace_rank;
  const std::string pw = scan_traces(k, j, ci, trace_rank);
  if (!pw.empty())
    fail(Errc::NotPureRelative, "impure trace on a collar cell", pw);
  SubAbove sa = minimal_collar_above(k, j, ci);
  if (!sa.witness.empty())
    fail(Errc::NotPureRelative,
         "sub-complex cell not covered by minimal collar cells of one rank",
         sa.witness);

  // Within a fiber of the reduction all traces top out at the same rank and
  // the minimal members sit exactly one rank higher.
  const int n = static_cast<int>(ci.ids.size());
  std::map<VertexSet, int> rank_of;
  for (int t = 0; t < n; ++t) {
    auto [it, fresh] = rank_of.emplace(red[t], trace_rank[t]);
    if (!fresh && it->second != trace_rank[t])
      fail(Errc::InternalCheckFailed,
           "trace ranks differ within a reduced-cell fiber",
           to_string(red[t]));
  }
  if (deep_checks()) {
    for (int t = 0; t < n; ++t) {
      bool minimal = true;
      for (int u = 0; u < n && minimal; ++u)
        minimal = u == t || red[u] != red[t] ||
                  !is_strict_subset(k.cell(ci.ids[u]).verts,
                                    k.cell(ci.ids[t]).verts);
      if (minimal && trace_rank[t] != k.cell(ci.ids[t]).rank - 1)
        fail(Errc::InternalCheckFailed,
             "minimal fiber member off by more than one rank",
             to_string(k.cell(ci.ids[t]).verts));
    }
  }

  RawCells raw;
  for (const auto& [vs, r] : rank_of) raw.push_back({vs, r});
  out.complex = CellComplex::build(std::move(raw));
  for (int t = 0; t < n; ++t)
    out.of_collar[ci.ids[t]] = out.complex.id_of(red[t]);

  out.of_sub.assign(j.size(), -1);
  for (int s = 0; s < j.size(); ++s) {
    const VertexSet& w = red[sa.mins[s][0]];
    for (int t : sa.mins[s])
      if (red[t] != w)
        fail(Errc::UniformityViolated,
             "minimal collar cells above a sub-complex cell reduce differently",
             to_string(j.cell(s).verts));
    const int id = out.complex.id_of(w);
    if (out.complex.cell(id).rank != sa.rank[s] - 1)
      fail(Errc::UniformityViolated,
           "reduced cell rank differs from the relative rank",
           to_string(j.cell(s).verts));
    out.of_sub[s] = id;
  }
  return out;
}

RelativeReport relative_report(const CellComplex& k, const CellComplex& j) {
  if (!k.has_subcomplex(j))
    fail(Errc::InvalidArgument,
         "relative report needs a subcomplex of the ambient complex");
  RelativeReport rep;
  const VertexSet& j0 = j.vertices();

  rep.non_degenerate = true;
  for (const auto& c : k.cells())
    if (is_subset(c.verts, j0) && !j.has_cell(c.verts)) {
      rep.non_degenerate = false;
      rep.witnesses["non_degenerate"] = to_string(c.verts);
      break;
    }

  CollarInfo ci = collect_collar(k, j0);

  std::vector<int> trace_rank;
  const std::string pw = scan_traces(k, j, ci, trace_rank);
  SubAbove sa = minimal_collar_above(k, j, ci);
  rep.pure_relative = pw.empty() && sa.witness.empty();
  if (!pw.empty())
    rep.witnesses["pure_relative"] = pw;
  else if (!sa.witness.empty())
    rep.witnesses["pure_relative"] = sa.witness;
  for (int s = 0; s < j.size(); ++s)
    if (sa.rank[s] >= 1) rep.relative_rank[s] = sa.rank[s] - 1;

  std::string crossing_bad;
  const std::vector<VertexSet> red = reduced_cells(k, ci, &crossing_bad);
  if (!crossing_bad.empty()) {
    rep.uniformity_U = false;
    rep.witnesses["uniformity_U"] = crossing_bad;
  } else {
    const std::string uw = uniformity_witness(k, ci, red);
    rep.uniformity_U = uw.empty();
    if (!uw.empty()) rep.witnesses["uniformity_U"] = uw;
  }

  try {
    TransitionResult t = transition(k, j);
    const bool in_b = !j.empty() && classify(t.complex).in_B;
    rep.transition_in_B = in_b;
    rep.transition_complex = std::move(t.complex);
    if (!in_b) rep.witnesses["transition_in_B"] = "transition not in B";
  } catch (const Error& e) {
    rep.witnesses["transition_in_B"] = e.what();
  }
  rep.uniform = rep.non_degenerate && rep.pure_relative && rep.uniformity_U &&
                rep.transition_in_B;

  rep.local_relative = rep.non_degenerate && is_local(k);
  if (!is_local(k)) rep.witnesses["local_relative"] = "ambient complex not local";
  if (rep.local_relative && !j.empty()) {
    for (const CellComplex& comp : j.components()) {
      CollarInfo cc = collect_collar(k, comp.vertices());
      for (std::size_t t = 0; t < cc.ids.size() && rep.local_relative; ++t)
        if (!is_connected(comp.restriction(cc.cap[t]))) {
          rep.local_relative = false;
          rep.witnesses["local_relative"] =
              "disconnected trace on " + to_string(k.cell(cc.ids[t]).verts);
        }
      if (!rep.local_relative) break;
      try {
        MidsectionResult m = midsection(k, comp);
        if (!is_local(m.complex)) {
          rep.local_relative = false;
          rep.witnesses["local_relative"] = "midsection not local";
        }
      } catch (const Error& e) {
        rep.local_relative = false;
        rep.witnesses["local_relative"] = e.what();
      }
      if (!rep.local_relative) break;
    }
  }

  rep.exactly_collared = rep.non_degenerate;
  if (rep.exactly_collared && !j.empty()) {
    // Group collar cells by crossing-edge set; the grouped map must send
    // each group to its trace, a cell of the sub-complex one rank down,
    // bijectively and preserving order both ways.
    std::map<VertexSet, std::pair<VertexSet, int>> fiber;
    std::string wit;
    for (std::size_t t = 0; t < ci.ids.size() && wit.empty(); ++t) {
      if (ci.edges_in[t].empty()) {
        wit = "no crossing edge in " + to_string(k.cell(ci.ids[t]).verts);
        break;
      }
      const auto val = std::make_pair(ci.cap[t], k.cell(ci.ids[t]).rank - 1);
      auto [it, fresh] = fiber.emplace(ci.edges_in[t], val);
      if (!fresh && it->second != val)
        wit = "ambiguous image for " + to_string(k.cell(ci.ids[t]).verts);
    }
    if (wit.empty()) {
      std::set<VertexSet> images;
      for (const auto& [e, cv] : fiber) {
        const auto cid = j.find(cv.first);
        if (!cid || j.cell(*cid).rank != cv.second) {
          wit = "trace " + to_string(cv.first) +
                " is not a sub-complex cell of the expected rank";
          break;
        }
        if (!images.insert(cv.first).second) {
          wit = "two crossing-edge sets share the trace " + to_string(cv.first);
          break;
        }
      }
      if (wit.empty() && static_cast<int>(images.size()) != j.size())
        wit = "not onto the sub-complex";
    }
    if (wit.empty()) {
      for (auto a = fiber.begin(); a != fiber.end() && wit.empty(); ++a)
        for (auto b = fiber.begin(); b != fiber.end(); ++b)
          if (is_subset(a->first, b->first) !=
              is_subset(a->second.first, b->second.first)) {
            wit = "order disagreement between " + to_string(a->second.first) +
                  " and " + to_string(b->second.first);
            break;
          }
    }
    if (!wit.empty()) {
      rep.exactly_collared = false;
      rep.witnesses["exactly_collared"] = wit;
    }
  }
  return rep;
}

CanonicalMaps canonical_maps(const CellComplex& k, const CellComplex& j) {
  if (!classify(k).in_C)
    fail(Errc::PreconditionFailed, "ambient complex not in C");
  bool bdry_comp = false;
  for (const CellComplex& c : k.boundary().components())
    if (c.same_cells_as(j)) {
      bdry_comp = true;
      break;
    }
  if (!bdry_comp)
    fail(Errc::PreconditionFailed,
         "sub-complex is not a boundary component of the ambient complex");
  if (!classify(j).in_B)
    fail(Errc::PreconditionFailed, "boundary component not in B");
  RelativeReport rep = relative_report(k, j);
  if (!rep.uniform)
    fail(Errc::PreconditionFailed, "the pair is not uniform",
         rep.witnesses.count("uniformity_U") ? rep.witnesses["uniformity_U"]
                                             : std::string());
  if (!rep.local_relative)
    fail(Errc::PreconditionFailed, "the pair is not local",
         rep.witnesses.count("local_relative") ? rep.witnesses["local_relative"]
                                               : std::string());

  CanonicalMaps out;
  out.mid = midsection(k, j);
  out.trans = transition(k, j);
  ComplexPtr tp = share(out.trans.complex);

  out.rho = make_cell_map(share(j), tp, out.trans.of_sub);
  ConditionReport rrep = check_reduction(out.rho);
  if (!rrep.all_pass())
    fail(Errc::InternalCheckFailed,
         "canonical reduction fails its conditions", rrep.summary());

  std::vector<int> pasg(out.mid.complex.size());
  for (int m = 0; m < out.mid.complex.size(); ++m)
    pasg[m] = out.trans.of_collar.at(out.mid.to_collar[m]);
  out.pi = make_cell_map(share(out.mid.complex), tp, std::move(pasg));
  ConditionReport crep = check_collapse(out.pi);
  if (!crep.all_pass())
    fail(Errc::InternalCheckFailed, "canonical collapse fails its conditions",
         crep.summary());

  if (deep_checks() &&
      relation_check(out.rho, out.pi).compatible != TriState::Holds)
    fail(Errc::InternalCheckFailed, "canonical maps are not compatible");
  return out;
}

const char* tristate_name(TriState t) {
  switch (t) {
    case TriState::Holds: return "holds";
    case TriState::Fails: return "fails";
    default: return "not applicable";
  }
}

RelationReport relation_check(const CcMap& j, const CcMap& l) {
  const bool same_cod = j.codomain->same_cells_as(*l.codomain);
  const bool same_dom = j.domain->same_cells_as(*l.domain);
  if (!same_cod && !same_dom)
    fail(Errc::ShapeMismatch, "maps share neither domain nor codomain");
  RelationReport rep;

  if (same_cod) {
    rep.compatible = TriState::Holds;
    const int nc = j.codomain->size();
    std::vector<int> fj(nc, 0), fl(nc, 0);
    for (int x = 0; x < j.domain->size(); ++x) ++fj[j(x)];
    for (int y = 0; y < l.domain->size(); ++y) ++fl[l(y)];
    for (int w = 0; w < nc; ++w)
      if (fj[w] != 1 && fl[w] != 1) {
        rep.compatible = TriState::Fails;
        rep.compatible_witness =
            "fibers over " + to_string(j.codomain->cell(w).verts);
        break;
      }
    const CellComplex& dj = *j.domain;
    for (int x = 0; x < dj.size() && rep.compatible == TriState::Holds; ++x)
      for (int x2 = x + 1; x2 < dj.size(); ++x2) {
        const auto v = dj.join(x, x2);
        if (!v) continue;
        const auto iv = j.codomain->join(j(x), j(x2));
        if (!iv || *iv != j(*v)) {
          rep.compatible = TriState::Fails;
          rep.compatible_witness = "join of " + to_string(dj.cell(x).verts) +
                                   " and " + to_string(dj.cell(x2).verts);
          break;
        }
      }
    const CellComplex& dl = *l.domain;
    for (int y = 0; y < dl.size() && rep.compatible == TriState::Holds; ++y)
      for (int y2 = y + 1; y2 < dl.size(); ++y2) {
        const auto m = dl.meet(y, y2);
        if (!m) continue;
        const VertexSet rhs = set_intersection(l.image_cell(y).verts,
                                               l.image_cell(y2).verts);
        if (l.image_cell(*m).verts != rhs) {
          rep.compatible = TriState::Fails;
          rep.compatible_witness = "meet of " + to_string(dl.cell(y).verts) +
                                   " and " + to_string(dl.cell(y2).verts);
          break;
        }
      }
  }

  if (same_dom) {
    rep.reflective = TriState::Holds;
    rep.orthogonal = TriState::Holds;
    const CellComplex& di = *j.domain;
    for (int w = 0; w < di.size(); ++w)
      for (int w2 = w + 1; w2 < di.size(); ++w2) {
        const std::string pair = to_string(di.cell(w).verts) + " and " +
                                 to_string(di.cell(w2).verts);
        if (rep.reflective == TriState::Holds) {
          const auto ja = j.codomain->join(j(w), j(w2));
          const auto la = l.codomain->join(l(w), l(w2));
          if (ja && la) {
            const auto dv = di.join(w, w2);
            if (!dv || j(*dv) != *ja || l(*dv) != *la) {
              rep.reflective = TriState::Fails;
              rep.reflective_witness = "join of " + pair;
            }
          }
        }
        if (rep.orthogonal == TriState::Holds) {
          const VertexSet jc = set_intersection(j.image_cell(w).verts,
                                                j.image_cell(w2).verts);
          const VertexSet lc = set_intersection(l.image_cell(w).verts,
                                                l.image_cell(w2).verts);
          if (!jc.empty() && !lc.empty()) {
            const auto dm = di.meet(w, w2);
            if (!dm || j.image_cell(*dm).verts != jc ||
                l.image_cell(*dm).verts != lc) {
              rep.orthogonal = TriState::Fails;
              rep.orthogonal_witness = "meet of " + pair;
            }
          }
        }
      }
  }
  return rep;
}

namespace {

bool can_reduce(const CcMap& m) {
  return m.kind == MapKind::Reduction || m.kind == MapKind::Isomorphism;
}

bool can_collapse(const CcMap& m) {
  return m.kind == MapKind::Collapse || m.kind == MapKind::Isomorphism;
}

void check_sequence_into(const GeometricSequence& seq, SequenceVerdict& v,
                         const std::string& prefix) {
  const int nn = static_cast<int>(seq.nodes.size());
  const int rank0 = seq.nodes[0]->max_rank();
  for (int i = 0; i < nn; ++i) {
    const PropertyReport pr = classify(*seq.nodes[i]);
    v.reports.push_back({i, prefix + "node", pr.in_B,
                         pr.in_B ? "" : "node not in B"});
    const bool same_rank = seq.nodes[i]->max_rank() == rank0;
    v.reports.push_back({i, prefix + "rank", same_rank,
                         same_rank ? "" : "rank differs from the first node"});
  }
  for (std::size_t i = 0; i < seq.arrows.size(); ++i) {
    const MapKind kind = seq.arrows[i].map.kind;
    const bool ok = kind == MapKind::Reduction || kind == MapKind::Collapse ||
                    kind == MapKind::Isomorphism;
    v.reports.push_back({static_cast<int>(i), prefix + "arrow-kind", ok,
                         ok ? "" : kind_name(kind)});
  }
  for (int t = 1; t + 1 < nn; ++t) {
    const auto& a = seq.arrows[t - 1];
    const auto& b = seq.arrows[t];
    const bool a_in = a.to == t;
    const bool b_in = b.to == t;
    if (a_in != b_in) {
      v.reports.push_back({t, prefix + "alternation", false,
                           "one arrow enters and one leaves"});
      continue;
    }
    if (a_in) {
      const bool ab = can_reduce(a.map) && can_collapse(b.map);
      const bool ba = can_reduce(b.map) && can_collapse(a.map);
      if (!ab && !ba) {
        v.reports.push_back({t, prefix + "kinds", false,
                             "needs one reduction and one collapse"});
        continue;
      }
      bool pass = false;
      std::string wit;
      if (ab) {
        const RelationReport r = relation_check(a.map, b.map);
        pass = r.compatible == TriState::Holds;
        wit = r.compatible_witness;
      }
      if (!pass && ba) {
        const RelationReport r = relation_check(b.map, a.map);
        pass = r.compatible == TriState::Holds;
        if (!pass && wit.empty()) wit = r.compatible_witness;
      }
      v.reports.push_back({t, prefix + "compatible", pass, pass ? "" : wit});
    } else {
      const bool cols = can_collapse(a.map) && can_collapse(b.map);
      const bool reds = can_reduce(a.map) && can_reduce(b.map);
      if (!cols && !reds) {
        v.reports.push_back({t, prefix + "kinds", false,
                             "needs two collapses or two reductions"});
        continue;
      }
      const RelationReport r = relation_check(a.map, b.map);
      bool pass = cols && r.orthogonal == TriState::Holds;
      if (!pass) pass = reds && r.reflective == TriState::Holds;
      const std::string clause = cols ? "orthogonal" : "reflective";
      const std::string wit =
          cols ? r.orthogonal_witness : r.reflective_witness;
      v.reports.push_back({t, prefix + clause, pass, pass ? "" : wit});
    }
  }
}

}  // namespace

SequenceVerdict check_geometric_sequence(const GeometricSequence& seq,
                                         bool include_dual) {
  if (seq.nodes.empty())
    fail(Errc::InvalidArgument, "a geometric sequence needs at least one node");
  if (seq.arrows.size() + 1 != seq.nodes.size())
    fail(Errc::InvalidArgument,
         "a sequence of N nodes needs exactly N-1 arrows");
  for (const auto& n : seq.nodes)
    if (!n) fail(Errc::InvalidArgument, "null sequence node");
  for (std::size_t i = 0; i < seq.arrows.size(); ++i) {
    const auto& a = seq.arrows[i];
    const int lo = std::min(a.from, a.to);
    const int hi = std::max(a.from, a.to);
    if (lo != static_cast<int>(i) || hi != static_cast<int>(i) + 1)
      fail(Errc::InvalidArgument, "arrow must join consecutive nodes",
           std::to_string(i));
    if (!a.map.domain || !a.map.codomain)
      fail(Errc::InvalidArgument, "arrow without a map");
    if (!a.map.domain->same_cells_as(*seq.nodes[a.from]) ||
        !a.map.codomain->same_cells_as(*seq.nodes[a.to]))
      fail(Errc::DomainMismatch,
           "arrow endpoints disagree with the sequence nodes",
           std::to_string(i));
  }

  SequenceVerdict v;
  check_sequence_into(seq, v, "");
  if (include_dual) {
    GeometricSequence d;
    bool built = true;
    try {
      for (const auto& n : seq.nodes)
        d.nodes.push_back(dual_complex(*n).complex);
      for (const auto& a : seq.arrows)
        d.arrows.push_back({a.from, a.to, dual_map(a.map).map});
    } catch (const Error& e) {
      v.reports.push_back({0, "dual", false, e.what()});
      built = false;
    }
    if (built) check_sequence_into(d, v, "dual:");
  }
  for (const auto& r : v.reports) v.valid = v.valid && r.pass;
  return v;
}

void require_geometric_sequence(const GeometricSequence& seq,
                                bool include_dual) {
  const SequenceVerdict v = check_geometric_sequence(seq, include_dual);
  for (const auto& r : v.reports)
    if (!r.pass)
      fail(Errc::JunctionViolation,
           "junction " + std::to_string(r.index) + " fails " + r.clause,
           r.witness);
}

}  // namespace ccx
