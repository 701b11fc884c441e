#include "ccx/causal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "ccx/classify.hpp"
#include "ccx/dual.hpp"

namespace ccx {

namespace {

bool can_reduce(const CcMap& m) {
  return m.kind == MapKind::Reduction || m.kind == MapKind::Isomorphism;
}

bool can_collapse(const CcMap& m) {
  return m.kind == MapKind::Collapse || m.kind == MapKind::Isomorphism;
}

// Vertices renamed to 0..k-1 in order. Monotone, so cell ids survive and two
// complexes agree up to such a renaming exactly when these cells coincide.
RawCells canonical_cells(const CellComplex& k) {
  std::map<VertexId, VertexId> relabel;
  VertexId next = 0;
  for (VertexId v : k.vertices()) relabel[v] = next++;
  RawCells out;
  out.reserve(k.cells().size());
  for (const Cell& c : k.cells()) {
    VertexSet vs;
    vs.reserve(c.verts.size());
    for (VertexId v : c.verts) vs.push_back(relabel[v]);
    out.push_back({std::move(vs), c.rank});
  }
  return out;
}

bool canonically_equal(const CellComplex& a, const CellComplex& b) {
  return a.size() == b.size() && canonical_cells(a) == canonical_cells(b);
}

void iso_descend(const CellComplex& a, const CellComplex& b,
                 const std::vector<VertexId>& averts,
                 const std::vector<VertexId>& bverts,
                 const std::vector<std::vector<int>>& due, std::size_t i,
                 std::map<VertexId, VertexId>& sigma, std::vector<bool>& used,
                 std::vector<std::map<VertexId, VertexId>>& found) {
  if (i == averts.size()) {
    found.push_back(sigma);
    return;
  }
  for (std::size_t w = 0; w < bverts.size(); ++w) {
    if (used[w]) continue;
    sigma[averts[i]] = bverts[w];
    used[w] = true;
    bool ok = true;
    for (int x : due[i]) {
      VertexSet img;
      for (VertexId v : a.cell(x).verts) img.push_back(sigma[v]);
      const auto id = b.find(normalized(std::move(img)));
      if (!id || b.cell(*id).rank != a.cell(x).rank) {
        ok = false;
        break;
      }
    }
    if (ok) iso_descend(a, b, averts, bverts, due, i + 1, sigma, used, found);
    used[w] = false;
    sigma.erase(averts[i]);
  }
}

// Every rank-preserving vertex bijection inducing a cell bijection, as
// cell-level assignments. Backtracking in vertex order, checking each cell
// as soon as its last vertex is placed.
std::vector<std::vector<int>> all_isomorphisms(const CellComplex& a,
                                               const CellComplex& b) {
  std::vector<std::vector<int>> out;
  if (a.size() != b.size() || a.f_vector() != b.f_vector()) return out;
  const std::vector<VertexId> averts = a.vertices();
  const std::vector<VertexId> bverts = b.vertices();
  if (averts.size() != bverts.size()) return out;
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < averts.size(); ++i) pos[averts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> due(averts.size());
  for (int x = 0; x < a.size(); ++x) {
    int last = 0;
    for (VertexId v : a.cell(x).verts) last = std::max(last, pos[v]);
    due[last].push_back(x);
  }
  std::map<VertexId, VertexId> sigma;
  std::vector<bool> used(bverts.size(), false);
  std::vector<std::map<VertexId, VertexId>> found;
  iso_descend(a, b, averts, bverts, due, 0, sigma, used, found);
  for (const auto& s : found) {
    std::vector<int> cm(a.size());
    for (int x = 0; x < a.size(); ++x) {
      VertexSet img;
      for (VertexId v : a.cell(x).verts) img.push_back(s.at(v));
      cm[x] = b.id_of(normalized(std::move(img)));
    }
    out.push_back(std::move(cm));
  }
  return out;
}

// The transition bijection forced by conjugating ma with phi against mb,
// when it is well defined, bijective, rank preserving, and induced by a
// vertex bijection.
std::optional<std::vector<int>> transport(const CcMap& ma, const CcMap& mb,
                                          const std::vector<int>& phi,
                                          const CellComplex& ta,
                                          const CellComplex& tb) {
  if (ta.size() != tb.size()) return std::nullopt;
  std::vector<int> out(ta.size(), -1);
  for (std::size_t x = 0; x < ma.assignment.size(); ++x) {
    const int t = ma.assignment[x];
    const int y = mb.assignment[phi[x]];
    if (out[t] == -1)
      out[t] = y;
    else if (out[t] != y)
      return std::nullopt;
  }
  std::vector<bool> hit(tb.size(), false);
  for (int t = 0; t < ta.size(); ++t) {
    if (out[t] < 0 || hit[out[t]]) return std::nullopt;
    hit[out[t]] = true;
    if (ta.cell(t).rank != tb.cell(out[t]).rank) return std::nullopt;
  }
  std::map<VertexId, VertexId> sigma;
  for (int t = 0; t < ta.size(); ++t)
    if (ta.cell(t).verts.size() == 1) {
      if (tb.cell(out[t]).verts.size() != 1) return std::nullopt;
      sigma[ta.cell(t).verts[0]] = tb.cell(out[t]).verts[0];
    }
  if (sigma.size() != ta.vertices().size()) return std::nullopt;
  for (int t = 0; t < ta.size(); ++t) {
    VertexSet img;
    for (VertexId v : ta.cell(t).verts) {
      const auto it = sigma.find(v);
      if (it == sigma.end()) return std::nullopt;
      img.push_back(it->second);
    }
    if (normalized(std::move(img)) != tb.cell(out[t]).verts) return std::nullopt;
  }
  return out;
}

// Existence of node isomorphisms commuting with all four arrows. The outer
// label isomorphisms force the transitions, so only the three labels are
// searched.
bool diagram_isomorphic(const State& sa, const State& sb) {
  const auto& fa = sa.fragment;
  const auto& fb = sb.fragment;
  for (int i = 0; i < 5; ++i)
    if (fa.nodes[i]->f_vector() != fb.nodes[i]->f_vector()) return false;
  const auto isos0 = all_isomorphisms(*fa.nodes[0], *fb.nodes[0]);
  const auto isos2 = all_isomorphisms(*fa.nodes[2], *fb.nodes[2]);
  const auto isos4 = all_isomorphisms(*fa.nodes[4], *fb.nodes[4]);
  for (const auto& phi0 : isos0) {
    const auto t1 = transport(fa.arrows[0].map, fb.arrows[0].map, phi0,
                              *fa.nodes[1], *fb.nodes[1]);
    if (!t1) continue;
    for (const auto& phi2 : isos2) {
      const auto u1 = transport(fa.arrows[1].map, fb.arrows[1].map, phi2,
                                *fa.nodes[1], *fb.nodes[1]);
      if (!u1 || *u1 != *t1) continue;
      const auto t3 = transport(fa.arrows[2].map, fb.arrows[2].map, phi2,
                                *fa.nodes[3], *fb.nodes[3]);
      if (!t3) continue;
      for (const auto& phi4 : isos4) {
        const auto u3 = transport(fa.arrows[3].map, fb.arrows[3].map, phi4,
                                  *fa.nodes[3], *fb.nodes[3]);
        if (u3 && *u3 == *t3) return true;
      }
    }
  }
  return false;
}

bool plainly_equal(const State& a, const State& b) {
  for (int i = 0; i < 5; ++i)
    if (!canonically_equal(*a.fragment.nodes[i], *b.fragment.nodes[i]))
      return false;
  for (int i = 0; i < 4; ++i)
    if (a.fragment.arrows[i].map.assignment !=
        b.fragment.arrows[i].map.assignment)
      return false;
  return true;
}

}  // namespace

State make_state(StateKind kind, std::array<ComplexPtr, 3> labels,
                 std::vector<CcMap> maps) {
  for (const auto& l : labels)
    if (!l) fail(Errc::FragmentInvalid, "state label missing");
  if (maps.size() != 4)
    fail(Errc::FragmentInvalid, "a state fragment carries four maps",
         std::to_string(maps.size()));
  for (const auto& m : maps)
    if (!m.domain || !m.codomain)
      fail(Errc::FragmentInvalid, "fragment arrow without endpoints");
  for (const auto& l : labels)
    if (l->max_rank() != labels[0]->max_rank())
      fail(Errc::FragmentInvalid, "label ranks differ",
           std::to_string(labels[0]->max_rank()) + " vs " +
               std::to_string(l->max_rank()));
  const int owner[4] = {0, 1, 1, 2};
  for (int i = 0; i < 4; ++i)
    if (!maps[i].domain->same_cells_as(*labels[owner[i]]))
      fail(Errc::FragmentInvalid, "arrow domain disagrees with its label",
           "arrow " + std::to_string(i));
  if (!maps[0].codomain->same_cells_as(*maps[1].codomain) ||
      !maps[2].codomain->same_cells_as(*maps[3].codomain))
    fail(Errc::FragmentInvalid, "arrows into one transition disagree");
  const bool fits =
      kind == StateKind::Slice
          ? can_reduce(maps[0]) && can_reduce(maps[3]) &&
                can_collapse(maps[1]) && can_collapse(maps[2])
          : can_collapse(maps[0]) && can_collapse(maps[3]) &&
                can_reduce(maps[1]) && can_reduce(maps[2]);
  if (!fits)
    fail(Errc::FragmentInvalid, "arrow kinds do not fit the state kind",
         std::string(kind_name(maps[0].kind)) + ", " +
             kind_name(maps[1].kind) + ", " + kind_name(maps[2].kind) + ", " +
             kind_name(maps[3].kind));

  State s;
  s.kind = kind;
  s.labels = std::move(labels);
  s.fragment.nodes = {s.labels[0], maps[0].codomain, s.labels[1],
                      maps[3].codomain, s.labels[2]};
  s.fragment.arrows = {{0, 1, std::move(maps[0])},
                       {2, 1, std::move(maps[1])},
                       {2, 3, std::move(maps[2])},
                       {4, 3, std::move(maps[3])}};
  const SequenceVerdict v = check_geometric_sequence(s.fragment);
  for (const auto& r : v.reports)
    if (!r.pass)
      fail(Errc::FragmentInvalid,
           "fragment junction " + std::to_string(r.index) + " fails " +
               r.clause,
           r.witness);
  return s;
}

State slice_state(const SliceSequence& q) {
  return make_state(StateKind::Slice, {q.j, q.m, q.l},
                    {q.rho_j, q.pi_j, q.pi_l, q.rho_l});
}

State unit_state(const CellComplex& j) {
  if (!classify(j).in_B)
    fail(Errc::FragmentInvalid, "a unit needs a closed boundary label");
  State s;
  s.unit = true;
  const ComplexPtr p = share(j);
  s.labels = {p, p, p};
  return s;
}

State connecting_state(const State& left, const State& right) {
  if (left.unit || right.unit || left.kind != StateKind::Slice ||
      right.kind != StateKind::Slice)
    fail(Errc::InvalidArgument, "connecting states join two slice states");
  if (!left.labels[2]->same_cells_as(*right.labels[0]))
    fail(Errc::EndpointMismatch, "the slice states share no boundary label",
         to_string(left.labels[2]->vertices()));
  return make_state(
      StateKind::Connecting,
      {left.labels[1], left.labels[2], right.labels[1]},
      {left.fragment.arrows[2].map, left.fragment.arrows[3].map,
       right.fragment.arrows[0].map, right.fragment.arrows[1].map});
}

bool state_equal(const State& a, const State& b) {
  if (a.unit != b.unit || a.kind != b.kind) return false;
  if (a.unit)
    return canonically_equal(*a.labels[0], *b.labels[0]) ||
           find_isomorphism(*a.labels[0], *b.labels[0]).has_value();
  return plainly_equal(a, b) || diagram_isomorphic(a, b);
}

namespace {

void check_junction(const State& s, const State& t, int at) {
  const std::string where =
      "states " + std::to_string(at) + " and " + std::to_string(at + 1);
  if (s.kind == t.kind)
    fail(Errc::EndpointMismatch, "adjacent states must alternate kinds",
         where);
  if (s.unit || t.unit) {
    const State& u = s.unit ? s : t;
    const State& n = s.unit ? t : s;
    if (!n.labels[1]->same_cells_as(*u.labels[0]))
      fail(Errc::EndpointMismatch, "unit label differs from its neighbour",
           where);
    return;
  }
  if (!s.labels[1]->same_cells_as(*t.labels[0]) ||
      !s.labels[2]->same_cells_as(*t.labels[1]))
    fail(Errc::EndpointMismatch, "shared labels disagree", where);
  if (!s.fragment.nodes[3]->same_cells_as(*t.fragment.nodes[1]))
    fail(Errc::EndpointMismatch, "shared transition disagrees", where);
  if (s.fragment.arrows[2].map.assignment !=
          t.fragment.arrows[0].map.assignment ||
      s.fragment.arrows[3].map.assignment !=
          t.fragment.arrows[1].map.assignment)
    fail(Errc::EndpointMismatch, "shared half maps disagree", where);
}

}  // namespace

StateSequenceExpr make_sequence(std::vector<State> states) {
  if (states.empty())
    fail(Errc::InvalidArgument, "a sequence needs at least one state");
  for (std::size_t i = 0; i + 1 < states.size(); ++i)
    check_junction(states[i], states[i + 1], static_cast<int>(i));
  for (std::size_t i = 0; i + 2 < states.size(); ++i)
    if (states[i + 1].unit && !state_equal(states[i], states[i + 2]))
      fail(Errc::EndpointMismatch, "the states around a unit differ",
           "state " + std::to_string(i + 1));
  return StateSequenceExpr{std::move(states)};
}

const State& image_of(const StateSequenceExpr& q) {
  if (q.states.empty()) fail(Errc::InvalidArgument, "empty sequence");
  return q.states.front();
}

const State& domain_of(const StateSequenceExpr& q) {
  if (q.states.empty()) fail(Errc::InvalidArgument, "empty sequence");
  return q.states.back();
}

std::pair<StateKind, StateKind> hom_kinds(const StateSequenceExpr& q) {
  return {domain_of(q).kind, image_of(q).kind};
}

const State& outgoing_slice(const StateSequenceExpr& q) {
  for (const State& s : q.states)
    if (s.kind == StateKind::Slice && !s.unit) return s;
  fail(Errc::PreconditionFailed, "the sequence has no slice state");
}

const State& ingoing_slice(const StateSequenceExpr& q) {
  for (auto it = q.states.rbegin(); it != q.states.rend(); ++it)
    if (it->kind == StateKind::Slice && !it->unit) return *it;
  fail(Errc::PreconditionFailed, "the sequence has no slice state");
}

namespace {

bool literally_equal_states(const State& a, const State& b) {
  if (a.unit != b.unit || a.kind != b.kind) return false;
  if (a.unit) return a.labels[0]->same_cells_as(*b.labels[0]);
  for (int i = 0; i < 5; ++i)
    if (!a.fragment.nodes[i]->same_cells_as(*b.fragment.nodes[i]))
      return false;
  for (int i = 0; i < 4; ++i)
    if (a.fragment.arrows[i].map.assignment !=
        b.fragment.arrows[i].map.assignment)
      return false;
  return true;
}

}  // namespace

StateSequenceExpr compose_sequences(const StateSequenceExpr& s,
                                    const StateSequenceExpr& g) {
  if (s.states.empty() || g.states.empty())
    fail(Errc::InvalidArgument, "cannot compose an empty sequence");
  if (!state_equal(s.states.back(), g.states.front()))
    fail(Errc::EndpointMismatch,
         "the domain of the first sequence differs from the image of the "
         "second");
  if (!literally_equal_states(s.states.back(), g.states.front()))
    fail(Errc::EndpointMismatch,
         "the shared state agrees only up to relabeling; relabel before "
         "composing");
  std::vector<State> out = s.states;
  out.insert(out.end(), g.states.begin() + 1, g.states.end());
  return make_sequence(std::move(out));
}

namespace {

Cobordism realize_state(const State& s) {
  if (s.unit) return unit_cobordism(*s.labels[0]);
  SliceSequence q;
  q.j = s.labels[0];
  q.j_trans = s.fragment.nodes[1];
  q.m = s.labels[1];
  q.l_trans = s.fragment.nodes[3];
  q.l = s.labels[2];
  q.rho_j = s.fragment.arrows[0].map;
  q.pi_j = s.fragment.arrows[1].map;
  q.pi_l = s.fragment.arrows[2].map;
  q.rho_l = s.fragment.arrows[3].map;
  const Slice sl = sequence_to_slice(q);
  return make_cobordism(sl.complex,
                        {boundary_component_index(sl.complex, sl.l)});
}

}  // namespace

Cobordism realize(const StateSequenceExpr& q) {
  if (q.states.empty()) fail(Errc::InvalidArgument, "empty sequence");
  bool any = false;
  for (const State& s : q.states)
    any = any || s.unit || s.kind == StateKind::Slice;
  if (!any)
    fail(Errc::PreconditionFailed, "nothing to realize without a slice state");
  std::optional<Cobordism> acc;
  for (auto it = q.states.rbegin(); it != q.states.rend(); ++it) {
    if (!it->unit && it->kind == StateKind::Connecting) continue;
    Cobordism next = realize_state(*it);
    if (!acc)
      acc = std::move(next);
    else
      acc = compose_cobordisms(*acc, next);
  }
  return *acc;
}

namespace {

ComplexPtr dual_label(const ComplexPtr& p) { return dual_complex(*p).complex; }

State reversed_state(const State& s) {
  if (s.unit) return s;
  State out;
  out.kind = s.kind;
  out.labels = {s.labels[2], s.labels[1], s.labels[0]};
  const auto& f = s.fragment;
  out.fragment.nodes = {f.nodes[4], f.nodes[3], f.nodes[2], f.nodes[1],
                        f.nodes[0]};
  out.fragment.arrows = {{0, 1, f.arrows[3].map},
                         {2, 1, f.arrows[2].map},
                         {2, 3, f.arrows[1].map},
                         {4, 3, f.arrows[0].map}};
  return out;
}

State starred_state(const State& s) {
  State out;
  out.unit = s.unit;
  out.kind =
      s.kind == StateKind::Slice ? StateKind::Connecting : StateKind::Slice;
  if (s.unit) {
    const ComplexPtr d = dual_label(s.labels[0]);
    out.labels = {d, d, d};
    return out;
  }
  for (int i = 0; i < 3; ++i) out.labels[i] = dual_label(s.labels[i]);
  const auto& f = s.fragment;
  out.fragment.nodes = {out.labels[0], dual_label(f.nodes[1]), out.labels[1],
                        dual_label(f.nodes[3]), out.labels[2]};
  out.fragment.arrows = {{0, 1, dual_map(f.arrows[0].map).map},
                         {2, 1, dual_map(f.arrows[1].map).map},
                         {2, 3, dual_map(f.arrows[2].map).map},
                         {4, 3, dual_map(f.arrows[3].map).map}};
  return out;
}

State dualized_state(const State& s) {
  if (s.unit) return starred_state(s);
  State out;
  out.kind =
      s.kind == StateKind::Slice ? StateKind::Connecting : StateKind::Slice;
  for (int i = 0; i < 3; ++i) out.labels[i] = dual_label(s.labels[2 - i]);
  const auto& f = s.fragment;
  out.fragment.nodes = {out.labels[0], dual_label(f.nodes[3]), out.labels[1],
                        dual_label(f.nodes[1]), out.labels[2]};
  out.fragment.arrows = {{0, 1, dual_map(f.arrows[3].map).map},
                         {2, 1, dual_map(f.arrows[2].map).map},
                         {2, 3, dual_map(f.arrows[1].map).map},
                         {4, 3, dual_map(f.arrows[0].map).map}};
  return out;
}

void revalidate_fragment(const State& s) {
  if (s.unit) return;
  const SequenceVerdict v = check_geometric_sequence(s.fragment);
  for (const auto& r : v.reports)
    if (!r.pass)
      fail(Errc::InternalCheckFailed, "functor image fragment fails " + r.clause,
           r.witness);
}

}  // namespace

StateSequenceExpr apply_functor(Functor f, const StateSequenceExpr& q) {
  if (q.states.empty()) fail(Errc::InvalidArgument, "empty sequence");
  std::vector<State> out;
  out.reserve(q.states.size());
  switch (f) {
    case Functor::T:
      for (auto it = q.states.rbegin(); it != q.states.rend(); ++it)
        out.push_back(reversed_state(*it));
      break;
    case Functor::P:
      for (const State& s : q.states) out.push_back(starred_state(s));
      break;
    case Functor::C:
      for (auto it = q.states.rbegin(); it != q.states.rend(); ++it)
        out.push_back(dualized_state(*it));
      break;
  }
  if (deep_checks())
    for (const State& s : out) revalidate_fragment(s);
  return make_sequence(std::move(out));
}

}  // namespace ccx
