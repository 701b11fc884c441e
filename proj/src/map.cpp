#include "ccx/map.hpp"

#include <functional>
#include <numeric>

#include "ccx/classify.hpp"

namespace ccx {

const char* kind_name(MapKind k) {
  switch (k) {
    case MapKind::Unchecked: return "unchecked";
    case MapKind::Homomorphism: return "homomorphism";
    case MapKind::Reduction: return "reduction";
    case MapKind::Collapse: return "collapse";
    case MapKind::Isomorphism: return "isomorphism";
  }
  return "unchecked";
}

ComplexPtr share(CellComplex k) {
  return std::make_shared<const CellComplex>(std::move(k));
}

CcMap identity_map(ComplexPtr k) {
  CcMap m{k, k, std::vector<int>(k->size()), MapKind::Isomorphism};
  std::iota(m.assignment.begin(), m.assignment.end(), 0);
  return m;
}

CcMap make_cell_map(ComplexPtr dom, ComplexPtr cod, std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != dom->size())
    fail(Errc::InvalidArgument, "assignment size does not match the domain");
  for (int v : assignment)
    if (v < 0 || v >= cod->size())
      fail(Errc::InvalidArgument, "assignment target out of range");
  return CcMap{std::move(dom), std::move(cod), std::move(assignment),
               MapKind::Unchecked};
}

CcMap make_map(ComplexPtr dom, ComplexPtr cod,
               const std::vector<std::pair<VertexSet, VertexSet>>& pairs) {
  std::vector<int> assignment(dom->size(), -1);
  for (const auto& [from, to] : pairs) {
    int i = dom->id_of(normalized(from));
    int j = cod->id_of(normalized(to));
    if (assignment[i] != -1)
      fail(Errc::InvalidArgument, "cell assigned twice", to_string(from));
    assignment[i] = j;
  }
  for (int i = 0; i < dom->size(); ++i)
    if (assignment[i] == -1)
      fail(Errc::InvalidArgument, "assignment is not total",
           to_string(dom->cell(i).verts));
  return CcMap{std::move(dom), std::move(cod), std::move(assignment),
               MapKind::Unchecked};
}

bool is_order_preserving(const CcMap& m, std::string* witness) {
  const CellComplex& dom = *m.domain;
  const CellComplex& cod = *m.codomain;
  for (int i = 0; i < dom.size(); ++i) {
    for (int j : dom.above(i)) {
      if (is_subset(cod.cell(m.assignment[i]).verts,
                    cod.cell(m.assignment[j]).verts))
        continue;
      if (witness)
        *witness = to_string(dom.cell(i).verts) + " in " +
                   to_string(dom.cell(j).verts) + " but images are not nested";
      return false;
    }
  }
  return true;
}

bool is_surjective(const CcMap& m) {
  std::vector<bool> hit(m.codomain->size(), false);
  for (int v : m.assignment) hit[v] = true;
  for (bool b : hit)
    if (!b) return false;
  return true;
}

bool has_equal_rank_preimages(const CcMap& m, std::string* witness) {
  const CellComplex& dom = *m.domain;
  const CellComplex& cod = *m.codomain;
  std::vector<char> hit(cod.size(), 0), good(cod.size(), 0);
  for (int i = 0; i < dom.size(); ++i) {
    int y = m.assignment[i];
    hit[y] = 1;
    if (dom.cell(i).rank == cod.cell(y).rank) good[y] = 1;
  }
  for (int y = 0; y < cod.size(); ++y) {
    if (hit[y] && !good[y]) {
      if (witness)
        *witness = "no cell of rank " + std::to_string(cod.cell(y).rank) +
                   " maps onto " + to_string(cod.cell(y).verts);
      return false;
    }
  }
  return true;
}

CcMap check_homomorphism(CcMap m) {
  std::string w;
  if (!is_order_preserving(m, &w)) fail(Errc::NotOrderPreserving, w);
  if (!has_equal_rank_preimages(m, &w)) fail(Errc::NoEqualRankPreimage, w);
  if (m.kind == MapKind::Unchecked) m.kind = MapKind::Homomorphism;
  return m;
}

bool ConditionReport::all_pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

const Condition& ConditionReport::operator[](const std::string& label) const {
  for (const auto& c : conditions)
    if (c.label == label) return c;
  fail(Errc::InvalidArgument, "no condition labelled " + label);
}

std::string ConditionReport::summary() const {
  std::string out;
  for (const auto& c : conditions) {
    if (!out.empty()) out += ", ";
    out += c.label;
    out += c.pass ? ": pass" : ": fail (" + c.witness + ")";
  }
  return out;
}

namespace {

void require_closed_pair(const CcMap& m) {
  if (!is_closed(*m.domain)) fail(Errc::NotClosed, "domain is not closed");
  if (!is_closed(*m.codomain)) fail(Errc::NotClosed, "codomain is not closed");
}

// Shared shape of the reduction and collapse condition sets. Reductions
// constrain what happens above a cell, collapses what happens below; the
// first condition pins vertices for reductions and maximal cells for
// collapses.
ConditionReport check_conditions(CcMap& m, bool reduction) {
  require_closed_pair(m);
  std::string w;
  if (!is_order_preserving(m, &w)) fail(Errc::NotOrderPreserving, w);
  if (!is_surjective(m)) fail(Errc::NotSurjective, "a codomain cell has no preimage");

  const CellComplex& dom = *m.domain;
  const CellComplex& cod = *m.codomain;
  const auto& f = m.assignment;
  ConditionReport rep;

  Condition one{reduction ? "r1" : "c1", true, ""};
  std::vector<int> anchors =
      reduction ? cod.cells_of_rank(0) : cod.maximal_cells();
  for (int z : anchors) {
    int fiber = 0;
    for (int i = 0; i < dom.size(); ++i)
      if (f[i] == z) ++fiber;
    if (fiber != 1) {
      one.pass = false;
      one.witness = to_string(cod.cell(z).verts) + " has fiber of size " +
                    std::to_string(fiber);
      break;
    }
  }
  rep.conditions.push_back(one);

  auto side_of = [&](const CellComplex& k, int id) -> const std::vector<int>& {
    return reduction ? k.above(id) : k.below(id);
  };
  auto step_of = [&](const CellComplex& k, int id) -> const std::vector<int>& {
    return reduction ? k.cofaces(id) : k.faces(id);
  };

  Condition three{reduction ? "r3" : "c3", true, ""};
  for (int i = 0; i < dom.size() && three.pass; ++i) {
    for (int z : side_of(cod, f[i])) {
      int r = cod.cell(z).rank;
      bool covered = false;
      for (int v : side_of(dom, i))
        if (dom.cell(v).rank == r && f[v] == z) covered = true;
      if (!covered) {
        three.pass = false;
        three.witness = to_string(cod.cell(z).verts) + " near the image of " +
                        to_string(dom.cell(i).verts) + " is not covered";
        break;
      }
    }
  }
  rep.conditions.push_back(three);

  const int shift = reduction ? -1 : 1;
  Condition four{reduction ? "r4" : "c4", true, ""};
  for (int i = 0; i < dom.size() && four.pass; ++i) {
    if (dom.cell(i).rank != cod.cell(f[i]).rank + shift) continue;
    int count = 0;
    for (int v : step_of(dom, i))
      if (f[v] == f[i]) ++count;
    if (count != 2) {
      four.pass = false;
      four.witness = to_string(dom.cell(i).verts) + " has " +
                     std::to_string(count) + " neighbours in its own fiber";
    }
  }
  rep.conditions.push_back(four);

  Condition five{reduction ? "r5" : "c5", true, ""};
  for (int i = 0; i < dom.size() && five.pass; ++i) {
    if (dom.cell(i).rank != cod.cell(f[i]).rank) continue;
    for (int y : step_of(cod, f[i])) {
      int count = 0;
      for (int v : step_of(dom, i))
        if (f[v] == y) ++count;
      if (count != 1) {
        five.pass = false;
        five.witness = to_string(dom.cell(i).verts) + " has " +
                       std::to_string(count) + " neighbours over " +
                       to_string(cod.cell(y).verts);
        break;
      }
    }
  }
  rep.conditions.push_back(five);

  if (rep.all_pass()) m.kind = reduction ? MapKind::Reduction : MapKind::Collapse;
  return rep;
}

}  // namespace

ConditionReport check_reduction(CcMap& m) { return check_conditions(m, true); }

ConditionReport check_collapse(CcMap& m) { return check_conditions(m, false); }

CcMap map_from_vertex_bijection(ComplexPtr dom, ComplexPtr cod,
                                const std::map<VertexId, VertexId>& sigma) {
  if (dom->size() != cod->size())
    fail(Errc::InvalidArgument, "cell counts differ");
  std::vector<int> assignment(dom->size());
  for (int i = 0; i < dom->size(); ++i) {
    VertexSet image;
    for (VertexId v : dom->cell(i).verts) {
      auto it = sigma.find(v);
      if (it == sigma.end())
        fail(Errc::InvalidArgument, "vertex not covered", std::to_string(v));
      image.push_back(it->second);
    }
    image = normalized(std::move(image));
    auto id = cod->find(image);
    if (!id || cod->cell(*id).rank != dom->cell(i).rank)
      fail(Errc::InvalidArgument, "vertex map does not induce a cell bijection",
           to_string(dom->cell(i).verts));
    assignment[i] = *id;
  }
  return CcMap{std::move(dom), std::move(cod), std::move(assignment),
               MapKind::Isomorphism};
}

namespace {

// Backtracking over vertex images with most-constrained-first ordering.
// A rank-preserving bijection of cells induced by a vertex bijection is a
// full isomorphism, and conversely every isomorphism arises this way since
// the singletons below a cell enumerate its vertices.
struct IsoSearch {
  const CellComplex& a;
  const CellComplex& b;
  std::vector<VertexId> av, bv;
  std::vector<std::vector<int>> cells_of;  // a-vertex pos -> a cell ids
  std::vector<std::vector<int>> cand;      // a-vertex pos -> b-vertex pos
  std::vector<int> order;
  std::vector<int> assign;
  std::vector<char> used;
  std::vector<int> remaining;  // a cell id -> vertices not yet assigned

  explicit IsoSearch(const CellComplex& a_, const CellComplex& b_) : a(a_), b(b_) {}

  static std::vector<std::pair<int, int>> signature(const CellComplex& k,
                                                    VertexId v) {
    std::vector<std::pair<int, int>> sig;
    for (const auto& c : k.cells())
      if (contains_vertex(c.verts, v))
        sig.push_back({c.rank, static_cast<int>(c.verts.size())});
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  bool prepare() {
    if (a.size() != b.size()) return false;
    if (a.f_vector() != b.f_vector()) return false;
    av = a.vertices();
    bv = b.vertices();
    if (av.size() != bv.size()) return false;

    std::map<std::vector<std::pair<int, int>>, std::vector<int>> by_sig;
    for (int j = 0; j < static_cast<int>(bv.size()); ++j)
      by_sig[signature(b, bv[j])].push_back(j);
    cand.resize(av.size());
    for (int i = 0; i < static_cast<int>(av.size()); ++i) {
      auto it = by_sig.find(signature(a, av[i]));
      if (it == by_sig.end()) return false;
      cand[i] = it->second;
    }

    std::map<VertexId, int> apos;
    for (int i = 0; i < static_cast<int>(av.size()); ++i) apos[av[i]] = i;
    cells_of.assign(av.size(), {});
    for (int c = 0; c < a.size(); ++c)
      for (VertexId v : a.cell(c).verts) cells_of[apos[v]].push_back(c);

    // Static order: rarest candidate list first, then always a vertex
    // sharing as many cells as possible with the ordered prefix.
    std::vector<char> placed(av.size(), 0);
    int start = 0;
    for (int i = 1; i < static_cast<int>(av.size()); ++i)
      if (cand[i].size() < cand[start].size()) start = i;
    order.push_back(start);
    placed[start] = 1;
    while (order.size() < av.size()) {
      int best = -1, best_links = -1;
      for (int i = 0; i < static_cast<int>(av.size()); ++i) {
        if (placed[i]) continue;
        int links = 0;
        for (int c : cells_of[i])
          for (VertexId u : a.cell(c).verts)
            if (placed[apos[u]]) ++links;
        if (links > best_links) {
          best = i;
          best_links = links;
        }
      }
      order.push_back(best);
      placed[best] = 1;
    }

    assign.assign(av.size(), -1);
    used.assign(bv.size(), 0);
    remaining.resize(a.size());
    for (int c = 0; c < a.size(); ++c)
      remaining[c] = static_cast<int>(a.cell(c).verts.size());
    return true;
  }

  bool image_cell_ok(int c) const {
    VertexSet image;
    std::map<VertexId, int> apos;  // tiny cells, linear scan is fine
    for (VertexId v : a.cell(c).verts) {
      int i = static_cast<int>(std::lower_bound(av.begin(), av.end(), v) -
                               av.begin());
      image.push_back(bv[assign[i]]);
    }
    image = normalized(std::move(image));
    auto id = b.find(image);
    return id && b.cell(*id).rank == a.cell(c).rank;
  }

  bool dfs(std::size_t step) {
    if (step == order.size()) return true;
    int i = order[step];
    for (int j : cand[i]) {
      if (used[j]) continue;
      assign[i] = j;
      used[j] = 1;
      bool ok = true;
      std::size_t done = 0;
      for (; done < cells_of[i].size(); ++done) {
        int c = cells_of[i][done];
        if (--remaining[c] == 0 && !image_cell_ok(c)) {
          ok = false;
          ++done;
          break;
        }
      }
      if (ok && dfs(step + 1)) return true;
      for (std::size_t t = 0; t < done; ++t) ++remaining[cells_of[i][t]];
      used[j] = 0;
      assign[i] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const CellComplex& a,
                                                             const CellComplex& b) {
  if (a.empty() && b.empty()) return std::map<VertexId, VertexId>{};
  IsoSearch search(a, b);
  if (!search.prepare()) return std::nullopt;
  if (!search.dfs(0)) return std::nullopt;
  std::map<VertexId, VertexId> sigma;
  for (std::size_t i = 0; i < search.av.size(); ++i)
    sigma[search.av[i]] = search.bv[search.assign[i]];
  return sigma;
}

BdivResult barycentric_subdivision(ComplexPtr kp) {
  const CellComplex& k = *kp;
  RawCells cells;
  std::vector<int> chain;
  auto emit = [&]() {
    cells.push_back(
        {VertexSet(chain.begin(), chain.end()), static_cast<int>(chain.size()) - 1});
  };
  // Chains are extended upward, so the id sequence is strictly increasing
  // and already sorted.
  std::function<void(int)> grow = [&](int top) {
    chain.push_back(top);
    emit();
    for (int j : k.above(top))
      if (j != top) grow(j);
    chain.pop_back();
  };
  for (int i = 0; i < k.size(); ++i) grow(i);

  CellComplex bd = CellComplex::trusted(std::move(cells));
  std::vector<int> assignment(bd.size());
  for (int i = 0; i < bd.size(); ++i) assignment[i] = bd.cell(i).verts.back();
  CcMap to_base{share(std::move(bd)), kp, std::move(assignment), MapKind::Unchecked};
  BdivResult out{to_base.domain, std::move(to_base)};

  if (is_closed(k)) {
    ConditionReport rep = check_reduction(out.to_base);
    if (!rep.all_pass())
      fail(Errc::InternalCheckFailed,
           "subdivision map failed a reduction condition: " + rep.summary());
  } else {
    out.to_base = check_homomorphism(std::move(out.to_base));
  }
  return out;
}

CcMap compose(const CcMap& outer, const CcMap& inner) {
  if (!inner.codomain->same_cells_as(*outer.domain))
    fail(Errc::DomainMismatch,
         "inner codomain and outer domain are different complexes");
  CcMap out{inner.domain, outer.codomain, std::vector<int>(inner.assignment.size()),
            MapKind::Unchecked};
  for (std::size_t i = 0; i < inner.assignment.size(); ++i)
    out.assignment[i] = outer.assignment[inner.assignment[i]];

  if (inner.kind == MapKind::Isomorphism && outer.kind == MapKind::Isomorphism) {
    out.kind = MapKind::Isomorphism;
  } else if (inner.kind == outer.kind && (inner.kind == MapKind::Reduction ||
                                          inner.kind == MapKind::Collapse)) {
    out.kind = inner.kind;
    if (deep_checks()) {
      CcMap copy = out;
      ConditionReport rep = inner.kind == MapKind::Reduction
                                ? check_reduction(copy)
                                : check_collapse(copy);
      if (!rep.all_pass())
        fail(Errc::InternalCheckFailed,
             "composite lost its kind: " + rep.summary());
    }
  } else if (inner.kind != MapKind::Unchecked && outer.kind != MapKind::Unchecked) {
    if (is_order_preserving(out) && has_equal_rank_preimages(out))
      out.kind = MapKind::Homomorphism;
  }
  return out;
}

}  // namespace ccx
