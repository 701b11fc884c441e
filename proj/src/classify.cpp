#include "ccx/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ccx {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
  int groups() {
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
  }
};

std::vector<int> maximal_above(const CellComplex& k, int id) {
  std::vector<int> out;
  for (int j : k.above(id))
    if (k.is_maximal(j)) out.push_back(j);
  return out;
}

// Parts of the graph on `verts` whose edges are the rank-1 cells of k lying
// inside `verts`. Connectivity questions are always about this 1-skeleton:
// a higher cell never bridges parts on its own.
int skeleton_parts(const CellComplex& k, const VertexSet& verts) {
  const int nv = static_cast<int>(verts.size());
  std::map<VertexId, int> pos;
  for (int i = 0; i < nv; ++i) pos[verts[i]] = i;
  UnionFind uf(nv);
  for (const auto& c : k.cells()) {
    if (c.rank != 1) continue;
    if (!std::includes(verts.begin(), verts.end(), c.verts.begin(),
                       c.verts.end()))
      continue;
    for (std::size_t t = 1; t < c.verts.size(); ++t)
      uf.unite(pos[c.verts[0]], pos[c.verts[t]]);
  }
  return uf.groups();
}

}  // namespace

bool is_graph_based(const CellComplex& k) {
  for (const auto& c : k.cells())
    if (c.rank == 1 && c.verts.size() != 2) return false;
  return true;
}

bool is_pure(const CellComplex& k) {
  for (int i = 0; i < k.size(); ++i)
    if (k.is_maximal(i) && k.cell(i).rank != k.max_rank()) return false;
  return true;
}

bool is_connected(const CellComplex& k) {
  if (k.empty()) return false;
  return skeleton_parts(k, k.vertices()) == 1;
}

bool is_cell_connected(const CellComplex& k) {
  for (const auto& c : k.cells()) {
    if (c.rank < 2) continue;
    if (skeleton_parts(k, c.verts) != 1) return false;
  }
  return true;
}

bool is_local(const CellComplex& k) {
  return is_connected(k) && is_cell_connected(k);
}

bool is_non_singular(const CellComplex& k) {
  const int r = k.max_rank();
  for (int i = 0; i < k.size(); ++i)
    if (k.cell(i).rank == r - 1 && k.maximal_above_count(i) > 2) return false;
  return true;
}

bool is_closed(const CellComplex& k) {
  const int r = k.max_rank();
  for (int i = 0; i < k.size(); ++i)
    if (k.cell(i).rank == r - 1 && k.maximal_above_count(i) != 2) return false;
  return true;
}

bool is_simplicial(const CellComplex& k) {
  for (int i = 0; i < k.size(); ++i) {
    const Cell& c = k.cell(i);
    if (c.rank != static_cast<int>(c.verts.size()) - 1) return false;
    if (c.verts.size() < 2) continue;
    for (std::size_t drop = 0; drop < c.verts.size(); ++drop) {
      VertexSet facet;
      for (std::size_t t = 0; t < c.verts.size(); ++t)
        if (t != drop) facet.push_back(c.verts[t]);
      if (!k.find(facet)) return false;
    }
  }
  return true;
}

// Walk between the maximal cells around x through walls of rank Rk(K)-1 that
// themselves contain x and separate exactly two maximal cells. The wall may
// be x itself. A pinch is a cell where this walk does not reach everything.
bool is_pinch(const CellComplex& k, int cell_id) {
  if (k.is_maximal(cell_id)) return false;
  std::vector<int> nodes = maximal_above(k, cell_id);
  if (nodes.size() <= 1) return false;
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) pos[nodes[i]] = i;
  UnionFind uf(static_cast<int>(nodes.size()));
  const int r = k.max_rank();
  for (int y : k.above(cell_id)) {
    if (k.cell(y).rank != r - 1) continue;
    auto tops = maximal_above(k, y);
    if (tops.size() != 2) continue;
    uf.unite(pos.at(tops[0]), pos.at(tops[1]));
  }
  return uf.groups() > 1;
}

namespace {

// Facet-wall graph connectivity, boundary walls removed.
bool strongly_connected_flag(const CellComplex& k) {
  auto tops = k.maximal_cells();
  if (tops.empty()) return false;
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(tops.size()); ++i) pos[tops[i]] = i;
  UnionFind uf(static_cast<int>(tops.size()));
  const int r = k.max_rank();
  for (int i = 0; i < k.size(); ++i) {
    if (k.cell(i).rank != r - 1) continue;
    auto above = maximal_above(k, i);
    if (above.size() < 2) continue;
    for (std::size_t t = 1; t < above.size(); ++t)
      uf.unite(pos.at(above[0]), pos.at(above[t]));
  }
  return uf.groups() == 1;
}

bool dual_family_simplicial(const CellComplex& k) {
  const int r = k.max_rank();
  std::set<std::vector<int>> duals;
  for (int i = 0; i < k.size(); ++i) duals.insert(maximal_above(k, i));
  for (int i = 0; i < k.size(); ++i) {
    auto d = maximal_above(k, i);
    int dual_rank = r - k.cell(i).rank;
    if (static_cast<int>(d.size()) != dual_rank + 1) return false;
    if (d.size() < 2) continue;
    for (std::size_t drop = 0; drop < d.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t t = 0; t < d.size(); ++t)
        if (t != drop) facet.push_back(d[t]);
      if (!duals.count(facet)) return false;
    }
  }
  return true;
}

}  // namespace

PropertyReport classify(const CellComplex& k) {
  PropertyReport r;
  r.graph_based = is_graph_based(k);
  r.pure = is_pure(k);
  r.connected = is_connected(k);
  r.cell_connected = is_cell_connected(k);
  r.local = r.connected && r.cell_connected;
  r.non_singular = is_non_singular(k);
  r.closed = is_closed(k);
  r.strongly_connected = strongly_connected_flag(k);

  for (int i = 0; i < k.size(); ++i)
    if (is_pinch(k, i)) r.pinch_cells.push_back(k.cell(i));
  CellComplex bd = k.boundary();
  for (int i = 0; i < bd.size(); ++i) {
    if (!is_pinch(bd, i)) continue;
    const Cell& c = bd.cell(i);
    bool seen = false;
    for (const auto& p : r.pinch_cells)
      if (p.verts == c.verts) seen = true;
    if (!seen) r.pinch_cells.push_back(c);
  }
  r.non_pinching = r.pinch_cells.empty();

  r.simplicial = is_simplicial(k);
  r.in_C = r.non_singular && r.non_pinching && r.local;
  r.in_B = r.in_C && r.closed;
  r.simple = r.in_B && dual_family_simplicial(k);
  r.boundary_components = bd.components();
  return r;
}

}  // namespace ccx
