#include "ccx/complex.hpp"

#include <numeric>

namespace ccx {

bool operator==(const Cell& a, const Cell& b) {
  return a.rank == b.rank && a.verts == b.verts;
}

bool cell_less(const Cell& a, const Cell& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.verts < b.verts;
}

CellComplex CellComplex::build(RawCells cells) {
  CellComplex k;
  k.cells_ = std::move(cells);
  k.normalize_input();
  k.index_and_cache();
  k.validate();
  return k;
}

CellComplex CellComplex::trusted(RawCells cells) {
  CellComplex k;
  k.cells_ = std::move(cells);
  k.normalize_input();
  k.index_and_cache();
  if (deep_checks()) k.validate();
  return k;
}

void CellComplex::normalize_input() {
  for (auto& c : cells_) {
    c.verts = normalized(std::move(c.verts));
    if (c.verts.empty()) fail(Errc::EmptyCell, "a cell with no vertices is not allowed");
    if (c.rank < 0)
      fail(Errc::InvalidArgument, "negative rank on cell " + to_string(c.verts));
  }
  std::sort(cells_.begin(), cells_.end(), cell_less);
  for (std::size_t i = 0; i + 1 < cells_.size(); ++i) {
    if (cells_[i].verts == cells_[i + 1].verts)
      fail(Errc::DuplicateCell, "cell listed twice", to_string(cells_[i].verts));
  }
  // Same vertex set under two ranks sorts apart, catch it via the index later.
}

void CellComplex::index_and_cache() {
  const int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = index_.emplace(cells_[i].verts, i);
    if (!fresh)
      fail(Errc::DuplicateCell, "cell listed twice with different ranks",
           to_string(cells_[i].verts));
  }
  vertices_.clear();
  for (const auto& c : cells_)
    for (VertexId v : c.verts) vertices_.push_back(v);
  vertices_ = normalized(std::move(vertices_));

  max_rank_ = -1;
  for (const auto& c : cells_) max_rank_ = std::max(max_rank_, c.rank);

  above_.assign(n, {});
  below_.assign(n, {});
  faces_.assign(n, {});
  cofaces_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (is_subset(cells_[i].verts, cells_[j].verts)) {
        above_[i].push_back(j);
        below_[j].push_back(i);
        if (i != j) {
          if (cells_[i].rank == cells_[j].rank - 1) {
            faces_[j].push_back(i);
            cofaces_[i].push_back(j);
          }
        }
      }
    }
  }
  maximal_.assign(n, false);
  for (int i = 0; i < n; ++i) maximal_[i] = above_[i].size() == 1;
  maximal_above_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int cnt = 0;
    for (int j : above_[i])
      if (maximal_[j]) ++cnt;
    maximal_above_[i] = cnt;
  }
  vertex_cell_.clear();
  for (int i = 0; i < n; ++i)
    if (cells_[i].verts.size() == 1 && cells_[i].rank == 0)
      vertex_cell_[cells_[i].verts[0]] = i;
}

void CellComplex::validate() const {
  const int n = size();
  for (VertexId v : vertices_) {
    auto it = index_.find(VertexSet{v});
    if (it == index_.end())
      fail(Errc::MissingSingleton,
           "vertex " + std::to_string(v) + " appears in a cell but has no singleton cell");
  }
  for (int i = 0; i < n; ++i) {
    if (below_[i].size() == 1 && cells_[i].rank != 0)
      fail(Errc::RankOfMinimalNonZero, "minimal cell has nonzero rank",
           to_string(cells_[i].verts));
  }
  for (int i = 0; i < n; ++i) {
    for (int j : above_[i]) {
      if (j == i) continue;
      const Cell& x = cells_[i];
      const Cell& y = cells_[j];
      if (x.rank >= y.rank)
        fail(Errc::AxiomI, "rank not strictly increasing along inclusion",
             to_string(x.verts) + " in " + to_string(y.verts));
      // No gap: some cell one rank above x sits between x and y.
      if (y.rank > x.rank + 1) {
        bool found = false;
        for (int w : cofaces_[i]) {
          if (is_subset(cells_[w].verts, y.verts)) {
            found = true;
            break;
          }
        }
        if (!found)
          fail(Errc::AxiomII, "no cell one rank above bridges the inclusion",
               to_string(x.verts) + " in " + to_string(y.verts));
      }
      if (y.rank == x.rank + 2) {
        int between = 0;
        for (int w : cofaces_[i])
          if (is_subset(cells_[w].verts, y.verts)) ++between;
        if (between != 2)
          fail(Errc::AxiomIV,
               "expected exactly 2 cells between, found " + std::to_string(between),
               to_string(x.verts) + " in " + to_string(y.verts));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VertexSet m = ccx::set_intersection(cells_[i].verts, cells_[j].verts);
      if (!m.empty() && index_.find(m) == index_.end())
        fail(Errc::AxiomIII, "intersection is not a cell",
             to_string(cells_[i].verts) + " and " + to_string(cells_[j].verts));
    }
  }
}

std::optional<int> CellComplex::find(const VertexSet& verts) const {
  auto it = index_.find(verts);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CellComplex::id_of(const VertexSet& verts) const {
  auto it = index_.find(verts);
  if (it == index_.end())
    fail(Errc::InvalidArgument, "no such cell " + to_string(verts));
  return it->second;
}

int CellComplex::vertex_cell(VertexId v) const {
  auto it = vertex_cell_.find(v);
  if (it == vertex_cell_.end())
    fail(Errc::InvalidArgument, "no such vertex " + std::to_string(v));
  return it->second;
}

std::vector<int> CellComplex::cells_of_rank(int r) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cells_[i].rank == r) out.push_back(i);
  return out;
}

std::vector<std::size_t> CellComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(max_rank_ + 1, 0)), 0);
  for (const auto& c : cells_) ++f[c.rank];
  return f;
}

std::vector<int> CellComplex::maximal_cells() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (maximal_[i]) out.push_back(i);
  return out;
}

CellComplex CellComplex::restriction(const VertexSet& a) const {
  RawCells sub;
  for (const auto& c : cells_)
    if (is_subset(c.verts, a)) sub.push_back(c);
  return trusted(std::move(sub));
}

CellComplex CellComplex::skeleton(int k) const {
  RawCells sub;
  for (const auto& c : cells_)
    if (c.rank <= k) sub.push_back(c);
  return trusted(std::move(sub));
}

CellComplex CellComplex::boundary() const {
  const int r = max_rank_;
  std::vector<bool> keep(cells_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (cells_[i].rank == r - 1 && maximal_above_[i] == 1) {
      for (int j : below_[i]) keep[j] = true;
    }
  }
  RawCells sub;
  for (int i = 0; i < size(); ++i)
    if (keep[i]) sub.push_back(cells_[i]);
  return trusted(std::move(sub));
}

bool CellComplex::same_cells_as(const CellComplex& o) const {
  if (size() != o.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (!(cells_[i] == o.cells_[i])) return false;
  return true;
}

bool CellComplex::has_subcomplex(const CellComplex& j) const {
  for (const auto& c : j.cells()) {
    auto id = find(c.verts);
    if (!id || cells_[*id].rank != c.rank) return false;
  }
  return true;
}

namespace {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

std::vector<VertexSet> CellComplex::component_vertex_sets() const {
  const int nv = static_cast<int>(vertices_.size());
  std::map<VertexId, int> pos;
  for (int i = 0; i < nv; ++i) pos[vertices_[i]] = i;
  UnionFind uf(nv);
  for (const auto& c : cells_)
    for (std::size_t t = 1; t < c.verts.size(); ++t)
      uf.unite(pos[c.verts[0]], pos[c.verts[t]]);
  std::map<int, VertexSet> groups;
  for (int i = 0; i < nv; ++i) groups[uf.find(i)].push_back(vertices_[i]);
  std::vector<VertexSet> out;
  for (auto& [root, vs] : groups) out.push_back(normalized(std::move(vs)));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

std::vector<CellComplex> CellComplex::components() const {
  std::vector<CellComplex> out;
  for (const auto& vs : component_vertex_sets()) out.push_back(restriction(vs));
  return out;
}

std::optional<int> CellComplex::meet(int x, int y) const {
  VertexSet m = ccx::set_intersection(cells_[x].verts, cells_[y].verts);
  if (m.empty()) return std::nullopt;
  auto id = find(m);
  if (!id)
    fail(Errc::InternalCheckFailed, "intersection of two cells is not a cell",
         to_string(m));
  return id;
}

std::optional<int> CellComplex::join(int x, int y) const {
  // Upper bounds are intersection-closed, so the least one is their meet.
  VertexSet lub;
  bool found = false;
  for (int i = 0; i < size(); ++i) {
    if (is_subset(cells_[x].verts, cells_[i].verts) &&
        is_subset(cells_[y].verts, cells_[i].verts)) {
      lub = found ? ccx::set_intersection(lub, cells_[i].verts) : cells_[i].verts;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return id_of(lub);
}

IncidenceView incidence(const CellComplex& k, const VertexSet& x) {
  int id = k.id_of(normalized(x));
  IncidenceView out;
  for (int i : k.faces(id)) out.faces.push_back(k.cell(i).verts);
  for (int i : k.cofaces(id)) out.cofaces.push_back(k.cell(i).verts);
  for (int i : k.above(id)) out.above.push_back(k.cell(i).verts);
  for (int i : k.below(id)) out.below.push_back(k.cell(i).verts);
  return out;
}

JoinMeetResult join_meet(const CellComplex& k, const VertexSet& x, const VertexSet& y) {
  int a = k.id_of(normalized(x));
  int b = k.id_of(normalized(y));
  JoinMeetResult r;
  auto m = k.meet(a, b);
  if (m)
    r.meet = k.cell(*m).verts;
  else
    r.meet_is_empty = true;
  auto j = k.join(a, b);
  if (j)
    r.join = k.cell(*j).verts;
  else
    r.join_is_top = true;
  return r;
}

}  // namespace ccx
