#pragma once

#include <map>
#include <optional>
#include <vector>

#include "basics.hpp"
#include "error.hpp"

namespace ccx {

struct Cell {
  VertexSet verts;
  int rank = 0;
};

bool operator==(const Cell& a, const Cell& b);

// Canonical cell order: by rank, then lexicographically by vertex set.
bool cell_less(const Cell& a, const Cell& b);

using RawCells = std::vector<Cell>;

// A finite family of nonempty vertex sets with a rank function, kept in
// canonical order. Ids are indices into that order and are only meaningful
// for the complex that produced them.
class CellComplex {
 public:
  CellComplex() = default;

  // Validates everything: structural sanity, singleton presence, minimal
  // cells of rank zero, and the four cell complex axioms.
  static CellComplex build(RawCells cells);

  // For results of constructions whose validity is a proved consequence of
  // validated inputs. Re-runs the full validation when deep checks are on.
  static CellComplex trusted(RawCells cells);

  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  int max_rank() const { return max_rank_; }  // -1 for the empty complex

  const Cell& cell(int id) const { return cells_[id]; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::optional<int> find(const VertexSet& verts) const;
  int id_of(const VertexSet& verts) const;
  bool has_cell(const VertexSet& verts) const { return find(verts).has_value(); }

  const VertexSet& vertices() const { return vertices_; }
  int vertex_cell(VertexId v) const;

  std::vector<int> cells_of_rank(int r) const;
  std::vector<std::size_t> f_vector() const;

  const std::vector<int>& faces(int id) const { return faces_[id]; }
  const std::vector<int>& cofaces(int id) const { return cofaces_[id]; }
  // Non-strict: above(x) and below(x) both contain x.
  const std::vector<int>& above(int id) const { return above_[id]; }
  const std::vector<int>& below(int id) const { return below_[id]; }

  bool is_maximal(int id) const { return maximal_[id]; }
  std::vector<int> maximal_cells() const;
  // Number of inclusion-maximal cells containing the cell (non-strict).
  int maximal_above_count(int id) const { return maximal_above_[id]; }

  CellComplex restriction(const VertexSet& a) const;
  CellComplex skeleton(int k) const;
  CellComplex boundary() const;

  bool same_cells_as(const CellComplex& o) const;
  bool has_subcomplex(const CellComplex& j) const;  // j <= this, ranks included

  // Partition where every cell ties its vertices together. Each part induces
  // a sub-complex. Parts are ordered by their smallest vertex.
  std::vector<VertexSet> component_vertex_sets() const;
  std::vector<CellComplex> components() const;

  // Greatest lower bound; nullopt encodes the empty set.
  std::optional<int> meet(int x, int y) const;
  // Least upper bound; nullopt encodes the top sentinel (no common upper bound).
  std::optional<int> join(int x, int y) const;

 private:
  void normalize_input();
  void index_and_cache();
  void validate() const;

  std::vector<Cell> cells_;
  std::map<VertexSet, int> index_;
  VertexSet vertices_;
  std::map<VertexId, int> vertex_cell_;
  int max_rank_ = -1;
  std::vector<std::vector<int>> faces_, cofaces_, above_, below_;
  std::vector<bool> maximal_;
  std::vector<int> maximal_above_;
};

struct IncidenceView {
  std::vector<VertexSet> faces, cofaces, above, below;
};

// Incidence data of one cell, as vertex sets. The cell itself appears in
// above and below.
IncidenceView incidence(const CellComplex& k, const VertexSet& x);

struct JoinMeetResult {
  bool meet_is_empty = false;
  VertexSet meet;  // valid when !meet_is_empty
  bool join_is_top = false;
  VertexSet join;  // valid when !join_is_top
};

JoinMeetResult join_meet(const CellComplex& k, const VertexSet& x, const VertexSet& y);

}  // namespace ccx
