#pragma once

#include "ccx/complex.hpp"

namespace ccx {

// Snapshot of the structural properties of a complex. in_C and in_B are the
// derived memberships used as preconditions elsewhere: in_C means
// non-singular, non-pinching and local; in_B additionally means closed.
struct PropertyReport {
  bool graph_based = false;
  bool pure = false;
  bool connected = false;
  bool cell_connected = false;
  bool local = false;
  bool non_singular = false;
  bool closed = false;
  bool strongly_connected = false;
  bool non_pinching = false;
  bool simplicial = false;
  bool simple = false;
  bool in_C = false;
  bool in_B = false;
  std::vector<Cell> pinch_cells;
  std::vector<CellComplex> boundary_components;
};

PropertyReport classify(const CellComplex& k);

// Single-property helpers, cheaper than a full report.
bool is_graph_based(const CellComplex& k);
bool is_pure(const CellComplex& k);
bool is_connected(const CellComplex& k);
bool is_cell_connected(const CellComplex& k);
bool is_local(const CellComplex& k);
bool is_non_singular(const CellComplex& k);
bool is_closed(const CellComplex& k);
bool is_simplicial(const CellComplex& k);

// A cell is a pinch when the maximal cells around it fall apart once you
// only allow passage through internal walls around the cell itself.
bool is_pinch(const CellComplex& k, int cell_id);

}  // namespace ccx
