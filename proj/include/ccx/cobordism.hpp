#pragma once

#include <optional>
#include <vector>

#include "ccx/slice.hpp"

namespace ccx {

// A complex from C with a chosen set of ingoing boundary components. The
// pair must be non-degenerate and local relative; exactly_collared records
// whether each ingoing collar is an isomorphic copy of its component.
struct Cobordism {
  CellComplex complex;
  CellComplex ingoing;
  CellComplex outgoing;  // the remaining boundary components
  std::vector<int> ingoing_components;  // indices into boundary components
  bool exactly_collared = false;
  // The formal identity at j: carries no geometry beyond the complex itself
  // and composes as a unit.
  bool unit = false;
};

// Index of the boundary component of k equal to comp.
int boundary_component_index(const CellComplex& k, const CellComplex& comp);

Cobordism make_cobordism(const CellComplex& k, const std::vector<int>& ingoing_components);

// The slice viewed as a cobordism from its j end.
Cobordism slice_cobordism(const Slice& s);

Cobordism unit_cobordism(const CellComplex& j);

// Inclusion-reversing double: one vertex per maximal cell, one per top cell
// of the outgoing boundary. Cells of the complex away from the ingoing part
// dualize against both, outgoing boundary cells against the boundary alone.
// The ingoing components of the result are the boundary duals.
Cobordism dual_cobordism(const Cobordism& c);

struct GlueSpec {
  int from_outgoing = 0;  // component index in a's outgoing boundary
  int to_ingoing = 0;     // component index in b's ingoing boundary
  // Reductions from a common interface onto the two glued components.
  // Defaults: identity on a's component, and the ascending vertex bijection
  // onto b's component.
  std::optional<CcMap> rho_a;
  std::optional<CcMap> rho_b;
  // Automorphism of the interface applied on b's side.
  std::optional<CcMap> twist;
};

// Subdivides both glued ends down to the shared interface and takes the
// union. b is relabeled out of a's way; the interface keeps the labels of
// rho_a's domain. Ingoing components of the result are a's.
Cobordism compose_cobordisms(const Cobordism& a, const Cobordism& b,
                             const GlueSpec& glue = {});

}  // namespace ccx
