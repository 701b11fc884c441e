#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccx/relative.hpp"

namespace ccx {

// Replaces the boundary component j_prime of k by the domain of the
// reduction rho, widening every collar cell by the fibers of rho. The
// composite of rho with the transition reduction must stay compatible with
// the canonical collapse; otherwise CompatibilityViolated. Vertices of the
// domain may only collide with k inside j_prime itself.
CellComplex relative_subdivide(const CellComplex& k, const CellComplex& j_prime,
                               const CcMap& rho);

// A complex cut along two boundary cycles: both components uniform and
// local, every vertex on the boundary, and the two midsections literally
// equal.
struct Slice {
  CellComplex complex;
  CellComplex j;  // component with the smallest vertex, unless built from a
                  // sequence, where it keeps the ingoing end
  CellComplex l;
  CellComplex midsection;
};

struct SliceVerdict {
  bool ok = false;
  // Clause name with a witness, in evaluation order.
  std::vector<std::pair<std::string, std::string>> failures;
  std::optional<Slice> slice;
};

SliceVerdict check_slice(const CellComplex& s);
// Throws PreconditionFailed at the first failed clause.
Slice require_slice(const CellComplex& s);

// The four-map shadow of a slice: both ends reduce onto their transitions,
// the shared midsection collapses onto both.
struct SliceSequence {
  ComplexPtr j, j_trans, m, l_trans, l;
  CcMap rho_j;  // j -> j_trans
  CcMap pi_j;   // m -> j_trans
  CcMap pi_l;   // m -> l_trans
  CcMap rho_l;  // l -> l_trans
};

// Node order j, j_trans, m, l_trans, l with the four arrows between them.
GeometricSequence as_geometric(const SliceSequence& q);

SliceSequence slice_to_sequence(const Slice& s);

// Rebuilds the slice: augment the midsection by its two collapse images,
// attach the transitions, then subdivide both ends back. The two boundary
// complexes must not share vertex labels.
Slice sequence_to_slice(const SliceSequence& q);

}  // namespace ccx
