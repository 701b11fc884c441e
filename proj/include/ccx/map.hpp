#pragma once

#include <memory>
#include <optional>

#include "ccx/complex.hpp"

namespace ccx {

enum class MapKind { Unchecked, Homomorphism, Reduction, Collapse, Isomorphism };

const char* kind_name(MapKind k);

using ComplexPtr = std::shared_ptr<const CellComplex>;

ComplexPtr share(CellComplex k);

// A total map between the cells of two complexes, stored extensionally.
// The kind records which properties have been verified, never a mere claim.
struct CcMap {
  ComplexPtr domain;
  ComplexPtr codomain;
  std::vector<int> assignment;  // domain cell id -> codomain cell id
  MapKind kind = MapKind::Unchecked;

  int operator()(int id) const { return assignment[id]; }
  const Cell& image_cell(int id) const { return codomain->cell(assignment[id]); }
};

CcMap identity_map(ComplexPtr k);
CcMap make_cell_map(ComplexPtr dom, ComplexPtr cod, std::vector<int> assignment);
// Assignment given as (domain cell, codomain cell) vertex-set pairs; must
// cover every domain cell exactly once.
CcMap make_map(ComplexPtr dom, ComplexPtr cod,
               const std::vector<std::pair<VertexSet, VertexSet>>& pairs);

bool is_order_preserving(const CcMap& m, std::string* witness = nullptr);
bool is_surjective(const CcMap& m);
bool has_equal_rank_preimages(const CcMap& m, std::string* witness = nullptr);

// Verifies order preservation and the equal-rank-preimage property, then
// upgrades the kind. Throws on failure.
CcMap check_homomorphism(CcMap m);

struct Condition {
  std::string label;
  bool pass = true;
  std::string witness;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  bool all_pass() const;
  const Condition& operator[](const std::string& label) const;
  std::string summary() const;
};

// Evaluates conditions r1, r3, r4, r5 on a surjective order-preserving map
// between closed complexes; upgrades the kind when everything passes.
ConditionReport check_reduction(CcMap& m);
// Same for c1, c3, c4, c5.
ConditionReport check_collapse(CcMap& m);

// Rank-preserving vertex bijection inducing a cell bijection, if one exists.
// Deterministic backtracking over vertex assignments.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const CellComplex& a,
                                                             const CellComplex& b);

CcMap map_from_vertex_bijection(ComplexPtr dom, ComplexPtr cod,
                                const std::map<VertexId, VertexId>& sigma);

struct BdivResult {
  ComplexPtr complex;  // the subdivision; its vertex i is the base cell id i
  CcMap to_base;       // sends a chain to its largest element
};

BdivResult barycentric_subdivision(ComplexPtr k);

// outer after inner. Composing two verified reductions (or collapses, or
// isomorphisms) keeps that kind; mixed verified kinds degrade to whatever
// the composite actually satisfies.
CcMap compose(const CcMap& outer, const CcMap& inner);

}  // namespace ccx
