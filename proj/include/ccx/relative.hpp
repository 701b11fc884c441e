#pragma once

#include <map>
#include <optional>
#include <string>

#include "ccx/map.hpp"

namespace ccx {

// Cells meeting the vertex set b without being contained in it.
std::vector<int> collar(const CellComplex& k, const VertexSet& b);

struct MidsectionResult {
  CellComplex complex;
  // Midsection vertex i stands for the i-th crossing edge of the ambient
  // complex in canonical order.
  std::vector<VertexSet> edge_of_vertex;
  // Cell-level bijection with the collar, both directions.
  std::vector<int> to_collar;     // midsection cell id -> ambient cell id
  std::map<int, int> from_collar; // ambient cell id -> midsection cell id
};

// One midsection cell per collar cell of the sub-complex, with rank dropped
// by one. The collar correspondence is an order embedding both ways.
MidsectionResult midsection(const CellComplex& k, const CellComplex& j);

// Midsection over the restriction to a non-maximal cell.
MidsectionResult local_figure(const CellComplex& k, const VertexSet& x);

struct TransitionResult {
  // Lives on a subset of the sub-complex's vertices.
  CellComplex complex;
  std::map<int, int> of_collar; // ambient collar cell id -> transition cell id
  std::vector<int> of_sub;      // sub-complex cell id -> transition cell id
};

// Reduced cells of the collar, ranked by the top trace rank of any
// representative. of_sub extends the reduction to the sub-complex itself.
// The uniformity scan runs before the purity scan.
TransitionResult transition(const CellComplex& k, const CellComplex& j);

struct RelativeReport {
  bool non_degenerate = false;
  bool pure_relative = false;
  bool uniformity_U = false;
  bool transition_in_B = false;
  bool uniform = false;
  bool local_relative = false;
  bool exactly_collared = false;
  // Sub-complex cell id -> relative rank, for the cells where the minimal
  // collar cells above agree in rank.
  std::map<int, int> relative_rank;
  std::optional<CellComplex> transition_complex;
  std::map<std::string, std::string> witnesses; // flag name -> first witness
};

RelativeReport relative_report(const CellComplex& k, const CellComplex& j);

struct CanonicalMaps {
  CcMap rho; // sub-complex -> transition, a reduction
  CcMap pi;  // midsection -> transition, a collapse
  MidsectionResult mid;
  TransitionResult trans;
};

// Requires the ambient complex in C, the sub-complex a closed boundary
// component, and the pair uniform and local. Both maps are condition-checked
// before being returned.
CanonicalMaps canonical_maps(const CellComplex& k, const CellComplex& j);

enum class TriState { Holds, Fails, NotApplicable };

const char* tristate_name(TriState t);

struct RelationReport {
  // compatible reads asymmetrically: fibers alternate, the first map
  // preserves joins, the second preserves meets.
  TriState compatible = TriState::NotApplicable;
  TriState reflective = TriState::NotApplicable;
  TriState orthogonal = TriState::NotApplicable;
  std::string compatible_witness, reflective_witness, orthogonal_witness;
};

// compatible needs a shared codomain, reflective and orthogonal a shared
// domain; relations whose shape requirement fails come back NotApplicable.
// Throws only when neither end matches.
RelationReport relation_check(const CcMap& j, const CcMap& l);

struct GeometricSequence {
  std::vector<ComplexPtr> nodes;
  struct Arrow {
    int from = 0, to = 0; // node indices, |from - to| == 1
    CcMap map;
  };
  std::vector<Arrow> arrows; // arrow i joins nodes i and i+1
};

struct JunctionReport {
  int index = 0; // node index
  std::string clause;
  bool pass = true;
  std::string witness;
};

struct SequenceVerdict {
  bool valid = true;
  std::vector<JunctionReport> reports;
};

// Arrows must carry verified reduction or collapse kinds and alternate
// direction. Shared codomains need a compatible reduction/collapse pair,
// shared domains two orthogonal collapses or two reflective reductions.
// include_dual re-runs the check on the dualized sequence.
SequenceVerdict check_geometric_sequence(const GeometricSequence& seq,
                                         bool include_dual = false);

// Same checks, throwing at the first failed report.
void require_geometric_sequence(const GeometricSequence& seq,
                                bool include_dual = false);

}  // namespace ccx
