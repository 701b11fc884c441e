#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace ccx {

using VertexId = int;

// Always kept sorted and duplicate-free. Cells are identified with their
// vertex sets, so set equality is cell equality.
using VertexSet = std::vector<VertexId>;

VertexSet normalized(VertexSet v);

bool is_subset(const VertexSet& a, const VertexSet& b);
bool is_strict_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool contains_vertex(const VertexSet& a, VertexId v);

std::string to_string(const VertexSet& v);

// When enabled, constructions that are backed by a theorem re-validate their
// results from scratch. Tests switch this on; a failure there means the code
// broke an invariant, not that the input was bad.
bool deep_checks();
void set_deep_checks(bool on);

}  // namespace ccx
