#include "ccx/basics.hpp"

namespace ccx {

namespace {
bool g_deep_checks = false;
}

bool deep_checks() { return g_deep_checks; }
void set_deep_checks(bool on) { g_deep_checks = on; }

VertexSet normalized(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_strict_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && is_subset(a, b);
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_vertex(const VertexSet& a, VertexId v) {
  return std::binary_search(a.begin(), a.end(), v);
}

std::string to_string(const VertexSet& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += "}";
  return s;
}

}  // namespace ccx
