#include "ccx/generators.hpp"

namespace ccx {

namespace {

void push_subsets(RawCells& out, const VertexSet& ground, bool proper_only) {
  const std::size_t n = ground.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (proper_only && mask == (std::size_t{1} << n) - 1) continue;
    VertexSet vs;
    for (std::size_t t = 0; t < n; ++t)
      if (mask & (std::size_t{1} << t)) vs.push_back(ground[t]);
    out.push_back({vs, static_cast<int>(vs.size()) - 1});
  }
}

}  // namespace

CellComplex simplex_boundary(int d) {
  if (d < 1) fail(Errc::InvalidArgument, "simplex_boundary needs d >= 1");
  VertexSet ground;
  for (int v = 0; v <= d; ++v) ground.push_back(v);
  RawCells cells;
  push_subsets(cells, ground, true);
  return CellComplex::build(std::move(cells));
}

CellComplex cycle(int n) {
  if (n < 3) fail(Errc::InvalidArgument, "cycle needs n >= 3");
  RawCells cells;
  for (int v = 0; v < n; ++v) cells.push_back({{v}, 0});
  for (int v = 0; v < n; ++v)
    cells.push_back({normalized({v, (v + 1) % n}), 1});
  return CellComplex::build(std::move(cells));
}

CellComplex path(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "path needs n >= 1");
  RawCells cells;
  for (int v = 0; v <= n; ++v) cells.push_back({{v}, 0});
  for (int v = 0; v < n; ++v) cells.push_back({{v, v + 1}, 1});
  return CellComplex::build(std::move(cells));
}

CellComplex torus_grid(int r, int c) {
  if (r < 4 || c < 4) fail(Errc::InvalidArgument, "torus_grid needs r, c >= 4");
  const int rows = r - 1;
  const int cols = c - 1;
  auto at = [&](int i, int j) { return (i % rows) * cols + (j % cols); };
  RawCells cells;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) cells.push_back({{at(i, j)}, 0});
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      cells.push_back({normalized({at(i, j), at(i, j + 1)}), 1});
      cells.push_back({normalized({at(i, j), at(i + 1, j)}), 1});
    }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      cells.push_back(
          {normalized({at(i, j), at(i, j + 1), at(i + 1, j), at(i + 1, j + 1)}), 2});
  return CellComplex::build(std::move(cells));
}

CellComplex prism(int n) {
  if (n < 3) fail(Errc::InvalidArgument, "prism needs n >= 3");
  RawCells cells;
  for (int v = 0; v < 2 * n; ++v) cells.push_back({{v}, 0});
  for (int v = 0; v < n; ++v) {
    int w = (v + 1) % n;
    cells.push_back({normalized({v, w}), 1});
    cells.push_back({normalized({n + v, n + w}), 1});
    cells.push_back({normalized({v, n + v}), 1});
    cells.push_back({normalized({v, w, n + v, n + w}), 2});
  }
  return CellComplex::build(std::move(cells));
}

CellComplex bitetra() {
  RawCells cells;
  push_subsets(cells, {0, 1, 2, 3}, false);
  RawCells second;
  push_subsets(second, {0, 1, 2, 4}, false);
  for (auto& c : second) {
    bool shared = is_subset(c.verts, {0, 1, 2});
    if (!shared) cells.push_back(std::move(c));
  }
  return CellComplex::build(std::move(cells));
}

CellComplex wedge_tetra() {
  RawCells cells;
  push_subsets(cells, {0, 1, 2, 3}, true);
  RawCells second;
  push_subsets(second, {0, 4, 5, 6}, true);
  for (auto& c : second)
    if (c.verts != VertexSet{0}) cells.push_back(std::move(c));
  return CellComplex::build(std::move(cells));
}

CellComplex generate(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      fail(Errc::InvalidArgument,
           "generator " + name + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "simplex_boundary") {
    need(1);
    return simplex_boundary(params[0]);
  }
  if (name == "cycle") {
    need(1);
    return cycle(params[0]);
  }
  if (name == "path") {
    need(1);
    return path(params[0]);
  }
  if (name == "torus_grid") {
    need(2);
    return torus_grid(params[0], params[1]);
  }
  if (name == "prism") {
    need(1);
    return prism(params[0]);
  }
  if (name == "bitetra") {
    need(0);
    return bitetra();
  }
  if (name == "wedge_tetra") {
    need(0);
    return wedge_tetra();
  }
  fail(Errc::InvalidArgument, "unknown generator " + name);
}

}  // namespace ccx
