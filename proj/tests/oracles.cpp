#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace oracle {

namespace {

bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool strict_subset(const std::set<int>& a, const std::set<int>& b) {
  return a != b && subset(a, b);
}

}  // namespace

std::set<ccx::Errc> violations(const RawFamily& cells) {
  std::set<ccx::Errc> out;
  for (const auto& [vs, rk] : cells) {
    if (vs.empty()) out.insert(ccx::Errc::EmptyCell);
    if (rk < 0) out.insert(ccx::Errc::InvalidArgument);
  }
  if (!out.empty()) return out;

  std::map<std::set<int>, int> rank_of;
  for (const auto& [vs, rk] : cells) {
    auto it = rank_of.find(vs);
    if (it != rank_of.end()) {
      out.insert(ccx::Errc::DuplicateCell);
      continue;
    }
    rank_of[vs] = rk;
  }
  if (!out.empty()) return out;

  for (const auto& [vs, rk] : cells)
    for (int v : vs)
      if (!rank_of.count({v})) out.insert(ccx::Errc::MissingSingleton);

  for (const auto& [vs, rk] : cells) {
    bool minimal = true;
    for (const auto& [ws, wr] : cells)
      if (strict_subset(ws, vs)) minimal = false;
    if (minimal && rk != 0) out.insert(ccx::Errc::RankOfMinimalNonZero);
  }

  for (const auto& [xs, xr] : cells) {
    for (const auto& [ys, yr] : cells) {
      if (!strict_subset(xs, ys)) continue;
      if (xr >= yr) out.insert(ccx::Errc::AxiomI);
      bool bridged = yr == xr + 1;
      for (const auto& [ws, wr] : cells)
        if (wr == xr + 1 && strict_subset(xs, ws) && subset(ws, ys)) bridged = true;
      if (!bridged) out.insert(ccx::Errc::AxiomII);
      if (yr == xr + 2) {
        int between = 0;
        for (const auto& [ws, wr] : cells)
          if (wr == xr + 1 && strict_subset(xs, ws) && strict_subset(ws, ys)) ++between;
        if (between != 2) out.insert(ccx::Errc::AxiomIV);
      }
    }
  }

  for (const auto& [xs, xr] : cells) {
    for (const auto& [ys, yr] : cells) {
      std::set<int> m;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                            std::inserter(m, m.begin()));
      if (!m.empty() && !rank_of.count(m)) out.insert(ccx::Errc::AxiomIII);
    }
  }
  return out;
}

std::vector<std::size_t> chain_fvector(const RawFamily& cells) {
  const int n = static_cast<int>(cells.size());
  // chains_from[i][l] counts chains of l+1 cells starting at i going up.
  std::vector<std::vector<std::size_t>> chains_from(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cells[a].first.size() > cells[b].first.size();
  });
  for (int i : order) {
    std::vector<std::size_t> acc{1};
    for (int j = 0; j < n; ++j) {
      if (!strict_subset(cells[i].first, cells[j].first)) continue;
      for (std::size_t l = 0; l < chains_from[j].size(); ++l) {
        if (acc.size() <= l + 1) acc.resize(l + 2, 0);
        acc[l + 1] += chains_from[j][l];
      }
    }
    chains_from[i] = std::move(acc);
  }
  std::vector<std::size_t> total;
  for (int i = 0; i < n; ++i)
    for (std::size_t l = 0; l < chains_from[i].size(); ++l) {
      if (total.size() <= l) total.resize(l + 1, 0);
      total[l] += chains_from[i][l];
    }
  return total;
}

RawFamily boundary(const RawFamily& cells) {
  int top = -1;
  for (const auto& [vs, rk] : cells) top = std::max(top, rk);
  std::vector<bool> is_max(cells.size(), true);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (strict_subset(cells[i].first, cells[j].first)) is_max[i] = false;
  std::set<std::set<int>> kept;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].second != top - 1) continue;
    int touching = 0;
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (is_max[j] && subset(cells[i].first, cells[j].first)) ++touching;
    if (touching != 1) continue;
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (subset(cells[j].first, cells[i].first)) kept.insert(cells[j].first);
  }
  RawFamily out;
  for (const auto& [vs, rk] : cells)
    if (kept.count(vs)) out.push_back({vs, rk});
  return out;
}

bool connected(const RawFamily& cells) {
  std::set<int> verts;
  for (const auto& [vs, rk] : cells) verts.insert(vs.begin(), vs.end());
  if (verts.empty()) return false;
  std::set<int> seen{*verts.begin()};
  std::queue<int> q;
  q.push(*verts.begin());
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [vs, rk] : cells) {
      if (rk != 1 || !vs.count(v)) continue;
      for (int w : vs)
        if (seen.insert(w).second) q.push(w);
    }
  }
  return seen.size() == verts.size();
}

long long euler(const RawFamily& cells) {
  long long chi = 0;
  for (const auto& [vs, rk] : cells) chi += (rk % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace oracle
