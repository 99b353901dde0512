#include "dquiver/ar_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dq {

int ARQuiver::indexOf(const DimVec& d) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), d);
  if (it == verts.end() || *it != d) return -1;
  return static_cast<int>(it - verts.begin());
}

namespace {

// The projective at vertex k is supported on the vertices reachable from k
// (the quiver is a tree, so every multiplicity is 1).
DimVec projectiveDims(const Quiver& q, int k) {
  DimVec d(q.n, 0);
  d[k - 1] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [s, t] : q.arrows)
      if (d[s - 1] == 1 && d[t - 1] == 0) {
        d[t - 1] = 1;
        changed = true;
      }
  }
  return d;
}

}  // namespace

ARQuiver buildARQuiver(int n) {
  ARQuiver ar;
  ar.q = buildQuiver(n);
  ar.verts = listIndecomposables(ar.q);  // already lexicographic
  const int m = static_cast<int>(ar.verts.size());

  ar.tau.assign(m, std::nullopt);
  ar.projective.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    auto t = tauDim(ar.q, ar.verts[i]);
    if (!t) {
      ar.projective[i] = 1;
      continue;
    }
    int j = ar.indexOf(*t);
    if (j < 0) throw std::logic_error("buildARQuiver: translate is not a root");
    ar.tau[i] = j;
  }

  std::set<std::pair<int, int>> arrows;
  for (const auto& [s, t] : ar.q.arrows) {
    int ps = ar.indexOf(projectiveDims(ar.q, s));
    int pt = ar.indexOf(projectiveDims(ar.q, t));
    if (ps < 0 || pt < 0) throw std::logic_error("buildARQuiver: projective is not a root");
    arrows.insert({pt, ps});
  }

  // Knit: Y -> Z (Z non-projective) whenever tau Z -> Y. Iterate to a fixed
  // point; each pass only adds arrows and the arrow set is finite.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int z = 0; z < m; ++z) {
      if (!ar.tau[z]) continue;
      int tz = *ar.tau[z];
      for (int y = 0; y < m; ++y)
        if (arrows.count({tz, y}) && !arrows.count({y, z})) {
          arrows.insert({y, z});
          changed = true;
        }
    }
  }
  ar.arrows.assign(arrows.begin(), arrows.end());

  // Mesh identity at every non-projective vertex.
  for (int z = 0; z < m; ++z) {
    if (!ar.tau[z]) continue;
    DimVec sum(n, 0);
    for (const auto& [y, zz] : ar.arrows)
      if (zz == z)
        for (int i = 0; i < n; ++i) sum[i] += ar.verts[y][i];
    for (int i = 0; i < n; ++i)
      if (sum[i] != ar.verts[*ar.tau[z]][i] + ar.verts[z][i])
        throw std::logic_error("buildARQuiver: mesh identity violated");
  }

  // Acyclicity via Kahn's algorithm.
  {
    std::vector<int> indeg(m, 0);
    for (const auto& [a, b] : ar.arrows) indeg[b]++;
    std::vector<int> stack;
    for (int i = 0; i < m; ++i)
      if (indeg[i] == 0) stack.push_back(i);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (const auto& [a, b] : ar.arrows)
        if (a == v && --indeg[b] == 0) stack.push_back(b);
    }
    if (seen != m) throw std::logic_error("buildARQuiver: arrow digraph has a cycle");
  }

  ar.injective.assign(m, 1);
  for (int z = 0; z < m; ++z)
    if (ar.tau[z]) ar.injective[*ar.tau[z]] = 0;
  return ar;
}

}  // namespace dq
