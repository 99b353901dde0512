#include "dquiver/exceptional.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "dquiver/signed_perm.hpp"

namespace dq {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

bool isRadial(const CurveClass& c, int n) { return std::abs(c.j) == n; }

}  // namespace

int ClassTable::indexOf(const CurveClass& c) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), c);
  if (it == classes.end() || *it != c) return -1;
  return static_cast<int>(it - classes.begin());
}

bool pairOrderOK(const CurveClass& a, const CurveClass& b, int n) {
  if (a == b) return false;
  if (b == bar(a, n)) return true;
  if (isRadial(a, n) && isRadial(b, n)) {
    // Distinct feet here: equal feet is the equal or bar case.
    if ((a.j > 0) == (b.j > 0)) return b.i > a.i;
    return b.i < a.i;
  }
  auto orbits = [n](const CurveClass& c) {
    std::vector<int> o{c.i};
    if (!isRadial(c, n)) o.push_back(std::abs(c.j));
    return o;
  };
  for (int oa : orbits(a))
    for (int ob : orbits(b))
      if (oa == ob && !clockwiseFrom(b, a, oa, n)) return false;
  return true;
}

bool hasForbiddenTriple(const std::vector<CurveClass>& classes, int n) {
  std::vector<std::pair<int, int>> feet;  // (foot, puncture sign)
  for (const CurveClass& c : classes)
    if (isRadial(c, n)) feet.emplace_back(c.i, c.j > 0 ? 1 : -1);
  std::sort(feet.begin(), feet.end());
  feet.erase(std::unique(feet.begin(), feet.end()), feet.end());
  const int m = static_cast<int>(feet.size());
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int z = y + 1; z < m; ++z)
        if (feet[x].first < feet[y].first && feet[y].first < feet[z].first &&
            feet[x].second == feet[z].second && feet[y].second == -feet[x].second)
          return true;
  return false;
}

CurveGraph buildGraph(const std::vector<CurveClass>& classes, int n) {
  CurveGraph g;
  g.vcount = 2 * n - 1;
  const int center = 2 * n - 2;
  for (size_t k = 0; k < classes.size(); ++k) {
    const CurveClass& c = classes[k];
    if (isRadial(c, n)) {
      int s = c.j > 0 ? 1 : -1;
      g.edges.push_back({posOf(c.i, n), center, static_cast<int>(k), s});
      g.edges.push_back({posOf(-c.i, n), center, static_cast<int>(k), -s});
    } else {
      g.edges.push_back({posOf(c.i, n), posOf(c.j, n), static_cast<int>(k), 0});
      g.edges.push_back({posOf(-c.i, n), posOf(-c.j, n), static_cast<int>(k), 0});
    }
  }
  g.adj.resize(g.vcount);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    g.adj[g.edges[e].a].emplace_back(g.edges[e].b, static_cast<int>(e));
    g.adj[g.edges[e].b].emplace_back(g.edges[e].a, static_cast<int>(e));
  }
  return g;
}

namespace {

int cycleSpaceDim(const CurveGraph& g, const std::vector<bool>& keepEdge) {
  std::vector<int> parent(g.vcount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.vcount, ecount = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (!keepEdge[e]) continue;
    ++ecount;
    int ra = find(g.edges[e].a), rb = find(g.edges[e].b);
    if (ra != rb) parent[ra] = rb, --comps;
  }
  return ecount - g.vcount + comps;
}

// Any vertex-simple cycle, as its edge ids in cyclic order; empty if acyclic.
std::vector<int> findCycle(const CurveGraph& g) {
  std::vector<char> state(g.vcount, 0);  // 0 new, 1 on path, 2 done
  std::vector<int> viaEdge(g.vcount, -1), from(g.vcount, -1);
  std::vector<int> cycle;

  // Depth-first search; an edge (other than the one we arrived by) back onto
  // the current path closes a cycle. Parallel edges have distinct ids, so a
  // digon is found this way too.
  auto dfs = [&](auto&& self, int u) -> bool {
    state[u] = 1;
    for (auto [w, e] : g.adj[u]) {
      if (e == viaEdge[u]) continue;
      if (state[w] == 1) {
        cycle.push_back(e);
        for (int x = u; x != w; x = from[x]) cycle.push_back(viaEdge[x]);
        return true;
      }
      if (state[w] == 0) {
        viaEdge[w] = e;
        from[w] = u;
        if (self(self, w)) return true;
      }
    }
    state[u] = 2;
    return false;
  };
  for (int v = 0; v < g.vcount; ++v)
    if (state[v] == 0 && dfs(dfs, v)) return cycle;
  return {};
}

}  // namespace

bool cycleConditionOK(const std::vector<CurveClass>& classes, int n) {
  for (const CurveClass& c : classes)
    if (!validClass(c, n)) throw std::invalid_argument("cycleConditionOK: invalid class");
  CurveGraph g = buildGraph(classes, n);
  std::vector<bool> keep(g.edges.size(), true);
  int cdim = cycleSpaceDim(g, keep);
  if (cdim == 0) return true;
  if (cdim != 2) return false;

  std::vector<int> cyc = findCycle(g);
  const int center = 2 * n - 2, M = 2 * n - 2;
  std::vector<int> radius;
  for (int e : cyc)
    if (g.edges[e].sign != 0) radius.push_back(e);
  if (radius.size() != 2) return false;  // a cycle avoiding the puncture
  if (g.edges[radius[0]].sign + g.edges[radius[1]].sign != 0) return false;

  int u = g.edges[radius[0]].a, v = g.edges[radius[1]].a;  // feet (b is the center)
  if (u != v) {
    // One arc from u to v must span less than a half turn and contain the
    // whole chord path.
    int d = mod(v - u, M);
    if (d >= n - 1) {
      std::swap(u, v);
      d = M - d;
    }
    if (d >= n - 1) return false;
    for (int e : cyc)
      for (int x : {g.edges[e].a, g.edges[e].b}) {
        if (x == center || x == u || x == v) continue;
        int dx = mod(x - u, M);
        if (dx <= 0 || dx >= d) return false;
      }
  }
  // With the wedge pair removed nothing else may form a cycle.
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (g.edges[e].cls == g.edges[radius[0]].cls || g.edges[e].cls == g.edges[radius[1]].cls)
      keep[e] = false;
  return cycleSpaceDim(g, keep) == 0;
}

namespace {

void checkCollectionInput(const std::vector<CurveClass>& classes, int n) {
  if (static_cast<int>(classes.size()) > n)
    throw std::invalid_argument("more classes than the rank allows");
  for (const CurveClass& c : classes)
    if (!validClass(c, n)) throw std::invalid_argument("invalid class");
  std::vector<CurveClass> s = classes;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("duplicate class in collection");
}

}  // namespace

bool isExceptionalCollection(const std::vector<CurveClass>& classes, int n) {
  checkCollectionInput(classes, n);
  for (size_t x = 0; x < classes.size(); ++x)
    for (size_t y = x + 1; y < classes.size(); ++y)
      if (isBadPair(classes[x], classes[y], n)) return false;
  return cycleConditionOK(classes, n) && !hasForbiddenTriple(classes, n);
}

bool isExceptionalCurveSequence(const std::vector<CurveClass>& seq, int n) {
  if (static_cast<int>(seq.size()) > n)
    throw std::invalid_argument("sequence longer than the rank");
  for (const CurveClass& c : seq)
    if (!validClass(c, n)) throw std::invalid_argument("invalid class");
  for (size_t x = 0; x < seq.size(); ++x)
    for (size_t y = x + 1; y < seq.size(); ++y) {
      if (seq[x] == seq[y]) return false;
      if (isBadPair(seq[x], seq[y], n)) return false;
      if (!pairOrderOK(seq[x], seq[y], n)) return false;
    }
  return cycleConditionOK(seq, n) && !hasForbiddenTriple(seq, n);
}

bool oracleIsExceptionalSequence(const std::vector<CurveClass>& seq, int n) {
  if (static_cast<int>(seq.size()) > n)
    throw std::invalid_argument("sequence longer than the rank");
  std::vector<Rep> reps;
  reps.reserve(seq.size());
  for (const CurveClass& c : seq) reps.push_back(repOf(c, n));
  return isExceptionalSequenceReps(reps);
}

ClassTable buildClassTable(int n) {
  ClassTable t;
  t.n = n;
  t.classes = allClasses(n);
  const int m = static_cast<int>(t.classes.size());
  std::vector<Rep> reps;
  reps.reserve(m);
  for (const CurveClass& c : t.classes) reps.push_back(repOf(c, n));
  t.bad.assign(m, std::vector<char>(m, 0));
  t.pairGeo.assign(m, std::vector<char>(m, 0));
  t.pairHom.assign(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      t.bad[a][b] = isBadPair(t.classes[a], t.classes[b], n);
      t.pairGeo[a][b] = !t.bad[a][b] && pairOrderOK(t.classes[a], t.classes[b], n);
      t.pairHom[a][b] =
          homDim(reps[b], reps[a]) == 0 && ext1Dim(reps[b], reps[a]) == 0;
    }
  return t;
}

namespace {

struct Enumerator {
  const ClassTable& t;
  int maxLen;
  std::vector<int> cur;
  std::vector<CurveClass> curClasses;

  bool pairwiseOK(int next, const std::vector<std::vector<char>>& table) const {
    for (int p : cur)
      if (!table[p][next]) return false;
    return true;
  }

  bool geoFull(int next) {
    if (!pairwiseOK(next, t.pairGeo)) return false;
    curClasses.push_back(t.classes[next]);
    bool ok = cycleConditionOK(curClasses, t.n) && !hasForbiddenTriple(curClasses, t.n);
    curClasses.pop_back();
    return ok;
  }
};

}  // namespace

std::vector<std::vector<CurveClass>> enumerateSequences(int n, int maxLen, bool oracle) {
  ClassTable t = buildClassTable(n);
  Enumerator en{t, std::min(maxLen, n), {}, {}};
  std::vector<std::vector<CurveClass>> out;
  const int m = static_cast<int>(t.classes.size());
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(en.cur.size()) == en.maxLen) return;
    for (int c = 0; c < m; ++c) {
      bool ok = oracle ? en.pairwiseOK(c, t.pairHom) : en.geoFull(c);
      if (!ok) continue;
      en.cur.push_back(c);
      en.curClasses.push_back(t.classes[c]);
      out.push_back(en.curClasses);
      self(self);
      en.cur.pop_back();
      en.curClasses.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::vector<SequenceMismatch> crossValidate(int n, int maxLen) {
  if (n > 6) throw ResourceLimitError("crossValidate: supported up to rank 6");
  ClassTable t = buildClassTable(n);
  Enumerator en{t, std::min(maxLen, n), {}, {}};
  std::vector<SequenceMismatch> out;
  const int m = static_cast<int>(t.classes.size());
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(en.cur.size()) == en.maxLen) return;
    for (int c = 0; c < m; ++c) {
      bool geo = en.geoFull(c);
      bool hom = en.pairwiseOK(c, t.pairHom);
      if (geo != hom) {
        en.curClasses.push_back(t.classes[c]);
        out.push_back({en.curClasses, geo, hom});
        en.curClasses.pop_back();
      }
      if (!geo || !hom) continue;
      en.cur.push_back(c);
      en.curClasses.push_back(t.classes[c]);
      self(self);
      en.cur.pop_back();
      en.curClasses.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

}  // namespace dq
