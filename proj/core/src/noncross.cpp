#include "dquiver/noncross.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "dquiver/exceptional.hpp"

namespace dq {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

std::vector<int> negatedBlock(const std::vector<int>& b) {
  std::vector<int> r;
  r.reserve(b.size());
  for (int x : b) r.push_back(-x);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

void canonicalize(DPartition& p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end());
}

DPartition discretePartition(int n) {
  DPartition p;
  for (int i = 1; i <= n; ++i) {
    p.blocks.push_back({i});
    p.blocks.push_back({-i});
  }
  canonicalize(p);
  return p;
}

bool isValidDPartition(const DPartition& p, int n) {
  std::set<int> seen;
  for (const auto& b : p.blocks) {
    if (b.empty()) return false;
    for (int x : b) {
      if (x == 0 || std::abs(x) > n || !seen.insert(x).second) return false;
    }
  }
  if (static_cast<int>(seen.size()) != 2 * n) return false;
  std::set<std::vector<int>> blockSet;
  for (auto b : p.blocks) {
    std::sort(b.begin(), b.end());
    blockSet.insert(b);
  }
  int zero = 0;
  for (const auto& b : blockSet) {
    std::vector<int> nb = negatedBlock(b);
    if (!blockSet.count(nb)) return false;
    if (nb == b) {
      ++zero;
      if (b.size() == 2) return false;  // {i,-i} is not a zero block
    }
  }
  return zero <= 1;
}

namespace {

std::vector<int> boundaryPositions(const std::vector<int>& block, int n) {
  std::vector<int> pos;
  for (int x : block)
    if (std::abs(x) <= n - 1) pos.push_back(posOf(x, n));
  std::sort(pos.begin(), pos.end());
  return pos;
}

bool hasCenter(const std::vector<int>& block, int n) {
  for (int x : block)
    if (std::abs(x) == n) return true;
  return false;
}

// Hull strictly surrounds the puncture: at least two boundary points and
// every circular gap shorter than a half turn.
bool strictlyContainsCenter(const std::vector<int>& pos, int n) {
  const int M = 2 * n - 2;
  if (pos.size() < 2) return false;
  for (size_t k = 0; k < pos.size(); ++k) {
    int gap = mod(pos[(k + 1) % pos.size()] - pos[k], M);
    if (gap == 0) gap = M;
    if (gap >= n - 1) return false;
  }
  return true;
}

// Two of one set and two of the other alternate around the circle.
bool positionsInterleave(const std::vector<int>& pa, const std::vector<int>& pb) {
  std::vector<std::pair<int, int>> merged;  // (position, tag)
  for (int x : pa) merged.emplace_back(x, 0);
  for (int x : pb) merged.emplace_back(x, 1);
  std::sort(merged.begin(), merged.end());
  int runs = 0;
  const int m = static_cast<int>(merged.size());
  for (int k = 0; k < m; ++k)
    if (merged[k].second != merged[(k + 1) % m].second) ++runs;
  return runs >= 4;
}

// A spoke foot of b sits strictly inside a short hull edge of a.
bool spokeHitsHull(const std::vector<int>& pa, bool bCenter, const std::vector<int>& pb,
                   int n) {
  if (!bCenter || pa.size() < 2) return false;
  const int M = 2 * n - 2;
  for (size_t k = 0; k < pa.size(); ++k) {
    int from = pa[k];
    int gap = mod(pa[(k + 1) % pa.size()] - from, M);
    if (gap == 0 || gap >= n - 1) continue;
    for (int x : pb) {
      int d = mod(x - from, M);
      if (0 < d && d < gap) return true;
    }
  }
  return false;
}

}  // namespace

bool blocksCross(const std::vector<int>& a, const std::vector<int>& b, int n) {
  for (int x : a)
    for (int y : b)
      if (x == y) throw std::invalid_argument("blocksCross: blocks share a label");
  std::vector<int> pa = boundaryPositions(a, n), pb = boundaryPositions(b, n);
  bool ca = hasCenter(a, n), cb = hasCenter(b, n);
  bool sa = strictlyContainsCenter(pa, n), sb = strictlyContainsCenter(pb, n);
  if (positionsInterleave(pa, pb)) return true;
  if ((sa && cb) || (sb && ca) || (sa && sb)) return true;
  return spokeHitsHull(pa, cb, pb, n) || spokeHitsHull(pb, ca, pa, n);
}

bool isNoncrossing(const DPartition& p, int n) {
  if (!isValidDPartition(p, n)) return false;
  for (size_t x = 0; x < p.blocks.size(); ++x)
    for (size_t y = x + 1; y < p.blocks.size(); ++y)
      if (blocksCross(p.blocks[x], p.blocks[y], n)) return false;
  return true;
}

DPartition fMap(const SignedPerm& w) {
  SignedCycles cyc = cycleDecomp(w);
  DPartition p;
  for (const auto& c : cyc.paired) {
    std::vector<int> b = c;
    std::sort(b.begin(), b.end());
    p.blocks.push_back(negatedBlock(b));
    p.blocks.push_back(std::move(b));
  }
  std::vector<int> zero;
  for (const auto& c : cyc.balanced) zero.insert(zero.end(), c.begin(), c.end());
  if (!zero.empty()) {
    std::sort(zero.begin(), zero.end());
    p.blocks.push_back(std::move(zero));
  }
  canonicalize(p);
  return p;
}

int partitionRank(const DPartition& p, int n) {
  int nonzero = 0;
  for (const auto& b : p.blocks)
    if (negatedBlock(b) != b) ++nonzero;
  return n - nonzero / 2;
}

bool refines(const DPartition& a, const DPartition& b) {
  std::map<int, int> owner;
  for (size_t k = 0; k < b.blocks.size(); ++k)
    for (int x : b.blocks[k]) owner[x] = static_cast<int>(k);
  for (const auto& blk : a.blocks) {
    auto it = owner.find(blk[0]);
    if (it == owner.end()) return false;
    const auto& target = b.blocks[it->second];
    for (int x : blk)
      if (!std::binary_search(target.begin(), target.end(), x)) return false;
  }
  return true;
}

int NCPoset::indexOf(const DPartition& p) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it == elems.end() || *it != p) return -1;
  return static_cast<int>(it - elems.begin());
}

int NCPoset::minIndex() const {
  int idx = indexOf(discretePartition(n));
  if (idx < 0) throw std::logic_error("NCPoset: discrete partition missing");
  return idx;
}

namespace {

NCPoset finishPoset(int n, std::vector<DPartition> elems) {
  std::sort(elems.begin(), elems.end());
  NCPoset poset;
  poset.n = n;
  poset.elems = std::move(elems);
  const int m = static_cast<int>(poset.elems.size());
  poset.rank.resize(m);
  for (int i = 0; i < m; ++i) poset.rank[i] = partitionRank(poset.elems[i], n);
  poset.leq.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      poset.leq[i][j] = refines(poset.elems[i], poset.elems[j]);
  poset.coversOf.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < m && direct; ++k)
        if (k != i && k != j && poset.leq[i][k] && poset.leq[k][j]) direct = false;
      if (direct) {
        if (poset.rank[j] != poset.rank[i] + 1)
          throw std::logic_error("NCPoset: cover skips a rank");
        poset.coversOf[i].push_back(j);
      }
    }
  return poset;
}

}  // namespace

NCPoset buildNCGeometric(int n) {
  if (n > 5) throw ResourceLimitError("buildNCGeometric: n > 5 not supported");
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  for (int i = 1; i <= n; ++i) labels.push_back(-i);
  const int m = 2 * n;
  std::vector<DPartition> found;
  // Restricted growth strings enumerate every set partition once.
  std::vector<int> rgs(m, 0);
  while (true) {
    int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    DPartition p;
    p.blocks.assign(nb, {});
    for (int k = 0; k < m; ++k) p.blocks[rgs[k]].push_back(labels[k]);
    canonicalize(p);
    if (isNoncrossing(p, n)) found.push_back(std::move(p));
    // Advance the growth string.
    int k = m - 1;
    for (; k > 0; --k) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + k) + 1;
      if (rgs[k] < cap) break;
    }
    if (k == 0) break;
    ++rgs[k];
    std::fill(rgs.begin() + k + 1, rgs.end(), 0);
  }
  return finishPoset(n, std::move(found));
}

NCPoset buildNCInterval(int n) {
  if (n > 5) throw ResourceLimitError("buildNCInterval: n > 5 not supported");
  SignedPerm c = coxeterElement(n);
  std::map<DPartition, SignedPerm> image;
  for (const SignedPerm& w : allGroupD(n)) {
    if (!absLeq(w, c)) continue;
    DPartition p = fMap(w);
    if (!image.emplace(p, w).second)
      throw std::logic_error("buildNCInterval: fMap is not injective on the interval");
  }
  std::vector<DPartition> elems;
  elems.reserve(image.size());
  for (auto& [p, w] : image) elems.push_back(p);
  return finishPoset(n, std::move(elems));
}

long long countMaximalChains(const NCPoset& poset) {
  const int m = static_cast<int>(poset.elems.size());
  int top = -1;
  for (int i = 0; i < m; ++i)
    if (poset.rank[i] == poset.n) {
      if (top >= 0) throw std::logic_error("countMaximalChains: maximum not unique");
      top = i;
    }
  if (top < 0) throw std::logic_error("countMaximalChains: no maximum");
  // Count cover paths by increasing rank.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return poset.rank[x] < poset.rank[y]; });
  std::vector<long long> ways(m, 0);
  ways[poset.minIndex()] = 1;
  for (int i : order)
    for (int j : poset.coversOf[i]) ways[j] += ways[i];
  return ways[top];
}

std::vector<DPartition> chainOfSequence(const std::vector<CurveClass>& seq, int n) {
  if (!isExceptionalCurveSequence(seq, n))
    throw std::invalid_argument("chainOfSequence: not an exceptional sequence");
  SignedPerm w = identityPerm(n);
  std::vector<DPartition> chain{fMap(w)};
  for (const CurveClass& c : seq) {
    w = compose(reflectionOfClass(c, n), w);
    chain.push_back(fMap(w));
  }
  return chain;
}

BijectionReport bijectionCheck(int n, bool completeOnly) {
  NCPoset poset = buildNCInterval(n);
  BijectionReport rep;
  rep.seqCountByLen.assign(n + 1, 0);
  rep.chainCountByLen.assign(n + 1, 0);
  auto fail = [&rep](const std::string& msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = msg;
    }
  };

  // All saturated chains from the minimum, keyed by their element indices.
  std::set<std::vector<int>> chains;
  std::vector<int> cur{poset.minIndex()};
  auto dfs = [&](auto&& self) -> void {
    int len = static_cast<int>(cur.size()) - 1;
    if (!completeOnly || len == n) {
      chains.insert(cur);
      ++rep.chainCountByLen[len];
    }
    for (int j : poset.coversOf[cur.back()]) {
      cur.push_back(j);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);

  // Map every exceptional sequence through chainOfSequence.
  std::vector<std::vector<CurveClass>> seqs = enumerateSequences(n, n, false);
  seqs.push_back({});  // empty sequence <-> the one-element chain
  std::set<std::vector<int>> hit;
  for (const auto& s : seqs) {
    if (completeOnly && static_cast<int>(s.size()) != n) continue;
    ++rep.seqCountByLen[s.size()];
    std::vector<DPartition> chain = chainOfSequence(s, n);
    std::vector<int> key;
    for (const DPartition& p : chain) {
      int idx = poset.indexOf(p);
      if (idx < 0) {
        fail("sequence leaves the lattice");
        break;
      }
      if (!key.empty()) {
        const auto& cov = poset.coversOf[key.back()];
        if (std::find(cov.begin(), cov.end(), idx) == cov.end()) {
          fail("sequence step is not a cover");
          break;
        }
      }
      key.push_back(idx);
    }
    if (key.size() != chain.size()) continue;
    if (!hit.insert(key).second) fail("two sequences map to one chain");
    if (!chains.count(key)) fail("sequence maps outside the chain set");
  }
  if (hit.size() != chains.size()) fail("some chain has no sequence");
  return rep;
}

std::string partitionToString(const DPartition& p) {
  std::string s = "{";
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += ",";
    s += "{";
    for (size_t k = 0; k < p.blocks[b].size(); ++k) {
      if (k) s += ",";
      s += std::to_string(p.blocks[b][k]);
    }
    s += "}";
  }
  return s + "}";
}

}  // namespace dq
